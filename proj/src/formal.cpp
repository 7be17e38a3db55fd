#include "nilcox/formal.hpp"

#include <sstream>

#include "nilcox/rings.hpp"

namespace nilcox {

FormalScalar quantum_binomial_product(const FormalRing& R, long n, long k) {
  if (k < 0) return FormalScalar();
  FormalScalar num = R.one(), den = R.one();
  for (long i = 1; i <= k; ++i) {
    num *= quantum_int(R, n - k + i);
    den *= quantum_int(R, i);
  }
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("Gaussian binomial division not exact");
  return *q;
}

FormalScalar FormalScalar::operator-() const {
  FormalScalar r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

FormalScalar FormalScalar::operator+(const FormalScalar& o) const {
  FormalScalar r = *this;
  for (const auto& kv : o.c_) {
    auto it = r.c_.find(kv.first);
    if (it == r.c_.end()) {
      r.c_[kv.first] = kv.second;
    } else {
      it->second += kv.second;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

FormalScalar FormalScalar::operator-(const FormalScalar& o) const { return *this + (-o); }

FormalScalar FormalScalar::operator*(const FormalScalar& o) const {
  FormalScalar r;
  for (const auto& a : c_)
    for (const auto& b : o.c_) {
      mpq_class c = a.second * b.second;
      long e = a.first + b.first;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        if (c != 0) r.c_[e] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

FormalScalar FormalScalar::conj() const {
  FormalScalar r;
  for (const auto& kv : c_) r.c_[-kv.first] = kv.second;
  return r;
}

std::optional<FormalScalar> FormalScalar::divide_exact(const FormalScalar& o) const {
  if (o.is_zero()) return std::nullopt;
  // Cancel top terms; the top exponent of the remainder strictly decreases.
  long lo_b = o.c_.begin()->first;
  long hi_b = o.c_.rbegin()->first;
  const mpq_class& lead = o.c_.rbegin()->second;
  FormalScalar rem = *this;
  FormalScalar quot;
  while (!rem.is_zero()) {
    long hi_r = rem.c_.rbegin()->first;
    long lo_r = rem.c_.begin()->first;
    if (hi_r - lo_r < hi_b - lo_b) return std::nullopt;
    mpq_class c = rem.c_.rbegin()->second / lead;
    long e = hi_r - hi_b;
    quot.c_[e] += c;
    if (quot.c_[e] == 0) quot.c_.erase(e);
    rem = rem - FormalScalar::p_pow(e, c) * o;
  }
  return quot;
}

std::optional<std::pair<mpq_class, long>> FormalScalar::as_monomial() const {
  if (c_.size() != 1) return std::nullopt;
  return std::make_pair(c_.begin()->second, c_.begin()->first);
}

mpq_class FormalScalar::eval_at_one() const {
  mpq_class s(0);
  for (const auto& kv : c_) s += kv.second;
  return s;
}

Cyclotomic FormalScalar::specialize(const CycloField& F) const {
  Cyclotomic s = F.zero();
  for (const auto& kv : c_) s += F.xi_pow(kv.first).mul_rational(kv.second);
  return s;
}

std::string FormalScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& kv : c_) {
    const mpq_class& c = kv.second;
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (kv.first == 0 || a != 1) os << a.get_str();
    if (kv.first != 0) {
      if (a != 1) os << "*";
      os << "p";
      if (kv.first != 1) os << "^" << kv.first;
    }
  }
  return os.str();
}

}  // namespace nilcox
