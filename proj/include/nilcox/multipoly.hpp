#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcox {

/// Exponent vector; position k holds the exponent of x_{k+1}.
using Exps = std::vector<int>;

/// Sparse multivariate polynomial over a scalar ring (FormalScalar or
/// Cyclotomic). No zero coefficients are stored.
template <class Scalar>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {}

  static MultiPoly monomial(int n, Exps e, Scalar c) {
    MultiPoly p(n);
    p.add_term(std::move(e), std::move(c));
    return p;
  }
  static MultiPoly constant(int n, Scalar c) { return monomial(n, Exps(n, 0), std::move(c)); }
  static MultiPoly variable(int n, int pos, Scalar one) {
    Exps e(n, 0);
    e[pos] = 1;
    return monomial(n, std::move(e), std::move(one));
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const std::map<Exps, Scalar>& terms() const { return t_; }

  void add_term(Exps e, Scalar c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r(n_);
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        Exps e = e1;
        for (int k = 0; k < n_; ++k) e[k] += e2[k];
        r.add_term(std::move(e), c1 * c2);
      }
    return r;
  }
  MultiPoly scaled(const Scalar& c) const {
    MultiPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : t_) r.add_term(e, cc * c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Total degree of the unique degree present; throws if inhomogeneous.
  int degree() const {
    if (t_.empty()) return -1;
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int v : e) s += v;
      if (d < 0) d = s;
      else if (d != s) throw std::domain_error("polynomial is not homogeneous");
    }
    return d;
  }

  /// The coefficient of x^e (zero scalar if absent).
  Scalar coeff(const Exps& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar() : it->second;
  }

  /// For a degree-0 polynomial, its scalar value.
  Scalar scalar_value() const {
    if (t_.empty()) return Scalar();
    if (t_.size() != 1 || t_.begin()->first != Exps(n_, 0))
      throw std::domain_error("polynomial is not a scalar");
    return t_.begin()->second;
  }

  /// Exact division by the binomial linear form x_a - c * x_b (positions),
  /// by synthetic division in the x_a direction. Throws on nonzero remainder.
  MultiPoly divide_by_linear(int a, int b, const Scalar& c) const {
    // group terms by x_a exponent
    std::map<int, MultiPoly> layers;
    int dmax = 0;
    for (const auto& [e, coef] : t_) {
      Exps e2 = e;
      int k = e2[a];
      e2[a] = 0;
      layers.try_emplace(k, MultiPoly(n_)).first->second.add_term(std::move(e2), coef);
      dmax = std::max(dmax, k);
    }
    // q_{k-1} = f_k + (c x_b) q_k, remainder = f_0 + (c x_b) q_0
    MultiPoly q(n_), carry(n_);
    for (int k = dmax; k >= 1; --k) {
      MultiPoly fk = layers.count(k) ? layers[k] : MultiPoly(n_);
      MultiPoly qk = fk + carry;
      for (const auto& [e, coef] : qk.t_) {
        Exps e2 = e;
        e2[a] += k - 1;
        q.add_term(std::move(e2), coef);
      }
      // carry = c * x_b * q_k
      MultiPoly nxt(n_);
      for (const auto& [e, coef] : qk.t_) {
        Exps e2 = e;
        e2[b] += 1;
        nxt.add_term(std::move(e2), coef * c);
      }
      carry = std::move(nxt);
    }
    MultiPoly rem = (layers.count(0) ? layers[0] : MultiPoly(n_)) + carry;
    if (!rem.is_zero()) throw std::logic_error("inexact division by linear form");
    return q;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int k = 0; k < n_; ++k) {
        if (e[k] == 0) continue;
        s += "*x" + std::to_string(k + 1);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
      }
    }
    return s;
  }

 private:
  int n_ = 0;
  std::map<Exps, Scalar> t_;
};

template <class Ring>
MultiPoly<typename Ring::Scalar> make_variable(const Ring& R, int pos) {
  return MultiPoly<typename Ring::Scalar>::variable(R.n, pos, R.one());
}

}  // namespace nilcox
