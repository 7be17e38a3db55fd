#include "nilcox/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace nilcox {

namespace {

// Quotient of integer polynomials, exact. a / b with b monic-leading divisor.
std::vector<mpz_class> exact_poly_div(std::vector<mpz_class> a,
                                      const std::vector<mpz_class>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<mpz_class> q;
  if (a.empty()) return q;
  if (a.size() < b.size()) throw std::logic_error("poly division underflow");
  q.assign(a.size() - b.size() + 1, mpz_class(0));
  const mpz_class& lead = b.back();
  for (size_t i = a.size(); i-- >= b.size();) {
    mpz_class c = a[i] / lead;
    if (c * lead != a[i]) throw std::logic_error("inexact polynomial division");
    q[i - (b.size() - 1)] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("nonzero remainder in poly division");
  return q;
}

// Phi_N via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
std::vector<mpz_class> cyclotomic_poly(int N, std::map<int, std::vector<mpz_class>>& memo) {
  auto it = memo.find(N);
  if (it != memo.end()) return it->second;
  std::vector<mpz_class> num(N + 1, mpz_class(0));
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    num = exact_poly_div(std::move(num), cyclotomic_poly(d, memo));
  }
  memo[N] = num;
  return num;
}

}  // namespace

CycloField::CycloField(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  static std::map<int, std::vector<mpz_class>> memo;
  static std::mutex memo_mu;
  {
    std::lock_guard<std::mutex> lk(memo_mu);
    phi_poly_ = cyclotomic_poly(N, memo);
  }
  phi_ = static_cast<int>(phi_poly_.size()) - 1;

  xi_.resize(N_);
  std::vector<mpz_class> p(1, mpz_class(1));
  reduce(p);
  xi_[0] = p;
  for (int k = 1; k < N_; ++k) {
    p.insert(p.begin(), mpz_class(0));  // multiply by x
    reduce(p);
    xi_[k] = p;
  }
}

const CycloField& CycloField::get(int N) {
  static std::map<int, std::unique_ptr<CycloField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[N];
  if (!slot) slot.reset(new CycloField(N));
  return *slot;
}

void CycloField::reduce(std::vector<mpz_class>& c) const {
  // x^k = x^(k-phi) * (x^phi mod Phi); eliminate top coefficients downward.
  for (size_t k = c.size(); k-- > (size_t)phi_;) {
    if (c[k] == 0) continue;
    size_t base = k - phi_;
    for (int j = 0; j < phi_; ++j) c[base + j] -= c[k] * phi_poly_[j];
    c[k] = 0;
  }
  c.resize(phi_);
}

Cyclotomic CycloField::zero() const {
  Cyclotomic r;
  r.F_ = this;
  r.num_.assign(phi_, mpz_class(0));
  r.den_ = 1;
  r.normalize();
  return r;
}

Cyclotomic CycloField::one() const { return integer(1); }

Cyclotomic CycloField::integer(long v) const {
  Cyclotomic r;
  r.F_ = this;
  r.num_.assign(phi_, mpz_class(0));
  r.num_[0] = v;
  r.den_ = 1;
  r.normalize();
  return r;
}

Cyclotomic CycloField::rational(const mpq_class& q) const {
  Cyclotomic r;
  r.F_ = this;
  r.num_.assign(phi_, mpz_class(0));
  r.num_[0] = q.get_num();
  r.den_ = q.get_den();
  r.normalize();
  return r;
}

Cyclotomic CycloField::xi_pow(long k) const {
  long kk = k % N_;
  if (kk < 0) kk += N_;
  Cyclotomic r;
  r.F_ = this;
  r.num_ = xi_[kk];
  r.den_ = 1;
  r.normalize();
  return r;
}

void Cyclotomic::normalize() {
  if (!F_) return;
  bool allzero = true;
  for (const auto& c : num_)
    if (c != 0) {
      allzero = false;
      break;
    }
  if (allzero) {
    F_ = nullptr;
    num_.clear();
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

const CycloField* Cyclotomic::common_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.F_ && b.F_ && a.F_ != b.F_)
    throw std::invalid_argument("cyclotomic conductor mismatch: " +
                                std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()));
  return a.F_ ? a.F_ : b.F_;
}

bool Cyclotomic::is_zero() const { return F_ == nullptr; }

bool Cyclotomic::is_rational() const {
  if (!F_) return true;
  for (size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  if (!F_) return mpq_class(0);
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const CycloField* F = common_field(*this, o);
  if (!F) return Cyclotomic();
  if (!F_) return o;
  if (!o.F_) return *this;
  Cyclotomic r;
  r.F_ = F;
  r.num_.resize(F->phi_);
  r.den_ = den_ * o.den_;
  for (int j = 0; j < F->phi_; ++j) r.num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  const CycloField* F = common_field(*this, o);
  if (!F_ || !o.F_) return Cyclotomic();
  int phi = F->phi_;
  std::vector<mpz_class> prod(2 * phi - 1, mpz_class(0));
  for (int i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.num_[j] == 0) continue;
      prod[i + j] += num_[i] * o.num_[j];
    }
  }
  F->reduce(prod);
  Cyclotomic r;
  r.F_ = F;
  r.num_ = std::move(prod);
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::mul_rational(const mpq_class& q) const {
  if (!F_ || q == 0) return Cyclotomic();
  Cyclotomic r = *this;
  for (auto& c : r.num_) c *= q.get_num();
  r.den_ *= q.get_den();
  r.normalize();
  return r;
}

// Extended Euclid over Q[x]: find u with u * a = 1 mod Phi.
Cyclotomic Cyclotomic::inv() const {
  if (!F_) throw std::domain_error("division by zero in Q(xi)");
  const CycloField* F = F_;
  using QP = std::vector<mpq_class>;
  auto deg = [](const QP& p) -> int {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return (int)i;
    return -1;
  };
  QP r0(F->phi_poly_.size()), r1(num_.size());
  for (size_t i = 0; i < F->phi_poly_.size(); ++i) r0[i] = mpq_class(F->phi_poly_[i]);
  for (size_t i = 0; i < num_.size(); ++i) r1[i] = mpq_class(num_[i], den_);
  QP s0(1, mpq_class(0)), s1(1, mpq_class(1));
  while (deg(r1) > 0) {
    // r0 = q*r1 + r2
    QP q(deg(r0) - deg(r1) + 1, mpq_class(0));
    QP r2 = r0;
    for (int i = deg(r0); i >= deg(r1); --i) {
      if (r2[i] == 0) continue;
      mpq_class c = r2[i] / r1[deg(r1)];
      q[i - deg(r1)] = c;
      for (int j = 0; j <= deg(r1); ++j) r2[i - deg(r1) + j] -= c * r1[j];
    }
    // s2 = s0 - q*s1
    QP s2(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r1) != 0) throw std::logic_error("Phi_N not coprime with nonzero element");
  mpq_class lead = r1[0];
  // inverse = s1 / lead, reduced mod Phi
  QP u(s1.size());
  for (size_t i = 0; i < s1.size(); ++i) u[i] = s1[i] / lead;
  // common denominator
  mpz_class den(1);
  for (auto& c : u) {
    c.canonicalize();
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<mpz_class> numv(u.size());
  for (size_t i = 0; i < u.size(); ++i) numv[i] = u[i].get_num() * (den / u[i].get_den());
  F->reduce(numv);
  Cyclotomic r;
  r.F_ = F;
  r.num_ = std::move(numv);
  r.den_ = den;
  r.normalize();
  if ((*this * r) != F->one()) throw std::logic_error("cyclotomic inverse check failed");
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (!F_ || !o.F_) return F_ == o.F_;
  common_field(*this, o);
  return den_ == o.den_ && num_ == o.num_;
}

Cyclotomic Cyclotomic::conj() const {
  if (!F_) return Cyclotomic();
  const CycloField* F = F_;
  std::vector<mpz_class> acc(F->phi_, mpz_class(0));
  for (int j = 0; j < F->phi_; ++j) {
    if (num_[j] == 0) continue;
    const auto& rep = F->xi_[(F->N_ - j) % F->N_];
    for (int t = 0; t < F->phi_; ++t) acc[t] += num_[j] * rep[t];
  }
  Cyclotomic r;
  r.F_ = F;
  r.num_ = std::move(acc);
  r.den_ = den_;
  r.normalize();
  return r;
}

mpq_class Cyclotomic::norm_sq() const {
  Cyclotomic p = *this * conj();
  if (!p.is_rational())
    throw std::domain_error("norm_sq: x * conj(x) not rational for this element");
  return p.rational_value();
}

mpz_class Cyclotomic::content() const {
  mpz_class g(0);
  for (const auto& c : num_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

mpq_class Cyclotomic::coeff(int j) const {
  if (!F_) return mpq_class(0);
  mpq_class q(num_[j], den_);
  q.canonicalize();
  return q;
}

std::string Cyclotomic::str() const {
  if (!F_) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < F_->phi_; ++j) {
    if (num_[j] == 0) continue;
    mpq_class c(num_[j], den_);
    c.canonicalize();
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (j == 0 || a != 1) os << a.get_str();
    if (j > 0) {
      if (a != 1) os << "*";
      os << "xi";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

size_t Cyclotomic::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  if (!F_) return h;
  mix((size_t)F_->conductor());
  mix(mpz_get_ui(den_.get_mpz_t()));
  for (const auto& c : num_) {
    mix((size_t)mpz_sgn(c.get_mpz_t()));
    mix(mpz_get_ui(c.get_mpz_t()));
  }
  return h;
}

}  // namespace nilcox
