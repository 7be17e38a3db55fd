#pragma once

#include "nilcox/cyclotomic.hpp"
#include "nilcox/formal.hpp"

namespace nilcox {

/// Scalars before specialization: Laurent polynomials in p over Q, where
/// z = p^2 and q = p^(-n).
struct FormalRing {
  using Scalar = FormalScalar;

  int n;

  explicit FormalRing(int n_) : n(n_) {}

  Scalar zero() const { return FormalScalar(); }
  Scalar one() const { return FormalScalar::integer(1); }
  Scalar integer(long v) const { return FormalScalar::integer(v); }
  Scalar rational(const mpq_class& q) const { return FormalScalar::rational(q); }
  Scalar p_pow(long e) const { return FormalScalar::p_pow(e); }
  Scalar z_pow(long e) const { return FormalScalar::p_pow(2 * e); }
  Scalar q_pow(long e) const { return FormalScalar::p_pow(-(long)n * e); }
};

/// Scalars at the root of unity: Q(xi) for xi a primitive 2nm-th root of
/// unity, with zeta = xi^2 (primitive nm-th root) and q = xi^(-n).
struct CycloRing {
  using Scalar = Cyclotomic;

  int n;
  int m;
  const CycloField* F;

  CycloRing(int n_, int m_) : n(n_), m(m_), F(&CycloField::get(2 * n_ * m_)) {}

  Scalar zero() const { return Cyclotomic(); }
  Scalar one() const { return F->one(); }
  Scalar integer(long v) const { return F->integer(v); }
  Scalar rational(const mpq_class& q) const { return F->rational(q); }
  Scalar p_pow(long e) const { return F->xi_pow(e); }
  Scalar z_pow(long e) const { return F->xi_pow(2 * e); }
  Scalar q_pow(long e) const { return F->xi_pow(-(long)n * e); }
  Scalar zeta_pow(long e) const { return z_pow(e); }
};

/// Balanced quantum integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k), with
/// [-k] = -[k] and [0] = 0.
template <class Ring>
typename Ring::Scalar quantum_int(const Ring& R, long k) {
  if (k < 0) {
    auto v = quantum_int(R, -k);
    return R.zero() - v;
  }
  auto s = R.zero();
  for (long j = 0; j < k; ++j) s += R.q_pow(k - 1 - 2 * j);
  return s;
}

template <class Ring>
typename Ring::Scalar quantum_factorial(const Ring& R, long k) {
  auto s = R.one();
  for (long j = 2; j <= k; ++j) s *= quantum_int(R, j);
  return s;
}

/// Balanced quantum binomial [k choose c], computed by the Pascal recurrence
/// [k c] = q^c [k-1 c] + q^(c-k) [k-1 c-1], so no division by quantum
/// integers is ever needed (they can vanish at roots of unity).
template <class Ring>
typename Ring::Scalar quantum_binomial(const Ring& R, long k, long c) {
  if (c < 0 || c > k || k < 0) return R.zero();
  std::vector<typename Ring::Scalar> row(1, R.one());
  for (long kk = 1; kk <= k; ++kk) {
    std::vector<typename Ring::Scalar> next(kk + 1, R.zero());
    for (long cc = 0; cc <= kk; ++cc) {
      if (cc <= kk - 1) next[cc] += R.q_pow(cc) * row[cc];
      if (cc >= 1) next[cc] += R.q_pow(cc - kk) * row[cc - 1];
    }
    row = std::move(next);
  }
  return row[c];
}

/// Product-form balanced Gaussian binomial [n choose k] = prod_{i=1..k}
/// [n-k+i]/[i], which extends to negative n (where the Pascal-range
/// convention would give 0). Formal ring only; the division is exact.
FormalScalar quantum_binomial_product(const FormalRing& R, long n, long k);

}  // namespace nilcox
