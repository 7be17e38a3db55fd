#pragma once

#include <optional>

#include "nilcox/demazure.hpp"

namespace nilcox {

/// Xi(a,b,i,k) = d_{w(a,b,i)}(x_1^k x_2^(a+b+1-k)), a scalar (degree 0).
template <class Ring>
typename Ring::Scalar xi_bruteforce(const Ring& R, long a, long b, int i, long k) {
  if (k < 0 || k > a + b + 1) throw std::invalid_argument("xi: k out of range");
  Exps e(R.n, 0);
  e[0] = (int)k;
  e[1] = (int)(a + b + 1 - k);
  auto f = MultiPoly<typename Ring::Scalar>::monomial(R.n, std::move(e), R.one());
  return word_apply(R, abi_word(R.n, AbiTriple{a, b, i}), f).scalar_value();
}

/// Closed formula for Xi_m(a, i) = Xi(a, 3m-1-a, i, 2m) at the root of
/// unity (n = 3). Zero outside the support m-1 <= a <= 2m; independent
/// of i. Conventions: b = 2*beta+1 or 2*beta+2, m = 2d or 2d+1, and
/// bottom = d unless exactly when m, a, b are all odd (else d-1).
Cyclotomic xi_closed_formula(long a, int m);

/// Quantum-binomial factor of the closed formula, before units: the pair
/// (m-1-bottom, beta-bottom), or nullopt outside the support.
std::optional<std::pair<long, long>> xi_binomial_indices(long a, int m);

enum class XiCaseStatus { ok, mismatch, out_of_scope };

/// Check of the even-a / odd-b standard-regime formula for
/// d_{(a,b,i)}(x_1^k x_2^(a+b+1-k)) in the formal ring: the bracketed
/// product (without the unit eta') must match brute force up to +-p^e.
/// The observed unit is reported, never asserted.
struct XiFormalReport {
  XiCaseStatus status = XiCaseStatus::out_of_scope;
  int sign = 0;
  long p_exp = 0;
};

XiFormalReport xi_formal_case_check(long a, long b, int i, long k);

}  // namespace nilcox
