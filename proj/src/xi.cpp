#include "nilcox/xi.hpp"

namespace nilcox {

namespace {

struct XiParams {
  long beta;
  long d;
  long bottom;
};

std::optional<XiParams> xi_params(long a, int m) {
  long b = 3L * m - 1 - a;
  if (a < 0 || b < 0) return std::nullopt;
  long beta = (b % 2 == 1) ? (b - 1) / 2 : b / 2 - 1;
  long d = m / 2;
  bool all_odd = (m % 2 == 1) && (a % 2 == 1) && (b % 2 == 1);
  long bottom = all_odd ? d : d - 1;
  XiParams p{beta, d, bottom};
  if (beta < bottom || beta > m - 1) return std::nullopt;
  return p;
}

}  // namespace

std::optional<std::pair<long, long>> xi_binomial_indices(long a, int m) {
  auto p = xi_params(a, m);
  if (!p) return std::nullopt;
  return std::make_pair((long)m - 1 - p->bottom, p->beta - p->bottom);
}

Cyclotomic xi_closed_formula(long a, int m) {
  CycloRing R(3, m);
  auto p = xi_params(a, m);
  if (!p) return R.zero();
  long beta = p->beta, d = p->d;

  Cyclotomic val = R.integer((d % 2 == 0 ? 1 : -1) * (long)m * m);
  val *= quantum_binomial(R, (long)m - 1 - p->bottom, beta - p->bottom);
  val *= R.p_pow(beta * (beta - 1) - 7 * d);
  bool m_even = m % 2 == 0;
  bool a_even = a % 2 == 0;
  if (m_even && a_even) {
    val *= R.p_pow(-3 * beta * d + beta - 1);
  } else if (m_even && !a_even) {
    val *= R.p_pow(-3 * beta * d + 5 * beta + 3);
    val = -val;
  } else if (!m_even && a_even) {
    val *= R.p_pow(-9 * beta * d - beta - 2);
    if (beta % 2 == 0) val = -val;
  } else {
    val *= R.p_pow(-9 * beta * d - 2 * beta - 3);
    if (beta % 2 == 0) val = -val;
  }
  return val;
}

XiFormalReport xi_formal_case_check(long a, long b, int i, long k) {
  XiFormalReport rep;
  if (a % 2 != 0 || b % 2 != 1 || a <= 0 || b <= 0 || k <= 0 || k >= a + b + 1) {
    rep.status = XiCaseStatus::out_of_scope;
    return rep;
  }
  FormalRing R(3);
  long alpha = a / 2 - 1;
  long beta = (b - 1) / 2;

  FormalScalar body = quantum_factorial(R, alpha) * quantum_factorial(R, beta);
  body *= quantum_int(R, alpha + beta + 2 - k);
  FormalScalar qmq = R.q_pow(1) - R.q_pow(-1);
  for (long t = 0; t < alpha + beta + 1; ++t) body *= qmq;
  // Product-form binomials: the second factor's top alpha+beta+1-k goes
  // negative for large k, and the identity only holds with the product
  // extension (the 0-outside-range convention breaks it there).
  FormalScalar sum;
  for (long j = 0; j <= beta; ++j) {
    FormalScalar term = quantum_binomial_product(R, k - 1, beta - j) *
                        quantum_binomial_product(R, alpha + beta + 1 - k, j);
    term *= R.q_pow(j * (-3 * (alpha + beta + 2) + 2 * k));
    sum += term;
  }
  body *= sum;

  FormalScalar brute = xi_bruteforce(R, a, b, i, k);
  if (body.is_zero() || brute.is_zero()) {
    rep.status = (body.is_zero() && brute.is_zero()) ? XiCaseStatus::ok : XiCaseStatus::mismatch;
    return rep;
  }
  auto quo = brute.divide_exact(body);
  if (!quo) {
    rep.status = XiCaseStatus::mismatch;
    return rep;
  }
  auto mono = quo->as_monomial();
  if (!mono || (mono->first != 1 && mono->first != -1)) {
    rep.status = XiCaseStatus::mismatch;
    return rep;
  }
  rep.status = XiCaseStatus::ok;
  rep.sign = mono->first == 1 ? 1 : -1;
  rep.p_exp = mono->second;
  return rep;
}

}  // namespace nilcox
