#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nilcox/algebra.hpp"
#include "nilcox/serial.hpp"

namespace nilcox {

struct SuiteResult {
  std::vector<std::string> failures;
  long checks = 0;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

inline MultiPoly<FormalScalar> random_formal_poly(const FormalRing& R, std::mt19937_64& rng,
                                                  int maxdeg, int terms = 2) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(1, 3), dz(-2, 2);
  MultiPoly<FormalScalar> f(R.n);
  for (int t = 0; t < terms; ++t) {
    Exps e(R.n, 0);
    int deg = dd(rng);
    std::uniform_int_distribution<int> dv(0, R.n - 1);
    for (int k = 0; k < deg; ++k) e[dv(rng)] += 1;
    f.add_term(std::move(e), FormalScalar::p_pow(2 * dz(rng), dc(rng)));
  }
  return f;
}

inline CPoly random_cyclo_poly(const CycloRing& R, std::mt19937_64& rng, int maxdeg,
                               int terms = 2) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(1, 3), dz(0, 2 * R.n * R.m - 1);
  CPoly f(R.n);
  for (int t = 0; t < terms; ++t) {
    Exps e(R.n, 0);
    int deg = dd(rng);
    std::uniform_int_distribution<int> dv(0, R.n - 1);
    for (int k = 0; k < deg; ++k) e[dv(rng)] += 1;
    f.add_term(std::move(e), R.p_pow(dz(rng)).mul_rational(dc(rng)));
  }
  return f;
}

inline MultiPoly<FormalScalar> random_formal_monomial_poly(const FormalRing& R,
                                                           std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> dv(0, R.n - 1);
  Exps e(R.n, 0);
  for (int k = 0; k < deg; ++k) e[dv(rng)] += 1;
  return MultiPoly<FormalScalar>::monomial(R.n, std::move(e), R.one());
}

/// Roundabout suite: Theta^(m) and bar-Theta^(m) vanish as graded operators
/// and annihilate random polynomials.
inline SuiteResult check_roundabout(int n, int m, unsigned long seed, int trials) {
  SuiteResult res;
  NCAlgebra A(n, m);
  const CycloRing& R = A.ring();
  for (Direction dir : {Direction::clockwise, Direction::widdershins}) {
    for (int i = 0; i < n; ++i) {
      auto e = theta(R, i, m, dir);
      res.expect(A.is_zero_op(A.expr_op(e)),
                 "Theta^(m) nonzero as graded operator at i=" + std::to_string(i) +
                     (dir == Direction::clockwise ? " cw" : " ws"));
    }
  }
  std::mt19937_64 rng(seed);
  auto cw = theta(R, 1, m, Direction::clockwise);
  auto ws = theta(R, 1, m, Direction::widdershins);
  for (int t = 0; t < trials; ++t) {
    CPoly f = random_cyclo_poly(R, rng, m * (n - 1) + 3, 2);
    if (!expr_apply(R, cw, f).is_zero() || !expr_apply(R, ws, f).is_zero()) {
      res.expect(false, "roundabout fails on random polynomial " + f.str());
      break;
    }
    res.checks += 1;
  }
  return res;
}

/// Frobenius suite: J(P) = 1, nondegenerate pairing, basis counts, slice
/// agreement at low degrees (exercising the disk cache when given).
inline SuiteResult check_frobenius(int n, int m, const std::vector<int>& order,
                                   const std::string& cache_dir) {
  SuiteResult res;
  CycloRing R(n, m);
  res.expect(J_operator(R, staircase(R)) == CPoly::constant(n, R.one()), "J(P) != 1");
  res.expect(pairing_nondegenerate(R), "pairing matrix degenerate");
  auto pi = poincare_pi(n, m);
  MonomialBasis B = basis_X(R, order);
  std::vector<long> counts(pi.size(), 0);
  for (const auto& e : B.monomials) {
    int d = 0;
    for (int v : e) d += v;
    counts[d] += 1;
  }
  res.expect(counts == pi, "graded count of X differs from pi_m");
  Coinvariants C(R);
  int dcap = std::min(6, C.top_degree());
  for (int d = 0; d <= dcap; ++d) {
    CoinvariantSlice s = coinvariant_slice(R, d, cache_dir);
    long dim = (long)s.monomials.size() - (long)s.pivots.size();
    res.expect(dim == pi[d], "slice dim mismatch at degree " + std::to_string(d));
    for (const Exps& e : s.complement) {
      CPoly mono = CPoly::monomial(n, e, R.one());
      CPoly via_slice = slice_normal_form(R, s, C.normal_form(mono));
      CPoly direct = slice_normal_form(R, s, mono);
      if (via_slice != direct) {
        res.expect(false, "normal forms disagree at degree " + std::to_string(d));
        break;
      }
      ++res.checks;
    }
  }
  return res;
}

/// Xi suite: closed formula equals brute force for all (a, i), zero outside
/// the support.
inline SuiteResult check_xi(int m) {
  SuiteResult res;
  CycloRing R(3, m);
  for (long a = 0; a <= 3L * m - 1; ++a) {
    long b = 3L * m - 1 - a;
    Cyclotomic f = xi_closed_formula(a, m);
    if (a <= m - 2 || a >= 2 * m + 1)
      res.expect(f.is_zero(), "formula nonzero outside support at a=" + std::to_string(a));
    for (int i = 0; i < 3; ++i) {
      Cyclotomic bf = xi_bruteforce(R, a, b, i, 2 * m);
      res.expect(f == bf, "xi mismatch at a=" + std::to_string(a) + " i=" + std::to_string(i));
    }
  }
  return res;
}

inline SuiteResult check_gamma() {
  SuiteResult res;
  GammaReport rep = gamma_checks();
  res.expect(rep.annihilated_by_degree4, "gamma not annihilated by degree-4 operators");
  res.expect(rep.unique_up_to_scalar, "gamma not unique up to scalar");
  res.expect(rep.kills_degree2, "gamma does not kill degree-2 polynomials");
  res.expect(rep.staircase_image_in_ideal, "gamma(x1^4 x2^2) not in the invariant ideal");
  std::ostringstream os;
  for (long v : rep.quotient_dims) os << v << " ";
  res.expect(rep.quotient_matches_pi, "quotient dims differ from pi: " + os.str());
  return res;
}

/// Operator identity suite: nil-quadratic, twisted Leibniz, unbalanced
/// braid, distant commutation, sigma/tau intertwiners, on random data.
inline SuiteResult check_braid(int n, int m, unsigned long seed, int trials) {
  SuiteResult res;
  FormalRing F(n);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto f = random_formal_poly(F, rng, 6);
    auto g = random_formal_poly(F, rng, 4);
    std::uniform_int_distribution<int> di(0, n - 1);
    int i = di(rng);
    res.expect(demazure_apply(F, i, demazure_apply(F, i, f)).is_zero(), "nil-quadratic fails");
    auto lhs = demazure_apply(F, i, f * g);
    auto rhs = demazure_apply(F, i, f) * g +
               matrix_apply(F, simple_reflection_matrix(n, i), f) * demazure_apply(F, i, g);
    res.expect(lhs == rhs, "twisted Leibniz fails");
    if (n >= 3) {
      auto b1 = word_apply(F, Word{i, (i + 1) % n, i}, f).scaled(F.z_pow(1));
      auto b2 = word_apply(F, Word{(i + 1) % n, i, (i + 1) % n}, f);
      res.expect(b1 == b2, "unbalanced braid fails");
    }
    if (n >= 4) {
      int j = (i + 2) % n;
      res.expect(demazure_apply(F, i, demazure_apply(F, j, f)) ==
                     demazure_apply(F, j, demazure_apply(F, i, f)),
                 "distant commutation fails");
    }
    res.expect(sigma_poly(F, demazure_apply(F, i, f)) ==
                   demazure_apply(F, i + 1, sigma_poly(F, f)),
               "sigma intertwiner fails");
    res.expect(tau_poly(F, demazure_apply(F, i, f)) ==
                   demazure_apply(F, -i, tau_poly(F, f)).scaled(-F.z_pow(1)),
               "tau intertwiner fails");
  }
  return res;
}

}  // namespace nilcox
