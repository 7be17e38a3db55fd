// Acceptance suite: runs every top-level criterion at its stated tolerance
// (exact equality throughout) and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "nilcox/checks.hpp"

using namespace nilcox;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int idx, const std::string& what, bool pass, double secs,
            const std::string& detail = "") {
  std::printf("%s  %2d  %s [%.2f s]%s\n", pass ? "PASS" : "FAIL", idx, what.c_str(), secs,
              detail.empty() ? "" : ("  " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<Exps> monomials_of_degree(int n, int d) {
  std::vector<Exps> out;
  Exps e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

const std::map<int, std::vector<long>> kTable = {
    {2, {1, 3, 6, 9, 10, 6, 1}},
    {3, {1, 3, 6, 9, 12, 15, 16, 15, 6, 1}},
    {4, {1, 3, 6, 9, 12, 15, 18, 21, 22, 21, 18, 6, 1}},
    {5, {1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 28, 27, 24, 21, 6, 1}},
    {6, {1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 34, 33, 30, 27, 21, 6, 1}},
    {7, {1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 36, 39, 40, 39, 36, 33, 30, 21, 6, 1}},
};

}  // namespace

int main() {
  const size_t budget = 2000000;
  std::map<int, GradedDims> dims;

  {  // 1: NC(2,2,3)
    Timer t;
    dims[2] = nc_graded_dims(3, 2, budget);
    bool pass = dims[2].dims == kTable.at(2) && dims[2].total() == 36;
    double s = t.seconds();
    report(1, "NC(2,2,3) graded dimensions (1,3,6,9,10,6,1), total 36", pass && s < 10.0, s);
  }

  {  // 2: NC(3,3,3)
    Timer t;
    dims[3] = nc_graded_dims(3, 3, budget);
    bool pass = dims[3].dims == kTable.at(3) && dims[3].total() == 84;
    double s = t.seconds();
    report(2, "NC(3,3,3) graded dimensions (1,3,6,9,12,15,16,15,6,1), total 84",
           pass && s < 60.0, s);
  }

  {  // 3: totals for m = 2..5
    Timer t;
    dims[4] = nc_graded_dims(3, 4, budget);
    Timer t5;
    dims[5] = nc_graded_dims(3, 5, budget);
    double s5 = t5.seconds();
    std::vector<long> totals;
    for (int m = 2; m <= 5; ++m) totals.push_back(dims[m].total());
    bool pass = totals == std::vector<long>{36, 84, 153, 243} && s5 < 1800.0;
    report(3, "totals for m = 2..5 equal (36, 84, 153, 243)", pass, t.seconds());
  }

  {  // 4: full table reproduction m = 2..7
    Timer t;
    dims[6] = nc_graded_dims(3, 6, budget);
    dims[7] = nc_graded_dims(3, 7, budget);
    bool pass = true;
    for (int m = 2; m <= 7; ++m)
      if (dims[m].dims != kTable.at(m)) pass = false;
    pass = pass && dims[6].dims[16] == 21 && dims[7].dims[19] == 21;
    report(4, "graded-dimension table for m = 2..7, all degrees, exact", pass, t.seconds());
  }

  {  // 5: new relation counts
    Timer t;
    bool pass = new_relation_count(3, 2, 5, budget) == 3 &&
                new_relation_count(3, 3, 8, budget) == 6 &&
                new_relation_count(3, 4, 11, budget) == 9;
    for (int m = 2; m <= 5 && pass; ++m)
      pass = pass && new_relation_count(3, m, 2 * m, budget) == 2;
    report(5, "new relations: 3 at (m=2,d=5), 6 at (m=3,d=8), 9 at (m=4,d=11), "
              "2 at the roundabout degrees", pass, t.seconds());
  }

  {  // 6: J(P) = 1 and nondegenerate pairing for m = 2,3,4
    Timer t;
    bool pass = true;
    for (int m : {2, 3, 4}) {
      CycloRing R(3, m);
      pass = pass && J_operator(R, staircase(R)) == CPoly::constant(3, R.one());
      pass = pass && pairing_nondegenerate(R);
    }
    report(6, "J(P) = 1 for m = 2,3,4 and the X/X' pairing determinant is nonzero", pass,
           t.seconds());
  }

  {  // 7: roundabout vanishing, n = 3 m = 2..6 and n = 4 m = 2, plus 500 random
    Timer t;
    bool pass = true;
    long remaining = 500;
    std::vector<std::pair<int, int>> configs{{3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 2}};
    for (auto [n, m] : configs) {
      NCAlgebra A(n, m);
      const CycloRing& R = A.ring();
      for (Direction dir : {Direction::clockwise, Direction::widdershins})
        for (int i = 0; i < n; ++i)
          pass = pass && A.is_zero_op(A.expr_op(theta(R, i, m, dir)));
      std::mt19937_64 rng(1000 + 10 * n + m);
      long trials = 500 / (long)configs.size() + 1;
      auto cw = theta(R, 1, m, Direction::clockwise);
      auto ws = theta(R, 1, m, Direction::widdershins);
      for (long tdx = 0; tdx < trials; ++tdx) {
        CPoly f = random_cyclo_poly(R, rng, m * (n - 1) + 2, 2);
        pass = pass && expr_apply(R, cw, f).is_zero() && expr_apply(R, ws, f).is_zero();
        --remaining;
      }
    }
    pass = pass && remaining <= 0;
    report(7, "Theta^(m) and bar-Theta^(m) vanish (n=3, m=2..6; n=4, m=2; 500 random polys)",
           pass, t.seconds());
  }

  {  // 8: xi closed formula vs brute force, m = 2..5
    Timer t;
    bool pass = true;
    for (int m = 2; m <= 5; ++m) {
      CycloRing R(3, m);
      for (long a = 0; a <= 3L * m - 1; ++a) {
        long b = 3L * m - 1 - a;
        Cyclotomic f = xi_closed_formula(a, m);
        if (a <= m - 2 || a >= 2 * m + 1) pass = pass && f.is_zero();
        for (int i = 0; i < 3; ++i) {
          if (a >= m - 1 && a <= 2 * m) {
            pass = pass && f == xi_bruteforce(R, a, b, i, 2 * m) && !f.is_zero();
          } else {
            pass = pass && xi_bruteforce(R, a, b, i, 2 * m).is_zero();
          }
        }
      }
    }
    report(8, "Xi closed formula = brute force for all i, m-1 <= a <= 2m, m = 2..5; "
              "zero outside support", pass, t.seconds());
  }

  {  // 9: m = 3 trace-scalar magnitude pattern
    Timer t;
    int m = 3;
    CycloRing R(3, m);
    bool pass = true;
    std::vector<mpq_class> sq;
    mpq_class minsq(-1);
    for (long a = m - 1; a <= 2 * m; ++a)
      for (int i = 0; i < 3; ++i) {
        Cyclotomic v = xi_bruteforce(R, a, 3L * m - 1 - a, i, 2 * m);
        pass = pass && !v.is_zero();
        mpq_class s = v.norm_sq();
        sq.push_back(s);
        if (minsq < 0 || s < minsq) minsq = s;
      }
    std::set<mpq_class> ratios;
    for (const auto& s : sq) ratios.insert(s / minsq);
    Cyclotomic one_plus = R.one() + R.zeta_pow(3);
    std::set<mpq_class> expect{mpq_class(1), one_plus.norm_sq()};
    pass = pass && ratios == expect;
    report(9, "m = 3 trace scalars realize exactly the magnitudes {1, |1+zeta^3|}", pass,
           t.seconds());
  }

  {  // 10: gamma suite
    Timer t;
    GammaReport rep = gamma_checks();
    bool pass = rep.all_pass() && rep.quotient_dims == std::vector<long>{1, 3, 5, 6, 5, 3, 1};
    report(10, "gamma suite (m = 2): all five checks, quotient dims (1,3,5,6,5,3,1)", pass,
           t.seconds());
  }

  {  // 11: operator-identity property suites, 1000 randomized cases each
    Timer t;
    bool pass = true;
    FormalRing F(3);
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> di(0, 2);

    for (int c = 0; c < 1000 && pass; ++c) {  // nil-quadratic
      auto f = random_formal_poly(F, rng, 7);
      int i = di(rng);
      pass = demazure_apply(F, i, demazure_apply(F, i, f)).is_zero();
    }
    for (int c = 0; c < 1000 && pass; ++c) {  // twisted Leibniz
      auto f = random_formal_poly(F, rng, 5), g = random_formal_poly(F, rng, 4);
      int i = di(rng);
      pass = demazure_apply(F, i, f * g) ==
             demazure_apply(F, i, f) * g +
                 matrix_apply(F, simple_reflection_matrix(3, i), f) * demazure_apply(F, i, g);
    }
    for (int c = 0; c < 1000 && pass; ++c) {  // unbalanced braid with scalar z
      auto f = random_formal_poly(F, rng, 6);
      int i = di(rng);
      pass = word_apply(F, Word{i, (i + 1) % 3, i}, f).scaled(F.z_pow(1)) ==
             word_apply(F, Word{(i + 1) % 3, i, (i + 1) % 3}, f);
    }
    for (int c = 0; c < 1000 && pass; ++c) {  // Theta rotation
      auto f = random_formal_poly(F, rng, 4);
      int j = di(rng);
      // Theta_{j_R}(x_{j+1} f) = x_{j+2} Theta_{(j-1)_R}(f); x_{j+1} sits at
      // variable position j mod 3
      pass = expr_apply(F, theta_right(F, j, 1, Direction::clockwise),
                        make_variable(F, j % 3) * f) ==
             make_variable(F, (j + 1) % 3) *
                 expr_apply(F, theta_right(F, j + 2, 1, Direction::clockwise), f);
    }
    for (int c = 0; c < 1000 && pass; ++c) {  // Theta composition (k = l = 1)
      auto f = random_formal_poly(F, rng, 5);
      int i = c % 3;
      int j = (i + 1) % 3;  // j = i + k(n-1) - 1 with k = 1
      pass = expr_apply(F, theta(F, i, 1, Direction::clockwise),
                        expr_apply(F, theta(F, (j + 1) % 3, 1, Direction::clockwise), f)) ==
             expr_apply(F, theta(F, i, 2, Direction::clockwise), f);
    }
    for (int c = 0; c < 1000 && pass; ++c) {  // sigma/tau intertwiners
      auto f = random_formal_poly(F, rng, 5);
      int i = di(rng);
      pass = sigma_poly(F, demazure_apply(F, i, f)) ==
                 demazure_apply(F, i + 1, sigma_poly(F, f)) &&
             tau_poly(F, demazure_apply(F, i, f)) ==
                 demazure_apply(F, -i, tau_poly(F, f)).scaled(-F.z_pow(1));
    }
    // Delta symmetries (deterministic identities, both m)
    for (int m : {2, 3}) {
      CycloRing R(3, m);
      CPoly D = delta(R);
      for (int k = 0; k < 3; ++k)
        pass = pass && matrix_apply(R, simple_reflection_matrix(3, k), D) == -D;
      Cyclotomic scale = R.zeta_pow(-(long)m * 4);
      pass = pass && sigma_poly(R, D) == D && tau_poly(R, D) == D.scaled(-scale);
    }
    {  // A/A' reduction rules, randomized
      CycloRing R(3, 2);
      std::uniform_int_distribution<int> dv(0, 6);
      for (int c = 0; c < 1000 && pass; ++c) {
        Exps e{dv(rng), dv(rng), dv(rng)};
        CPoly b = CPoly::monomial(3, e, R.one());
        bool congruent = ((e[1] - e[0]) % 2 == 0) && ((e[2] - e[0]) % 2 == 0);
        CPoly full = antisymmetrize(R, b, true);
        if (congruent) pass = full == antisymmetrize(R, b, false).scaled(R.integer(4));
        else pass = full.is_zero();
      }
    }
    {  // root-counting length vs inversion length on all reduced words <= 7
      std::function<void(Word&)> walk = [&](Word& w) {
        if (!w.empty()) {
          if (!is_reduced(3, w)) return;
          pass = pass && root_counting_length(3, w) == (long)w.size();
          if (!pass || w.size() == 7) return;
        }
        for (int i = 0; i < 3; ++i) {
          w.push_back(i);
          walk(w);
          w.pop_back();
        }
      };
      Word w;
      walk(w);
    }
    report(11, "operator-identity property suites (1000 randomized cases each)", pass,
           t.seconds());
  }

  {  // 12: conjecture A dims
    Timer t;
    GradedDims A2 = conjectureA_dims(3, 2, budget);
    GradedDims A3 = conjectureA_dims(3, 3, budget);
    bool pass = A2.dims == std::vector<long>{1, 3, 6, 9, 10, 9, 6, 3, 1} &&
                A3.dims == std::vector<long>{1, 3, 6, 9, 12, 15, 16, 15, 12, 9, 6, 3, 1};
    for (const GradedDims* D : {&A2, &A3})
      for (size_t d = 0; d < D->dims.size(); ++d)
        pass = pass && D->dims[d] == D->dims[D->dims.size() - 1 - d];
    report(12, "conjecture-A dims match the balanced polynomial for m = 2,3 and are "
               "palindromic", pass, t.seconds());
  }

  if (failures == 0) std::printf("acceptance: all 12 criteria pass\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
