#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilcox/demazure.hpp"
#include "nilcox/linalg.hpp"

namespace nilcox {



/// Coefficients of pi_m = (n)_v (m)_v (2m)_v ... ((n-1)m)_v, the graded rank
/// of R over R^W.
std::vector<long> poincare_pi(int n, int m);

/// The invariant-ring generators {e_i(y_1..y_n)}_{i=1..n-1} and a = x_1...x_n,
/// where y_k = zeta^(mk) x_k^m. Degrees m, 2m, ..., (n-1)m and n.
struct InvariantGens {
  std::vector<CPoly> gens;
};
InvariantGens invariant_gens(const CycloRing& R);

/// Complete homogeneous polynomial h_c(y_1, ..., y_k) as a polynomial in x.
CPoly h_in_y(const CycloRing& R, int c, int k);

/// The monomial basis X for a total order on the variables. order is a
/// permutation of 1..n; order[0] is the first variable. Bounds: the t-th
/// variable's exponent is <= m(n-t), relaxed to m(n+1-t)-1 when an earlier
/// exponent vanishes.
struct MonomialBasis {
  std::vector<int> order;
  std::vector<Exps> monomials;  // sorted by (degree, exponent vector)
};
MonomialBasis basis_X(const CycloRing& R, const std::vector<int>& order);

/// Straightening relations generating the ideal slice rewrite system: for
/// each k, h_{n-k+1}(y_1..y_k) and x_1...x_k h_{n-k}(y_1..y_k). Their
/// leading monomials under lex with x_n > ... > x_1 cut out exactly the
/// standard-order X.
std::vector<CPoly> straightening_relations(const CycloRing& R);

/// The coinvariant algebra C = R / (R^W_+) with the standard-order X as the
/// working basis per degree, and a memoized straightening normal form.
class Coinvariants {
 public:
  explicit Coinvariants(const CycloRing& R);

  const CycloRing& ring() const { return R_; }
  int top_degree() const { return top_; }
  const std::vector<Exps>& basis(int d) const;
  long dim(int d) const { return (long)basis(d).size(); }
  long basis_index(int d, const Exps& e) const;

  /// Straightening projection onto the X span; agrees with the ideal-slice
  /// projection (both fix X and kill the ideal).
  CPoly normal_form(const CPoly& f) const;

  /// Column vector of normal_form(f) over basis(d), f homogeneous of degree d.
  CycloRow coords(int d, const CPoly& f) const;

 private:
  struct ExpsHash {
    size_t operator()(const Exps& e) const {
      size_t h = 1469598103934665603ull;
      for (int v : e) {
        h ^= (size_t)v + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct Rule {
    Exps lead;
    Cyclotomic lead_coeff;
    CPoly tail;  // relation minus lead term
  };

  bool in_X(const Exps& e) const;
  const std::map<Exps, Cyclotomic>& reduce_monomial(const Exps& e) const;

  CycloRing R_;
  int top_;
  std::vector<Rule> rules_;
  std::vector<std::vector<Exps>> basis_;
  std::vector<std::unordered_map<Exps, long, ExpsHash>> index_;
  mutable std::unordered_map<Exps, std::map<Exps, Cyclotomic>, ExpsHash> memo_;
};

/// Dense per-degree picture of the ideal, cacheable to disk:
/// all degree-d monomials in graded-lex descending order (x_1 > ... > x_n),
/// the reduced row echelon form of the ideal slice spanned by {g * h}, pivot
/// columns, and the complement (the graded-lex-least monomials), which is a
/// basis of C_d.
struct CoinvariantSlice {
  int n = 0, m = 0, d = 0;
  std::vector<Exps> monomials;
  CycloMatrix ideal_rref;
  std::vector<int> pivots;
  std::vector<Exps> complement;
};

CoinvariantSlice coinvariant_slice(const CycloRing& R, int d,
                                   const std::string& cache_dir = "");

/// Projection of the degree-d part of f modulo the ideal slice, expressed on
/// the complement monomials.
CPoly slice_normal_form(const CycloRing& R, const CoinvariantSlice& s, const CPoly& f);

/// A(f) = sum over W_m of sign * w(f) (full), or over the finite S_n copy
/// generated by s_1..s_{n-1} (finite, the operator A').
CPoly antisymmetrize(const CycloRing& R, const CPoly& f, bool full);

/// J(f) = A(f) / (m^(n-1) Delta), the Frobenius trace; computed monomialwise
/// through A' and exact division by the root factors.
CPoly J_operator(const CycloRing& R, const CPoly& f);

/// The m-staircase monomial P = x_1^((n-1)m) x_2^((n-2)m) ... x_{n-1}^m.
CPoly staircase(const CycloRing& R);

/// Pairing matrix M[b][c] = degree-0 part of J(b * c) for b in X (order
/// 1<...<n) and c in X' (order n<...<1).
struct PairingData {
  MonomialBasis X;
  MonomialBasis Xp;
  CycloMatrix M;
};
PairingData frobenius_pairing(const CycloRing& R);

/// Nondegeneracy via the per-degree anti-diagonal blocks (the full matrix is
/// block anti-diagonal in degree).
bool pairing_nondegenerate(const CycloRing& R);

}  // namespace nilcox
