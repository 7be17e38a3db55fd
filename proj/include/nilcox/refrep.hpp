#pragma once

#include <vector>

#include "nilcox/affine.hpp"
#include "nilcox/multipoly.hpp"
#include "nilcox/rings.hpp"

namespace nilcox {

using CPoly = MultiPoly<Cyclotomic>;

/// Monomial matrix x_j -> z^(e[j]) x_(pi[j]), indexed by variable position
/// (position k is x_{k+1}). Every element of the affine Weyl group acts on
/// V_z in this shape; at the specialization read e modulo n*m.
struct MonomialMatrix {
  int n = 0;
  std::vector<int> pi;
  std::vector<long> e;

  static MonomialMatrix identity(int n);
  bool is_identity() const;
  bool operator==(const MonomialMatrix& o) const { return pi == o.pi && e == o.e; }
  bool operator!=(const MonomialMatrix& o) const { return !(*this == o); }

  /// e reduced modulo n*m (the specialized matrix, zeta^(nm) = 1).
  MonomialMatrix reduced_mod(long period) const;
  size_t hash() const;
};

/// Group product: (v * w)(x) = v(w(x)).
MonomialMatrix compose(const MonomialMatrix& v, const MonomialMatrix& w);

/// s_i(x_i) = z x_{i+1}, s_i(x_{i+1}) = z^{-1} x_i, fixes the rest.
MonomialMatrix simple_reflection_matrix(int n, int i);

MonomialMatrix word_matrix(int n, const Word& w);

/// Translation by a lattice vector (sum zero): x_i -> z^{n a_i} x_i.
MonomialMatrix translation_action(const std::vector<long>& a);

/// Apply the matrix to a polynomial over the given ring; scale entries are
/// z-powers realized through ring.z_pow.
template <class Ring>
MultiPoly<typename Ring::Scalar> matrix_apply(const Ring& R, const MonomialMatrix& g,
                                              const MultiPoly<typename Ring::Scalar>& f) {
  MultiPoly<typename Ring::Scalar> r(f.nvars());
  for (const auto& [exps, c] : f.terms()) {
    Exps e2(f.nvars(), 0);
    long zexp = 0;
    for (int j = 0; j < f.nvars(); ++j) {
      if (exps[j] == 0) continue;
      e2[g.pi[j]] += exps[j];
      zexp += g.e[j] * exps[j];
    }
    r.add_term(std::move(e2), c * R.z_pow(zexp));
  }
  return r;
}

template <class Ring>
MultiPoly<typename Ring::Scalar> word_action(const Ring& R, const Word& w,
                                             const MultiPoly<typename Ring::Scalar>& f) {
  return matrix_apply(R, word_matrix(R.n, w), f);
}

/// Element of W_m with its sign (the sign representation of the affine Weyl
/// group descends to W_m).
struct GroupElement {
  MonomialMatrix matrix;
  int sign = 1;
  long length_witness = 0;  // BFS depth; sign = (-1)^depth
};

/// All n! m^(n-1) elements of W_m = G(m,m,n) as specialized monomial
/// matrices (exponents mod n*m), by BFS over the simple reflections.
std::vector<GroupElement> enumerate_Wm(int n, int m);

/// One chosen root per colinearity class: x_i - z^(j-i+l*n) x_j for
/// 1 <= i < j <= n, 1 <= l <= m. Pair indices are variable positions.
struct RootData {
  int a = 0;       // position of x_i
  int b = 0;       // position of x_j
  long zexp = 0;   // exponent on x_j
};

std::vector<RootData> phi1m(int n, int m);

/// Delta = product of the Phi^1_m roots; degree m * C(n,2).
MultiPoly<Cyclotomic> delta(const CycloRing& R);

/// Number of Phi^1 elements sent into Phi^- by the word's element, with the
/// truncation l <= bound; equals the Coxeter length (checked by tests).
long root_counting_length(int n, const Word& w, long bound);
long root_counting_length(int n, const Word& w);

/// omega = s_{cw_{i_R, m(n-1)}} in W_m, independent of i; acts by
/// x_j -> zeta^m x_{j+m}.
MonomialMatrix omega_matrix(int n, int m, int i);
MonomialMatrix omega_expected(int n, int m);

/// z-exponent bookkeeping for a reduced word: the sum over positions k of
/// the z-prefactor of prefix_k(alpha_{i_k}) relative to the Phi^1
/// representative of its line. Two reduced words u, v of the same element
/// satisfy d_u = z^(zweight(v) - zweight(u)) d_v as operators.
long reduced_word_zweight(int n, const Word& w);

}  // namespace nilcox
