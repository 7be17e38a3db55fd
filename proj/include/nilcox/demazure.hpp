#pragma once

#include <utility>
#include <vector>

#include "nilcox/refrep.hpp"

namespace nilcox {

/// d_i(f) = (f - s_i f) / (x_i - z x_{i+1}); degree -1, lands in the
/// s_i-invariants. Division is exact by construction and asserted.
template <class Ring>
MultiPoly<typename Ring::Scalar> demazure_apply(const Ring& R, int i,
                                                const MultiPoly<typename Ring::Scalar>& f) {
  int n = R.n;
  int a = ((i - 1) % n + n) % n;
  int b = (i % n + n) % n;
  auto num = f - matrix_apply(R, simple_reflection_matrix(n, i), f);
  return num.divide_by_linear(a, b, R.z_pow(1));
}

/// d_w = d_{i_1} o ... o d_{i_d}.
template <class Ring>
MultiPoly<typename Ring::Scalar> word_apply(const Ring& R, const Word& w,
                                            const MultiPoly<typename Ring::Scalar>& f) {
  auto g = f;
  for (size_t k = w.size(); k-- > 0;) {
    if (g.is_zero()) return g;
    g = demazure_apply(R, w[k], g);
  }
  return g;
}

/// Formal linear combination of Demazure words.
template <class Scalar>
struct OperatorExpr {
  std::vector<std::pair<Scalar, Word>> terms;
};

template <class Ring>
MultiPoly<typename Ring::Scalar> expr_apply(const Ring& R,
                                            const OperatorExpr<typename Ring::Scalar>& e,
                                            const MultiPoly<typename Ring::Scalar>& f) {
  MultiPoly<typename Ring::Scalar> acc(R.n);
  for (const auto& [c, w] : e.terms) acc += word_apply(R, w, f).scaled(c);
  return acc;
}

/// Theta^(k)_{i_L} = sum_t z^(-k t) d_{cw_{(i - t)_L, k(n-1)}}, t = 0..n-1.
/// The widdershins variant uses ws words and coefficients z^(+k t) on
/// ws_{(i + t)_L} (zeta powers after specialization).
template <class Ring>
OperatorExpr<typename Ring::Scalar> theta(const Ring& R, int i, int k, Direction dir) {
  if (k < 1) throw std::invalid_argument("theta requires k >= 1");
  int n = R.n;
  int len = k * (n - 1);
  OperatorExpr<typename Ring::Scalar> e;
  for (int t = 0; t < n; ++t) {
    if (dir == Direction::clockwise) {
      Word w = cyclic_word(n, i - t, len, Direction::clockwise, Anchor::left);
      e.terms.emplace_back(R.z_pow(-(long)k * t), std::move(w));
    } else {
      Word w = cyclic_word(n, i + t, len, Direction::widdershins, Anchor::left);
      e.terms.emplace_back(R.z_pow((long)k * t), std::move(w));
    }
  }
  return e;
}

/// Same operators anchored by their final letter: Theta^(k)_{j_R} with
/// j = i + k(n-1) - 1 for clockwise, j = i - k(n-1) + 1 for widdershins.
template <class Ring>
OperatorExpr<typename Ring::Scalar> theta_right(const Ring& R, int j, int k, Direction dir) {
  int len = k * (R.n - 1);
  int i = dir == Direction::clockwise ? j - len + 1 : j + len - 1;
  return theta(R, ((i % R.n) + R.n) % R.n, k, dir);
}

/// sigma on polynomials: x_i -> x_{i+1}, fixes scalars.
template <class Ring>
MultiPoly<typename Ring::Scalar> sigma_poly(const Ring& R,
                                            const MultiPoly<typename Ring::Scalar>& f) {
  MonomialMatrix g = MonomialMatrix::identity(R.n);
  for (int j = 0; j < R.n; ++j) g.pi[j] = (j + 1) % R.n;
  return matrix_apply(R, g, f);
}

/// tau on polynomials: x_i -> x_{1-i} and scalar conjugation p -> p^(-1).
template <class Ring>
MultiPoly<typename Ring::Scalar> tau_poly(const Ring& R,
                                          const MultiPoly<typename Ring::Scalar>& f) {
  int n = R.n;
  MultiPoly<typename Ring::Scalar> r(n);
  for (const auto& [exps, c] : f.terms()) {
    Exps e2(n, 0);
    for (int j = 0; j < n; ++j) {
      if (exps[j] == 0) continue;
      // position j is x_{j+1}; tau sends it to x_{1-(j+1)} = x_{-j}
      int pos = ((-j - 1) % n + n) % n;
      e2[pos] += exps[j];
    }
    r.add_term(std::move(e2), c.conj());
  }
  return r;
}

}  // namespace nilcox
