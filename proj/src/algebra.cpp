#include "nilcox/algebra.hpp"

#include <algorithm>

namespace nilcox {

NCAlgebra::NCAlgebra(int n, int m) : R_(n, m), C_(R_) {
  gens_.resize(n);
  int top = C_.top_degree();
  for (int i = 0; i < n; ++i) {
    GradedOperator& G = gens_[i];
    G.deg = 1;
    G.blocks.assign(top + 1, CycloMatrix{});
    for (int e = 1; e <= top; ++e) {
      const auto& src = C_.basis(e);
      const auto& dst = C_.basis(e - 1);
      CycloMatrix M(dst.size(), CycloRow(src.size()));
      for (size_t c = 0; c < src.size(); ++c) {
        CPoly img = C_.normal_form(
            demazure_apply(R_, i, CPoly::monomial(n, src[c], R_.one())));
        for (const auto& [be, bc] : img.terms()) M[C_.basis_index(e - 1, be)][c] = bc;
      }
      G.blocks[e] = std::move(M);
    }
  }
}

GradedOperator NCAlgebra::identity_op() const {
  GradedOperator I;
  I.deg = 0;
  int top = C_.top_degree();
  I.blocks.assign(top + 1, CycloMatrix{});
  for (int e = 0; e <= top; ++e) {
    size_t dim = C_.basis(e).size();
    CycloMatrix M(dim, CycloRow(dim));
    for (size_t j = 0; j < dim; ++j) M[j][j] = R_.one();
    I.blocks[e] = std::move(M);
  }
  return I;
}

namespace {
CycloMatrix mat_mul(const CycloMatrix& A, const CycloMatrix& B) {
  // A: p x q, B: q x r
  size_t p = A.size();
  size_t q = p ? A[0].size() : 0;
  size_t r = B.empty() ? 0 : B[0].size();
  if (q != B.size()) throw std::logic_error("block dimension mismatch");
  CycloMatrix C(p, CycloRow(r));
  for (size_t i = 0; i < p; ++i)
    for (size_t k = 0; k < q; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < r; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] += A[i][k] * B[k][j];
      }
    }
  return C;
}
}  // namespace

GradedOperator NCAlgebra::compose_left(int i, const GradedOperator& A) const {
  GradedOperator C;
  C.deg = A.deg + 1;
  int top = C_.top_degree();
  C.blocks.assign(top + 1, CycloMatrix{});
  for (int e = C.deg; e <= top; ++e)
    C.blocks[e] = mat_mul(gens_[i].blocks[e - A.deg], A.blocks[e]);
  return C;
}

GradedOperator NCAlgebra::compose_right(const GradedOperator& A, int i) const {
  GradedOperator C;
  C.deg = A.deg + 1;
  int top = C_.top_degree();
  C.blocks.assign(top + 1, CycloMatrix{});
  for (int e = C.deg; e <= top; ++e) C.blocks[e] = mat_mul(A.blocks[e - 1], gens_[i].blocks[e]);
  return C;
}

GradedOperator NCAlgebra::compose(const GradedOperator& A, const GradedOperator& B) const {
  GradedOperator C;
  C.deg = A.deg + B.deg;
  int top = C_.top_degree();
  C.blocks.assign(top + 1, CycloMatrix{});
  for (int e = C.deg; e <= top; ++e) C.blocks[e] = mat_mul(A.blocks[e - B.deg], B.blocks[e]);
  return C;
}

GradedOperator NCAlgebra::add(const GradedOperator& A, const GradedOperator& B) const {
  if (A.deg != B.deg) throw std::invalid_argument("adding operators of different degree");
  GradedOperator C = A;
  int top = C_.top_degree();
  for (int e = A.deg; e <= top; ++e)
    for (size_t r = 0; r < C.blocks[e].size(); ++r)
      for (size_t c = 0; c < C.blocks[e][r].size(); ++c)
        C.blocks[e][r][c] += B.blocks[e][r][c];
  return C;
}

GradedOperator NCAlgebra::scaled(const GradedOperator& A, const Cyclotomic& c) const {
  GradedOperator C = A;
  for (auto& M : C.blocks)
    for (auto& row : M)
      for (auto& x : row) x = x * c;
  return C;
}

GradedOperator NCAlgebra::word_op(const Word& w) const {
  GradedOperator A = identity_op();
  for (size_t k = w.size(); k-- > 0;) A = compose_left(w[k], A);
  return A;
}

GradedOperator NCAlgebra::expr_op(const OperatorExpr<Cyclotomic>& e) const {
  if (e.terms.empty()) throw std::invalid_argument("empty operator expression");
  GradedOperator acc = scaled(word_op(e.terms[0].second), e.terms[0].first);
  for (size_t t = 1; t < e.terms.size(); ++t)
    acc = add(acc, scaled(word_op(e.terms[t].second), e.terms[t].first));
  return acc;
}

GradedOperator NCAlgebra::j_op() const {
  GradedOperator J;
  int top = C_.top_degree();
  J.deg = top;
  J.blocks.assign(top + 1, CycloMatrix{});
  const auto& src = C_.basis(top);
  CycloMatrix M(1, CycloRow(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    CPoly img = J_operator(R_, CPoly::monomial(R_.n, src[c], R_.one()));
    if (!img.is_zero()) M[0][c] = img.scalar_value();
  }
  J.blocks[top] = std::move(M);
  return J;
}

bool NCAlgebra::is_zero_op(const GradedOperator& A) const {
  for (const auto& M : A.blocks)
    for (const auto& row : M)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
  return true;
}

CycloRow NCAlgebra::flatten(const GradedOperator& A) const {
  CycloRow v;
  int top = C_.top_degree();
  for (int e = A.deg; e <= top; ++e) {
    size_t rows = C_.basis(e - A.deg).size();
    size_t cols = C_.basis(e).size();
    if (A.blocks[e].empty()) {
      v.insert(v.end(), rows * cols, Cyclotomic());
      continue;
    }
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) v.push_back(A.blocks[e][r][c]);
  }
  return v;
}

std::vector<AbiTriple> NCAlgebra::words_of_length(int d) const {
  std::vector<AbiTriple> out;
  for (long a = 0; a <= d - 1; ++a)
    for (int i = 0; i < 3; ++i) out.push_back(AbiTriple{a, d - 1 - a, i});
  return out;
}

GradedDims nc_graded_dims(int n, int m, size_t budget) {
  NCAlgebra A(n, m);
  GradedDims D;
  D.n = n;
  D.m = m;
  D.dims.assign(A.top_degree() + 1, 0);
  D.dims[0] = 1;
  A.scan_degrees(A.top_degree(), budget,
                 [&](int d, const std::vector<AbiTriple>&, const std::vector<GradedOperator>& ops) {
                   CycloMatrix M;
                   for (const auto& op : ops) M.push_back(A.flatten(op));
                   D.dims[d] = rank_fraction_free(std::move(M));
                 });
  return D;
}

RelationSet relation_kernel(int n, int m, int d, size_t budget) {
  if (n != 3) throw std::invalid_argument("relation_kernel uses the abi index (n = 3)");
  NCAlgebra A(n, m);
  RelationSet out;
  out.degree = d;
  A.scan_degrees(std::min(d, A.top_degree()), budget,
                 [&](int dd, const std::vector<AbiTriple>& words,
                     const std::vector<GradedOperator>& ops) {
                   if (dd != d) return;
                   out.words = words;
                   CycloMatrix M;
                   for (const auto& op : ops) M.push_back(A.flatten(op));
                   out.kernel = left_kernel(M);
                 });
  if (d > A.top_degree()) {
    // all operators vanish beyond the top degree; kernel is everything
    out.words = A.words_of_length(d);
    const CycloField& F = CycloField::get(2 * n * m);
    out.kernel.assign(out.words.size(), CycloRow(out.words.size()));
    for (size_t t = 0; t < out.words.size(); ++t) out.kernel[t][t] = F.one();
  }
  return out;
}

namespace {

// Products d_i * K and K * d_i of kernel vectors, in degree-(d+1) word
// coordinates.
CycloMatrix kernel_ideal_step(const CycloRing& R, WordRewriter& rw,
                              const std::vector<AbiTriple>& words, const CycloMatrix& kernel,
                              const std::vector<AbiTriple>& next_words) {
  std::map<std::pair<long, int>, size_t> index;
  for (size_t t = 0; t < next_words.size(); ++t)
    index[{next_words[t].a, next_words[t].i}] = t;
  CycloMatrix out;
  for (const auto& v : kernel) {
    for (int i = 0; i < R.n; ++i) {
      CycloRow left(next_words.size()), right(next_words.size());
      bool lnz = false, rnz = false;
      for (size_t t = 0; t < words.size(); ++t) {
        if (v[t].is_zero()) continue;
        if (auto red = rw.left_mul(i, words[t])) {
          left[index.at({red->t.a, red->t.i})] += v[t] * R.z_pow(red->zexp);
          lnz = true;
        }
        if (auto red = rw.right_mul(words[t], i)) {
          right[index.at({red->t.a, red->t.i})] += v[t] * R.z_pow(red->zexp);
          rnz = true;
        }
      }
      if (lnz) out.push_back(std::move(left));
      if (rnz) out.push_back(std::move(right));
    }
  }
  return out;
}

}  // namespace

long new_relation_count(int n, int m, int d, size_t budget) {
  if (n != 3) throw std::invalid_argument("new_relation_count uses the abi index (n = 3)");
  NCAlgebra A(n, m);
  WordRewriter rw(n);
  long result = -1;
  CycloMatrix prev_kernel;
  std::vector<AbiTriple> prev_words;
  A.scan_degrees(std::min(d, A.top_degree()), budget,
                 [&](int dd, const std::vector<AbiTriple>& words,
                     const std::vector<GradedOperator>& ops) {
                   if (dd < d - 1) return;
                   CycloMatrix M;
                   for (const auto& op : ops) M.push_back(A.flatten(op));
                   CycloMatrix kernel = left_kernel(M);
                   if (dd == d - 1) {
                     prev_kernel = std::move(kernel);
                     prev_words = words;
                     return;
                   }
                   CycloMatrix ideal =
                       kernel_ideal_step(A.ring(), rw, prev_words, prev_kernel, words);
                   long ideal_rank = ideal.empty() ? 0 : rank_fraction_free(std::move(ideal));
                   result = (long)kernel.size() - ideal_rank;
                 });
  if (result < 0) throw std::invalid_argument("new_relation_count: degree beyond top");
  return result;
}

std::vector<TableRow> nc_table(int n, int m, size_t budget) {
  if (n != 3) throw std::invalid_argument("nc_table uses the abi index (n = 3)");
  NCAlgebra A(n, m);
  WordRewriter rw(n);
  std::vector<TableRow> table;
  table.push_back(TableRow{0, 1, 0});
  CycloMatrix prev_kernel;
  std::vector<AbiTriple> prev_words;
  A.scan_degrees(A.top_degree(), budget,
                 [&](int d, const std::vector<AbiTriple>& words,
                     const std::vector<GradedOperator>& ops) {
                   CycloMatrix M;
                   for (const auto& op : ops) M.push_back(A.flatten(op));
                   CycloMatrix kernel = left_kernel(M);
                   TableRow row;
                   row.degree = d;
                   row.dim = 3L * d - (long)kernel.size();
                   if (!prev_kernel.empty()) {
                     CycloMatrix ideal =
                         kernel_ideal_step(A.ring(), rw, prev_words, prev_kernel, words);
                     long ideal_rank = ideal.empty() ? 0 : rank_fraction_free(std::move(ideal));
                     row.new_relations = (long)kernel.size() - ideal_rank;
                   } else {
                     row.new_relations = (long)kernel.size();
                   }
                   table.push_back(row);
                   prev_kernel = std::move(kernel);
                   prev_words = words;
                 });
  return table;
}

GradedDims conjectureA_dims(int n, int m, size_t budget) {
  if (n != 3) throw std::invalid_argument("conjectureA_dims is implemented for n = 3");
  CycloRing R(n, m);
  WordRewriter rw(n);
  GradedDims D;
  D.n = n;
  D.m = m;
  int dmax = 4 * m;
  D.dims.assign(dmax + 1, 0);
  D.dims[0] = 1;
  auto words_of = [&](int d) {
    std::vector<AbiTriple> out;
    for (long a = 0; a <= d - 1; ++a)
      for (int i = 0; i < 3; ++i) out.push_back(AbiTriple{a, d - 1 - a, i});
    return out;
  };
  size_t spent = 0;
  CycloMatrix ideal;  // over the current degree's words
  std::vector<AbiTriple> words;
  for (int d = 1; d <= dmax; ++d) {
    auto next_words = words_of(d);
    spent += next_words.size();
    if (spent > budget) throw CapacityError("word budget exceeded in conjectureA_dims");
    CycloMatrix next_ideal;
    if (!ideal.empty()) next_ideal = kernel_ideal_step(R, rw, words, ideal, next_words);
    if (d == 2 * m) {
      // the two roundabout relations, clockwise and widdershins
      std::map<std::pair<long, int>, size_t> index;
      for (size_t t = 0; t < next_words.size(); ++t)
        index[{next_words[t].a, next_words[t].i}] = t;
      for (Direction dir : {Direction::clockwise, Direction::widdershins}) {
        auto expr = theta(R, 1, m, dir);
        CycloRow v(next_words.size());
        for (const auto& [c, w] : expr.terms) {
          auto red = rw.canonicalize(w);
          if (!red) throw std::logic_error("roundabout word not reduced");
          v[index.at({red->t.a, red->t.i})] += c * R.z_pow(red->zexp);
        }
        next_ideal.push_back(std::move(v));
      }
    }
    if (!next_ideal.empty()) {
      // reduce the ideal basis degreewise to keep row counts small
      CycloMatrix reduced = next_ideal;
      rref_in_place(reduced);
      next_ideal = std::move(reduced);
    }
    long rank = (long)next_ideal.size();
    D.dims[d] = 3L * d - rank;
    ideal = std::move(next_ideal);
    words = std::move(next_words);
    if (D.dims[d] == 0) break;
  }
  return D;
}

OperatorExpr<Cyclotomic> gamma_expr(const CycloRing& R) {
  // gamma = d_ts - zeta d_ut + zeta^2 d_su - zeta^2 d_us + zeta d_tu - d_st
  OperatorExpr<Cyclotomic> g;
  g.terms.emplace_back(R.one(), Word{2, 1});
  g.terms.emplace_back(-R.zeta_pow(1), Word{0, 2});
  g.terms.emplace_back(R.zeta_pow(2), Word{1, 0});
  g.terms.emplace_back(-R.zeta_pow(2), Word{0, 1});
  g.terms.emplace_back(R.zeta_pow(1), Word{2, 0});
  g.terms.emplace_back(-R.one(), Word{1, 2});
  return g;
}

GammaReport gamma_checks() {
  const int n = 3, m = 2;
  NCAlgebra A(n, m);
  const CycloRing& R = A.ring();
  GammaReport rep;

  GradedOperator G = A.expr_op(gamma_expr(R));

  // words of length 4 span degree 4
  std::vector<GradedOperator> deg4;
  for (const AbiTriple& t : A.words_of_length(4)) deg4.push_back(A.word_op(abi_word(3, t)));

  rep.annihilated_by_degree4 = true;
  for (const auto& B : deg4) {
    if (!A.is_zero_op(A.compose(B, G)) || !A.is_zero_op(A.compose(G, B)))
      rep.annihilated_by_degree4 = false;
  }

  // uniqueness: solve for all degree-2 combinations annihilated two-sidedly
  {
    std::vector<GradedOperator> deg2;
    for (const AbiTriple& t : A.words_of_length(2)) deg2.push_back(A.word_op(abi_word(3, t)));
    CycloMatrix constraint_cols;
    for (const auto& T : deg2) {
      CycloRow col;
      for (const auto& B : deg4) {
        CycloRow l = A.flatten(A.compose(B, T));
        CycloRow r = A.flatten(A.compose(T, B));
        col.insert(col.end(), l.begin(), l.end());
        col.insert(col.end(), r.begin(), r.end());
      }
      constraint_cols.push_back(std::move(col));
    }
    CycloMatrix kernel = left_kernel(constraint_cols);
    rep.unique_up_to_scalar = kernel.size() == 1;
    if (rep.unique_up_to_scalar) {
      // the kernel vector must be proportional to gamma's coefficients
      auto g = gamma_expr(R);
      std::map<std::pair<long, int>, size_t> index;
      auto w2 = A.words_of_length(2);
      for (size_t t = 0; t < w2.size(); ++t) index[{w2[t].a, w2[t].i}] = t;
      WordRewriter rw(3);
      CycloRow gv(w2.size());
      for (const auto& [c, w] : g.terms) {
        auto red = rw.canonicalize(w);
        gv[index.at({red->t.a, red->t.i})] += c * R.z_pow(red->zexp);
      }
      rep.unique_up_to_scalar = in_row_span(kernel, gv);
    }
  }

  // gamma kills every degree-2 polynomial (in R itself)
  rep.kills_degree2 = true;
  auto g = gamma_expr(R);
  for (int e1 = 0; e1 <= 2; ++e1)
    for (int e2 = 0; e2 + e1 <= 2; ++e2) {
      Exps e{e1, e2, 2 - e1 - e2};
      if (!expr_apply(R, g, CPoly::monomial(3, e, R.one())).is_zero())
        rep.kills_degree2 = false;
    }

  // gamma(x1^4 x2^2) lies in the invariant ideal
  CPoly img = expr_apply(R, g, staircase(R));
  rep.staircase_image_in_ideal = A.coinv().normal_form(img).is_zero();

  // quotient by the left ideal of gamma has graded dimension pi
  auto pi = poincare_pi(3, 2);
  GradedDims nc = nc_graded_dims(3, 2);
  rep.quotient_dims.assign(7, 0);
  for (int dd = 0; dd <= 6; ++dd) {
    CycloMatrix rows;
    if (dd >= 2) {
      if (dd == 2) {
        rows.push_back(A.flatten(G));
      } else {
        for (const AbiTriple& t : A.words_of_length(dd - 2))
          rows.push_back(A.flatten(A.compose(A.word_op(abi_word(3, t)), G)));
      }
    }
    long ideal_rank = rows.empty() ? 0 : rank_fraction_free(std::move(rows));
    rep.quotient_dims[dd] = nc.dims[dd] - ideal_rank;
  }
  rep.quotient_matches_pi = true;
  for (int dd = 0; dd <= 6; ++dd)
    if (rep.quotient_dims[dd] != pi[dd]) rep.quotient_matches_pi = false;
  return rep;
}

std::vector<TraceRow> frobenius_trace_classifier(int m) {
  NCAlgebra A(3, m);
  int top = A.top_degree();
  GradedOperator J = A.j_op();
  Cyclotomic jtop = J.blocks[top][0][0];
  std::vector<TraceRow> out;
  A.scan_degrees(top, kDefaultBudget,
                 [&](int d, const std::vector<AbiTriple>& words,
                     const std::vector<GradedOperator>& ops) {
                   if (d != top) return;
                   for (size_t t = 0; t < words.size(); ++t) {
                     TraceRow row;
                     row.a = words[t].a;
                     row.b = words[t].b;
                     row.i = words[t].i;
                     row.scalar = ops[t].blocks[top][0][0] / jtop;
                     row.is_trace = !row.scalar.is_zero();
                     out.push_back(std::move(row));
                   }
                 });
  return out;
}

}  // namespace nilcox
