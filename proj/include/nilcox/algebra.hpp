#pragma once

#include <stdexcept>

#include "nilcox/coinv.hpp"
#include "nilcox/rewrite.hpp"
#include "nilcox/xi.hpp"

namespace nilcox {

/// Raised when a computation would exceed the configured word-evaluation
/// budget; the CLI maps it to exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr size_t kDefaultBudget = 200000;

/// Block matrices realizing an R^W-linear endomorphism of the coinvariant
/// algebra. blocks[e] maps C_e -> C_{e-deg} (dim(e-deg) rows, dim(e)
/// columns), for e = deg..top. Two operators on R agree iff their blocks
/// agree, since the action on C is faithful.
struct GradedOperator {
  int deg = 0;
  std::vector<CycloMatrix> blocks;
};

struct GradedDims {
  int n = 0, m = 0;
  std::vector<long> dims;
  long total() const {
    long t = 0;
    for (long v : dims) t += v;
    return t;
  }
};

struct RelationSet {
  int degree = 0;
  std::vector<AbiTriple> words;
  CycloMatrix kernel;  // rows are relations over the words
};

/// The exotic nilCoxeter algebra NC(m,m,n) as operators on C.
class NCAlgebra {
 public:
  NCAlgebra(int n, int m);

  const CycloRing& ring() const { return R_; }
  const Coinvariants& coinv() const { return C_; }
  int top_degree() const { return C_.top_degree(); }

  GradedOperator identity_op() const;
  const GradedOperator& generator_op(int i) const { return gens_[i]; }
  GradedOperator compose_left(int i, const GradedOperator& A) const;
  GradedOperator compose_right(const GradedOperator& A, int i) const;
  GradedOperator compose(const GradedOperator& A, const GradedOperator& B) const;
  GradedOperator add(const GradedOperator& A, const GradedOperator& B) const;
  GradedOperator scaled(const GradedOperator& A, const Cyclotomic& c) const;
  GradedOperator word_op(const Word& w) const;
  GradedOperator expr_op(const OperatorExpr<Cyclotomic>& e) const;
  /// J as a graded operator (nonzero only on the top block).
  GradedOperator j_op() const;

  bool is_zero_op(const GradedOperator& A) const;
  /// Flattened entries: ascending source degree, then row-major per block.
  CycloRow flatten(const GradedOperator& A) const;

  /// Canonical words of length d in a fixed order (a ascending, then i).
  std::vector<AbiTriple> words_of_length(int d) const;

  /// Operators for all canonical words of length d, built from length d-1 by
  /// one generator application each; call consume(d, words, ops) per degree.
  template <class Fn>
  void scan_degrees(int dmax, size_t budget, Fn&& consume) const;

 private:
  CycloRing R_;
  Coinvariants C_;
  std::vector<GradedOperator> gens_;
};

GradedDims nc_graded_dims(int n, int m, size_t budget = kDefaultBudget);
RelationSet relation_kernel(int n, int m, int d, size_t budget = kDefaultBudget);
long new_relation_count(int n, int m, int d, size_t budget = kDefaultBudget);

struct TableRow {
  int degree = 0;
  long dim = 0;
  long new_relations = 0;
};

/// One pass over all degrees: dimension and new-relation count per degree
/// (a single elimination per degree yields both the rank and the kernel).
std::vector<TableRow> nc_table(int n, int m, size_t budget = kDefaultBudget);

/// Graded dimension of the abstract algebra on the Demazure generators
/// modulo quadratic, braid and the two roundabout relations only, by
/// degreewise word rewriting (no operator evaluation). Entries 0..4m.
GradedDims conjectureA_dims(int n, int m, size_t budget = kDefaultBudget);

struct GammaReport {
  bool annihilated_by_degree4 = false;
  bool unique_up_to_scalar = false;
  bool kills_degree2 = false;
  bool staircase_image_in_ideal = false;
  std::vector<long> quotient_dims;
  bool quotient_matches_pi = false;
  bool all_pass() const {
    return annihilated_by_degree4 && unique_up_to_scalar && kills_degree2 &&
           staircase_image_in_ideal && quotient_matches_pi;
  }
};

/// The degree-2 element gamma of NC(2,2,3) and its five checks.
OperatorExpr<Cyclotomic> gamma_expr(const CycloRing& R);
GammaReport gamma_checks();

struct TraceRow {
  long a = 0, b = 0;
  int i = 0;
  Cyclotomic scalar;  // Xi_m(a, i)
  bool is_trace = false;
};

/// Classification ofd_{w(a,b,i)} at length 3m: the scalar against J and the
/// trace flag (nonzero iff a, b <= 2m).
std::vector<TraceRow> frobenius_trace_classifier(int m);

template <class Fn>
void NCAlgebra::scan_degrees(int dmax, size_t budget, Fn&& consume) const {
  if (R_.n == 3) {
    std::vector<GradedOperator> prev;
    size_t spent = 0;
    for (int d = 1; d <= dmax; ++d) {
      auto words = words_of_length(d);
      spent += words.size();
      if (spent > budget)
        throw CapacityError("word-evaluation budget exceeded at degree " + std::to_string(d));
      std::vector<GradedOperator> ops(words.size());
      for (size_t t = 0; t < words.size(); ++t) {
        const AbiTriple& tr = words[t];
        Word w = abi_word(3, tr);
        if (d == 1) {
          ops[t] = gens_[w[0]];
        } else {
          AbiTriple parent = tr.a >= 1 ? AbiTriple{tr.a - 1, tr.b, tr.i}
                                       : AbiTriple{0, tr.b - 1, tr.i};
          // parent index in the previous layer's (a, i) order
          size_t pt = (size_t)parent.a * 3 + parent.i;
          ops[t] = compose_left(w[0], prev[pt]);
        }
      }
      consume(d, words, ops);
      prev = std::move(ops);
    }
    return;
  }
  // general n: BFS layers, extending words on the right
  struct H {
    size_t operator()(const AffinePerm& g) const { return g.hash(); }
  };
  std::unordered_map<AffinePerm, std::pair<Word, GradedOperator>, H> layer;
  layer.emplace(AffinePerm(R_.n), std::make_pair(Word{}, identity_op()));
  size_t spent = 0;
  for (int d = 1; d <= dmax; ++d) {
    std::unordered_map<AffinePerm, std::pair<Word, GradedOperator>, H> next;
    for (const auto& [g, wo] : layer) {
      for (int i = 0; i < R_.n; ++i) {
        AffinePerm h = g.mul_simple_right(i);
        if (coxeter_length(h) != d || next.count(h)) continue;
        if (++spent > budget)
          throw CapacityError("word-evaluation budget exceeded at degree " + std::to_string(d));
        Word w = wo.first;
        w.push_back(i);
        next.emplace(h, std::make_pair(std::move(w), compose_right(wo.second, i)));
      }
    }
    std::vector<std::pair<Word, GradedOperator>> sorted;
    for (auto& [g, wo] : next) sorted.push_back(wo);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AbiTriple> words;  // not abi-indexed for general n
    std::vector<GradedOperator> ops;
    for (auto& [w, op] : sorted) {
      words.push_back(AbiTriple{(long)w.size() - 1, 0, w.empty() ? 0 : w.back()});
      ops.push_back(std::move(op));
    }
    consume(d, words, ops);
    layer = std::move(next);
  }
}

}  // namespace nilcox
