#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcox {

/// A word in the simple reflections, letters in Omega = Z/nZ stored as
/// 0..n-1 (index n is the same letter as 0).
using Word = std::vector<int>;

enum class Direction { clockwise, widdershins };
enum class Anchor { left, right };
enum class WordSymmetry { sigma, tau, reverse };

/// Affine permutation of type A_{n-1}^aff in window notation: the values
/// f(1), ..., f(n) of a bijection f of Z with f(i+n) = f(i)+n and
/// sum(f(i) - i) = 0.
class AffinePerm {
 public:
  explicit AffinePerm(int n);
  AffinePerm(int n, std::vector<long> window);

  int rank() const { return n_; }
  const std::vector<long>& window() const { return w_; }
  long apply(long x) const;

  bool is_identity() const;
  AffinePerm operator*(const AffinePerm& o) const;
  /// Right multiplication by the simple reflection s_i, i in 0..n-1.
  AffinePerm mul_simple_right(int i) const;
  /// Left multiplication by s_i.
  AffinePerm mul_simple_left(int i) const;
  AffinePerm inverse() const;

  bool operator==(const AffinePerm& o) const { return w_ == o.w_; }
  bool operator!=(const AffinePerm& o) const { return !(*this == o); }
  bool operator<(const AffinePerm& o) const { return w_ < o.w_; }

  size_t hash() const;

 private:
  int n_;
  std::vector<long> w_;
};

AffinePerm word_to_perm(int n, const Word& w);

/// Coxeter length as the affine inversion count
/// sum_{i<j} |floor((f(j) - f(i)) / n)|.
long coxeter_length(const AffinePerm& g);

bool is_reduced(int n, const Word& w);

/// Right descent: l(g s_i) < l(g).
bool is_right_descent(const AffinePerm& g, int i);
bool is_left_descent(const AffinePerm& g, int i);

/// Cyclic word of length d >= 1. anchor = left fixes the first letter to i,
/// anchor = right fixes the last letter to i. Clockwise letters increment
/// mod n, widdershins letters decrement.
Word cyclic_word(int n, int i, int d, Direction dir, Anchor anchor);

/// The parametrization w(a, b, i) of nonidentity elements (n = 3, and the
/// dihedral n = 2 degeneration with b = 0): a clockwise run of length a+1
/// overlapping a widdershins run of length b+1 in one letter, ending in i.
struct AbiTriple {
  long a = 0;
  long b = 0;
  int i = 0;
  bool operator==(const AbiTriple& o) const { return a == o.a && b == o.b && i == o.i; }
};

Word abi_word(int n, const AbiTriple& t);

/// Inverse of abi_word on non-identity elements. Returns nullopt for the
/// identity. Requires n = 3 (or n = 2, where b = 0 throughout).
std::optional<AbiTriple> abi_decompose(const AffinePerm& g);

Word word_symmetry(int n, const Word& w, WordSymmetry s);

/// Parse "1,2,3" or (n = 3 only) letter aliases s,t,u for 1,2,0, e.g. "stu".
Word parse_word(int n, const std::string& text);
std::string word_str(const Word& w);

/// One canonical reduced word per element of length d, enumerated by BFS
/// over the Cayley graph; for n = 3 this coincides with the abi words as a
/// set of represented elements.
std::vector<Word> bfs_words_of_length(int n, int d, size_t budget);

}  // namespace nilcox
