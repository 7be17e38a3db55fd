#pragma once

#include <optional>
#include <unordered_map>

#include "nilcox/refrep.hpp"

namespace nilcox {

/// Symbolic products in the quadratic-plus-braid algebra on the Demazure
/// generators, with one basis word per group element (the abi words). A
/// reduced word u for g satisfies d_u = z^e d_canonical(g) where e is read
/// off the z-prefactors of the inversion roots; non-reduced words are zero.
/// Scalar consistency (independence of the braid-move path) is a consequence
/// of the operator realization and is covered by tests, not assumed blindly.
class WordRewriter {
 public:
  explicit WordRewriter(int n);

  struct Reduced {
    AbiTriple t;
    long zexp;  // d_word = z^zexp d_{abi_word(t)}
  };

  /// nullopt when the word is not reduced (the product is zero).
  std::optional<Reduced> canonicalize(const Word& w);
  std::optional<Reduced> left_mul(int i, const AbiTriple& t);
  std::optional<Reduced> right_mul(const AbiTriple& t, int i);

  int rank() const { return n_; }

 private:
  struct PermHash {
    size_t operator()(const AffinePerm& g) const { return g.hash(); }
  };

  const AbiTriple& canonical_of(const AffinePerm& g);
  long canonical_zweight(const AffinePerm& g);

  int n_;
  std::unordered_map<AffinePerm, AbiTriple, PermHash> canon_;
  std::unordered_map<AffinePerm, long, PermHash> zw_;
};

}  // namespace nilcox
