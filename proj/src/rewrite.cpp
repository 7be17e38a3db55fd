#include "nilcox/rewrite.hpp"

namespace nilcox {

WordRewriter::WordRewriter(int n) : n_(n) {}

const AbiTriple& WordRewriter::canonical_of(const AffinePerm& g) {
  auto it = canon_.find(g);
  if (it == canon_.end()) {
    auto t = abi_decompose(g);
    if (!t) throw std::invalid_argument("identity has no abi triple");
    it = canon_.emplace(g, *t).first;
  }
  return it->second;
}

long WordRewriter::canonical_zweight(const AffinePerm& g) {
  auto it = zw_.find(g);
  if (it == zw_.end())
    it = zw_.emplace(g, reduced_word_zweight(n_, abi_word(n_, canonical_of(g)))).first;
  return it->second;
}

std::optional<WordRewriter::Reduced> WordRewriter::canonicalize(const Word& w) {
  AffinePerm g = word_to_perm(n_, w);
  if (coxeter_length(g) != (long)w.size()) return std::nullopt;
  if (g.is_identity()) return Reduced{AbiTriple{-1, -1, -1}, 0};
  Reduced r;
  r.t = canonical_of(g);
  r.zexp = canonical_zweight(g) - reduced_word_zweight(n_, w);
  return r;
}

std::optional<WordRewriter::Reduced> WordRewriter::left_mul(int i, const AbiTriple& t) {
  Word w = abi_word(n_, t);
  Word iw;
  iw.reserve(w.size() + 1);
  iw.push_back(i);
  iw.insert(iw.end(), w.begin(), w.end());
  return canonicalize(iw);
}

std::optional<WordRewriter::Reduced> WordRewriter::right_mul(const AbiTriple& t, int i) {
  Word w = abi_word(n_, t);
  w.push_back(i);
  return canonicalize(w);
}

}  // namespace nilcox
