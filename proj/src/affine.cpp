#include "nilcox/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nilcox {

namespace {
int norm_letter(int n, long i) {
  long r = i % n;
  if (r < 0) r += n;
  return (int)r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

AffinePerm::AffinePerm(int n) : n_(n), w_(n) {
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  for (int i = 0; i < n; ++i) w_[i] = i + 1;
}

AffinePerm::AffinePerm(int n, std::vector<long> window) : n_(n), w_(std::move(window)) {
  if ((int)w_.size() != n) throw std::invalid_argument("window size mismatch");
  long s = 0;
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    s += w_[i] - (i + 1);
    seen[norm_letter(n, w_[i])] += 1;
  }
  if (s != 0) throw std::invalid_argument("window does not sum to 0");
  for (int i = 0; i < n; ++i)
    if (seen[i] != 1) throw std::invalid_argument("window not distinct mod n");
}

long AffinePerm::apply(long x) const {
  // positions are 1-based; f(x + n) = f(x) + n
  long r = x % n_;
  long q = x / n_;
  if (r <= 0) {
    r += n_;
    q -= 1;
  }
  return w_[r - 1] + q * n_;
}

bool AffinePerm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  std::vector<long> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = apply(o.w_[i]);
  return AffinePerm(n_, std::move(w));
}

AffinePerm AffinePerm::mul_simple_right(int i) const {
  // (g s_i): swap the entries at positions i, i+1 (periodically).
  std::vector<long> w = w_;
  int a = i == 0 ? n_ : i;  // position in 1..n
  if (a < n_) {
    std::swap(w[a - 1], w[a]);
  } else {
    // swap positions n and n+1, i.e. window entries n and 1 shifted
    long vn = w[n_ - 1], v1 = w[0];
    w[n_ - 1] = v1 + n_;
    w[0] = vn - n_;
  }
  return AffinePerm(n_, std::move(w));
}

AffinePerm AffinePerm::mul_simple_left(int i) const {
  // (s_i g): swap the values i, i+1 (periodically).
  std::vector<long> w = w_;
  int a = i == 0 ? n_ : i;
  for (int j = 0; j < n_; ++j) {
    long r = w[j] % n_;
    if (r <= 0) r += n_;
    if (r == a) w[j] += 1;
    else if (r == a % n_ + 1) w[j] -= 1;
  }
  return AffinePerm(n_, std::move(w));
}

AffinePerm AffinePerm::inverse() const {
  std::vector<long> w(n_);
  for (int i = 0; i < n_; ++i) {
    long v = w_[i];
    long r = v % n_;
    long q = v / n_;
    if (r <= 0) {
      r += n_;
      q -= 1;
    }
    w[r - 1] = (i + 1) - q * n_;
  }
  return AffinePerm(n_, std::move(w));
}

size_t AffinePerm::hash() const {
  size_t h = 1469598103934665603ull;
  for (long v : w_) {
    h ^= (size_t)(v + 0x9e3779b97f4a7c15ull);
    h *= 1099511628211ull;
  }
  return h;
}

AffinePerm word_to_perm(int n, const Word& w) {
  AffinePerm g(n);
  for (int i : w) g = g.mul_simple_right(norm_letter(n, i));
  return g;
}

long coxeter_length(const AffinePerm& g) {
  int n = g.rank();
  long len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      len += std::labs(floor_div(g.window()[j] - g.window()[i], n));
  return len;
}

bool is_reduced(int n, const Word& w) {
  return coxeter_length(word_to_perm(n, w)) == (long)w.size();
}

bool is_right_descent(const AffinePerm& g, int i) {
  return coxeter_length(g.mul_simple_right(i)) < coxeter_length(g);
}

bool is_left_descent(const AffinePerm& g, int i) {
  return coxeter_length(g.mul_simple_left(i)) < coxeter_length(g);
}

Word cyclic_word(int n, int i, int d, Direction dir, Anchor anchor) {
  if (d < 1) throw std::invalid_argument("cyclic word length must be >= 1");
  int step = dir == Direction::clockwise ? 1 : -1;
  int first = anchor == Anchor::left ? i : i - step * (d - 1);
  Word w(d);
  for (int k = 0; k < d; ++k) w[k] = norm_letter(n, first + (long)step * k);
  return w;
}

Word abi_word(int n, const AbiTriple& t) {
  if (t.a < 0 || t.b < 0) throw std::invalid_argument("abi parameters must be >= 0");
  if (n == 2 && t.b != 0) throw std::invalid_argument("n = 2 uses b = 0");
  // j is where the widdershins run starts; for b = 0 take j + 1 = i.
  int j = t.b == 0 ? norm_letter(n, t.i - 1) : norm_letter(n, t.i + t.b - 1);
  Word w;
  w.reserve(t.a + t.b + 1);
  if (t.a > 0) {
    Word cw = cyclic_word(n, j, (int)t.a, Direction::clockwise, Anchor::right);
    w.insert(w.end(), cw.begin(), cw.end());
  }
  w.push_back(norm_letter(n, j + 1));
  if (t.b > 0) {
    Word ws = cyclic_word(n, t.i, (int)t.b, Direction::widdershins, Anchor::right);
    w.insert(w.end(), ws.begin(), ws.end());
  }
  return w;
}

std::optional<AbiTriple> abi_decompose(const AffinePerm& g) {
  int n = g.rank();
  if (n != 2 && n != 3)
    throw std::invalid_argument("abi parametrization is stated for n = 3 (and n = 2)");
  long d = coxeter_length(g);
  if (d == 0) return std::nullopt;
  // Strip the maximal terminal widdershins run, then match the remaining
  // clockwise ray; uniqueness makes the scan safe.
  for (int i = 0; i < n; ++i) {
    long bmax = n == 2 ? 0 : d - 1;
    for (long b = 0; b <= bmax; ++b) {
      AbiTriple t{d - 1 - b, b, i};
      if (word_to_perm(n, abi_word(n, t)) == g) return t;
    }
  }
  throw std::logic_error("abi_decompose: no triple found (element not parametrized)");
}

Word word_symmetry(int n, const Word& w, WordSymmetry s) {
  Word r;
  r.reserve(w.size());
  switch (s) {
    case WordSymmetry::sigma:
      for (int i : w) r.push_back(norm_letter(n, i + 1));
      break;
    case WordSymmetry::tau:
      for (int i : w) r.push_back(norm_letter(n, -i));
      break;
    case WordSymmetry::reverse:
      r.assign(w.rbegin(), w.rend());
      break;
  }
  return r;
}

Word parse_word(int n, const std::string& text) {
  Word w;
  bool alias = false;
  for (char c : text)
    if (c == 's' || c == 't' || c == 'u') alias = true;
  if (alias) {
    if (n != 3) throw std::invalid_argument("letter aliases s,t,u require n = 3");
    for (char c : text) {
      if (c == 's') w.push_back(1);
      else if (c == 't') w.push_back(2);
      else if (c == 'u') w.push_back(0);
      else if (c == ',' || c == ' ') continue;
      else throw std::invalid_argument(std::string("bad letter: ") + c);
    }
    return w;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    w.push_back(norm_letter(n, std::stol(tok)));
  }
  return w;
}

std::string word_str(const Word& w) {
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << ",";
    os << w[k];
  }
  return os.str();
}

std::vector<Word> bfs_words_of_length(int n, int d, size_t budget) {
  struct H {
    size_t operator()(const AffinePerm& g) const { return g.hash(); }
  };
  std::unordered_map<AffinePerm, Word, H> layer;
  layer.emplace(AffinePerm(n), Word{});
  for (int step = 0; step < d; ++step) {
    std::unordered_map<AffinePerm, Word, H> next;
    for (const auto& [g, w] : layer) {
      for (int i = 0; i < n; ++i) {
        AffinePerm h = g.mul_simple_right(i);
        if (coxeter_length(h) != step + 1) continue;
        if (next.count(h)) continue;
        Word w2 = w;
        w2.push_back(i);
        next.emplace(std::move(h), std::move(w2));
        if (next.size() > budget)
          throw std::length_error("word budget exceeded in BFS enumeration");
      }
    }
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (auto& [g, w] : layer) out.push_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilcox
