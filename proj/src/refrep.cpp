#include "nilcox/refrep.hpp"

#include <deque>
#include <unordered_map>

namespace nilcox {

namespace {
int mod(long x, int n) {
  long r = x % n;
  if (r < 0) r += n;
  return (int)r;
}
}  // namespace

MonomialMatrix MonomialMatrix::identity(int n) {
  MonomialMatrix g;
  g.n = n;
  g.pi.resize(n);
  g.e.assign(n, 0);
  for (int j = 0; j < n; ++j) g.pi[j] = j;
  return g;
}

bool MonomialMatrix::is_identity() const {
  for (int j = 0; j < n; ++j)
    if (pi[j] != j || e[j] != 0) return false;
  return true;
}

MonomialMatrix MonomialMatrix::reduced_mod(long period) const {
  MonomialMatrix g = *this;
  for (auto& v : g.e) {
    v %= period;
    if (v < 0) v += period;
  }
  return g;
}

size_t MonomialMatrix::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (int j = 0; j < n; ++j) {
    mix((size_t)pi[j]);
    mix((size_t)e[j]);
  }
  return h;
}

MonomialMatrix compose(const MonomialMatrix& v, const MonomialMatrix& w) {
  MonomialMatrix g;
  g.n = v.n;
  g.pi.resize(g.n);
  g.e.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    g.pi[j] = v.pi[w.pi[j]];
    g.e[j] = w.e[j] + v.e[w.pi[j]];
  }
  return g;
}

MonomialMatrix simple_reflection_matrix(int n, int i) {
  MonomialMatrix g = MonomialMatrix::identity(n);
  int a = mod(i - 1, n);  // position of x_i
  int b = mod(i, n);      // position of x_{i+1}
  g.pi[a] = b;
  g.e[a] = 1;
  g.pi[b] = a;
  g.e[b] = -1;
  return g;
}

MonomialMatrix word_matrix(int n, const Word& w) {
  MonomialMatrix g = MonomialMatrix::identity(n);
  for (int i : w) g = compose(g, simple_reflection_matrix(n, i));
  return g;
}

MonomialMatrix translation_action(const std::vector<long>& a) {
  int n = (int)a.size();
  long s = 0;
  for (long v : a) s += v;
  if (s != 0) throw std::invalid_argument("translation vector must sum to zero");
  MonomialMatrix g = MonomialMatrix::identity(n);
  for (int j = 0; j < n; ++j) g.e[j] = (long)n * a[j];
  return g;
}

std::vector<GroupElement> enumerate_Wm(int n, int m) {
  const long period = (long)n * m;
  struct H {
    size_t operator()(const MonomialMatrix& g) const { return g.hash(); }
  };
  std::vector<MonomialMatrix> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = simple_reflection_matrix(n, i).reduced_mod(period);

  std::unordered_map<MonomialMatrix, long, H> depth;
  std::deque<MonomialMatrix> queue;
  MonomialMatrix id = MonomialMatrix::identity(n);
  depth.emplace(id, 0);
  queue.push_back(id);
  std::vector<GroupElement> out;
  while (!queue.empty()) {
    MonomialMatrix g = queue.front();
    queue.pop_front();
    long d = depth[g];
    out.push_back(GroupElement{g, d % 2 == 0 ? 1 : -1, d});
    for (int i = 0; i < n; ++i) {
      MonomialMatrix h = compose(g, gens[i]).reduced_mod(period);
      if (depth.emplace(h, d + 1).second) queue.push_back(h);
    }
  }
  return out;
}

std::vector<RootData> phi1m(int n, int m) {
  std::vector<RootData> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = 1; l <= m; ++l)
        roots.push_back(RootData{i - 1, j - 1, (long)(j - i) + (long)l * n});
  return roots;
}

MultiPoly<Cyclotomic> delta(const CycloRing& R) {
  auto d = MultiPoly<Cyclotomic>::constant(R.n, R.one());
  for (const auto& r : phi1m(R.n, R.m)) {
    MultiPoly<Cyclotomic> root =
        make_variable(R, r.a) - make_variable(R, r.b).scaled(R.zeta_pow(r.zexp));
    d = d * root;
  }
  return d;
}

namespace {

// w(x_a - z^c x_b) = z^E (x_A - z^(c') x_B); returns (A, B, c', E).
struct MovedRoot {
  int A, B;
  long c, E;
};

MovedRoot move_root(const MonomialMatrix& g, int a, int b, long c) {
  MovedRoot r;
  r.A = g.pi[a];
  r.B = g.pi[b];
  r.E = g.e[a];
  r.c = c + g.e[b] - g.e[a];
  return r;
}

// l in x_A - z^(dist + l n) x_B; the root is positive iff l >= 0.
long root_layer(int n, const MovedRoot& r) {
  int dist = mod(r.B - r.A, n);
  if (dist == 0) throw std::logic_error("degenerate root");
  long diff = r.c - dist;
  if (diff % n != 0) throw std::logic_error("root exponent not congruent to distance");
  return diff / n;
}

}  // namespace

long root_counting_length(int n, const Word& w, long bound) {
  MonomialMatrix g = word_matrix(n, w);
  long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int dist = mod(j - i, n);
      for (long l = 0; l <= bound; ++l) {
        MovedRoot r = move_root(g, i - 1, j - 1, dist + l * n);
        if (root_layer(n, r) < 0) ++count;
      }
    }
  return count;
}

long root_counting_length(int n, const Word& w) {
  long bound = (long)w.size() + 1;
  long c = root_counting_length(n, w, bound);
  if (c != root_counting_length(n, w, bound + 1))
    throw std::logic_error("root count not stable under truncation bound");
  return c;
}

MonomialMatrix omega_matrix(int n, int m, int i) {
  Word w = cyclic_word(n, i, m * (n - 1), Direction::clockwise, Anchor::right);
  return word_matrix(n, w).reduced_mod((long)n * m);
}

MonomialMatrix omega_expected(int n, int m) {
  MonomialMatrix g;
  g.n = n;
  g.pi.resize(n);
  g.e.assign(n, (long)m % ((long)n * m));
  for (int j = 0; j < n; ++j) g.pi[j] = mod(j + m, n);
  return g;
}

long reduced_word_zweight(int n, const Word& w) {
  MonomialMatrix prefix = MonomialMatrix::identity(n);
  long total = 0;
  for (int letter : w) {
    int a = mod(letter - 1, n);
    int b = mod(letter, n);
    MovedRoot r = move_root(prefix, a, b, 1);
    if (root_layer(n, r) < 0)
      throw std::invalid_argument("zweight is defined for reduced words only");
    total += r.E;
    prefix = compose(prefix, simple_reflection_matrix(n, letter));
  }
  return total;
}

}  // namespace nilcox
