#include "nilcox/coinv.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>

#include "nilcox/serial.hpp"

namespace nilcox {

std::vector<long> poincare_pi(int n, int m) {
  auto mul_by_kv = [](std::vector<long> a, int k) {
    // multiply by (k)_v = 1 + v + ... + v^(k-1)
    std::vector<long> r(a.size() + k - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (int j = 0; j < k; ++j) r[i + j] += a[i];
    return r;
  };
  std::vector<long> pi(1, 1);
  pi = mul_by_kv(pi, n);
  for (int i = 1; i <= n - 1; ++i) pi = mul_by_kv(pi, i * m);
  return pi;
}

CPoly h_in_y(const CycloRing& R, int c, int k) {
  // complete homogeneous of degree c in y_1..y_k, y_j = zeta^(mj) x_j^m
  CPoly r(R.n);
  std::vector<int> comp(k, 0);
  // enumerate compositions c = c_1 + ... + c_k, c_j >= 0
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      comp[pos] = left;
      Exps e(R.n, 0);
      long zexp = 0;
      for (int j = 0; j < k; ++j) {
        e[j] = R.m * comp[j];
        zexp += (long)(j + 1) * comp[j];
      }
      r.add_term(std::move(e), R.zeta_pow((long)R.m * zexp));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      comp[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (k == 0) {
    if (c == 0) return CPoly::constant(R.n, R.one());
    return r;
  }
  rec(0, c);
  return r;
}

InvariantGens invariant_gens(const CycloRing& R) {
  InvariantGens out;
  int n = R.n;
  // e_i(y_1..y_n): sum over i-subsets
  for (int i = 1; i <= n - 1; ++i) {
    CPoly g(n);
    std::vector<int> idx(i);
    std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == i) {
        Exps e(n, 0);
        long zexp = 0;
        for (int t = 0; t < i; ++t) {
          e[idx[t]] = R.m;
          zexp += idx[t] + 1;
        }
        g.add_term(std::move(e), R.zeta_pow((long)R.m * zexp));
        return;
      }
      for (int j = from; j < n; ++j) {
        idx[pos] = j;
        rec(pos + 1, j + 1);
      }
    };
    rec(0, 0);
    out.gens.push_back(std::move(g));
  }
  out.gens.push_back(CPoly::monomial(n, Exps(n, 1), R.one()));  // a = x_1...x_n
  return out;
}

MonomialBasis basis_X(const CycloRing& R, const std::vector<int>& order) {
  int n = R.n, m = R.m;
  if ((int)order.size() != n) throw std::invalid_argument("order must list all variables");
  MonomialBasis B;
  B.order = order;
  Exps e(n, 0);
  std::function<void(int, bool)> rec = [&](int t, bool earlier_zero) {
    if (t == n) {
      B.monomials.push_back(e);
      return;
    }
    int cap = earlier_zero ? m * (n + 1 - (t + 1)) - 1 : m * (n - (t + 1));
    int pos = order[t] - 1;
    for (int a = 0; a <= cap; ++a) {
      e[pos] = a;
      rec(t + 1, earlier_zero || a == 0);
    }
    e[pos] = 0;
  };
  rec(0, false);
  std::sort(B.monomials.begin(), B.monomials.end(), [](const Exps& a, const Exps& b) {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db;
    return a < b;
  });
  return B;
}

std::vector<CPoly> straightening_relations(const CycloRing& R) {
  std::vector<CPoly> rels;
  int n = R.n;
  for (int k = 1; k <= n; ++k) {
    rels.push_back(h_in_y(R, n - k + 1, k));
    CPoly pre = CPoly::constant(n, R.one());
    Exps box(n, 0);
    for (int j = 0; j < k; ++j) box[j] = 1;
    rels.push_back(CPoly::monomial(n, box, R.one()) * h_in_y(R, n - k, k));
  }
  return rels;
}

namespace {
// lex order reading x_n first (the straightening order): a < b
bool revlex_less(const Exps& a, const Exps& b) {
  for (size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j];
  }
  return false;
}
}  // namespace

Coinvariants::Coinvariants(const CycloRing& R) : R_(R) {
  int n = R.n, m = R.m;
  top_ = m * n * (n - 1) / 2;
  for (const CPoly& rel : straightening_relations(R_)) {
    Rule rule;
    bool first = true;
    for (const auto& [e, c] : rel.terms()) {
      if (first || revlex_less(rule.lead, e)) {
        rule.lead = e;
        rule.lead_coeff = c;
        first = false;
      }
    }
    rule.tail = rel - CPoly::monomial(n, rule.lead, rule.lead_coeff);
    rules_.push_back(std::move(rule));
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  MonomialBasis B = basis_X(R_, order);
  basis_.resize(top_ + 1);
  index_.resize(top_ + 1);
  for (const Exps& e : B.monomials) {
    int d = 0;
    for (int v : e) d += v;
    index_[d][e] = (long)basis_[d].size();
    basis_[d].push_back(e);
  }
  auto pi = poincare_pi(n, m);
  for (int d = 0; d <= top_; ++d)
    if ((long)basis_[d].size() != pi[d])
      throw std::logic_error("X basis count disagrees with pi_m");
}

const std::vector<Exps>& Coinvariants::basis(int d) const {
  static const std::vector<Exps> empty;
  if (d < 0 || d > top_) return empty;
  return basis_[d];
}

long Coinvariants::basis_index(int d, const Exps& e) const {
  auto it = index_[d].find(e);
  if (it == index_[d].end()) throw std::invalid_argument("not a basis monomial");
  return it->second;
}

bool Coinvariants::in_X(const Exps& e) const {
  int d = 0;
  for (int v : e) d += v;
  if (d > top_) return false;
  return index_[d].count(e) > 0;
}

const std::map<Exps, Cyclotomic>& Coinvariants::reduce_monomial(const Exps& e) const {
  auto it = memo_.find(e);
  if (it != memo_.end()) return it->second;
  std::map<Exps, Cyclotomic> result;
  if (in_X(e)) {
    result.emplace(e, R_.one());
  } else {
    const Rule* rule = nullptr;
    for (const Rule& r : rules_) {
      bool div = true;
      for (int j = 0; j < R_.n; ++j)
        if (e[j] < r.lead[j]) {
          div = false;
          break;
        }
      if (div) {
        rule = &r;
        break;
      }
    }
    if (rule) {
      Exps quot(R_.n);
      for (int j = 0; j < R_.n; ++j) quot[j] = e[j] - rule->lead[j];
      Cyclotomic neg_inv = -(rule->lead_coeff.inv());
      for (const auto& [te, tc] : rule->tail.terms()) {
        Exps prod(R_.n);
        for (int j = 0; j < R_.n; ++j) prod[j] = te[j] + quot[j];
        Cyclotomic coeff = tc * neg_inv;
        for (const auto& [be, bc] : reduce_monomial(prod)) {
          auto slot = result.find(be);
          if (slot == result.end()) {
            Cyclotomic v = bc * coeff;
            if (!v.is_zero()) result.emplace(be, std::move(v));
          } else {
            slot->second += bc * coeff;
            if (slot->second.is_zero()) result.erase(slot);
          }
        }
      }
    }
    // no dividing rule and not in X cannot happen: the rule leads cut out X
    if (!rule && !in_X(e)) throw std::logic_error("monomial escapes the rewrite system");
  }
  return memo_.emplace(e, std::move(result)).first->second;
}

CPoly Coinvariants::normal_form(const CPoly& f) const {
  CPoly out(R_.n);
  for (const auto& [e, c] : f.terms())
    for (const auto& [be, bc] : reduce_monomial(e)) out.add_term(be, bc * c);
  return out;
}

CycloRow Coinvariants::coords(int d, const CPoly& f) const {
  CycloRow v(basis(d).size());
  CPoly nf = normal_form(f);
  for (const auto& [e, c] : nf.terms()) {
    int dd = 0;
    for (int x : e) dd += x;
    if (dd != d) throw std::invalid_argument("coords: degree mismatch");
    v[basis_index(d, e)] = c;
  }
  return v;
}

CoinvariantSlice coinvariant_slice(const CycloRing& R, int d, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    auto cached = load_slice_cache(R, d, cache_dir);
    if (cached) return *cached;
  }
  CoinvariantSlice s;
  s.n = R.n;
  s.m = R.m;
  s.d = d;
  // degree-d monomials, graded-lex descending with x_1 > x_2 > ... > x_n
  std::function<void(int, int, Exps&)> gen = [&](int pos, int left, Exps& e) {
    if (pos == R.n - 1) {
      e[pos] = left;
      s.monomials.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      gen(pos + 1, left - v, e);
    }
  };
  Exps scratch(R.n, 0);
  gen(0, d, scratch);

  std::map<Exps, long> col;
  for (size_t j = 0; j < s.monomials.size(); ++j) col[s.monomials[j]] = (long)j;

  CycloMatrix rows;
  for (const CPoly& g : invariant_gens(R).gens) {
    int dg = g.degree();
    if (dg > d) continue;
    // g * (every monomial of degree d - dg)
    std::vector<Exps> hs;
    std::function<void(int, int, Exps&)> gh = [&](int pos, int left, Exps& e) {
      if (pos == R.n - 1) {
        e[pos] = left;
        hs.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[pos] = v;
        gh(pos + 1, left - v, e);
      }
    };
    Exps tmp(R.n, 0);
    gh(0, d - dg, tmp);
    for (const Exps& h : hs) {
      CycloRow row(s.monomials.size());
      for (const auto& [e, c] : g.terms()) {
        Exps prod(R.n);
        for (int j = 0; j < R.n; ++j) prod[j] = e[j] + h[j];
        row[col[prod]] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  s.pivots = rref_in_place(rows);
  s.ideal_rref = std::move(rows);
  std::vector<char> is_piv(s.monomials.size(), 0);
  for (int p : s.pivots) is_piv[p] = 1;
  for (size_t j = 0; j < s.monomials.size(); ++j)
    if (!is_piv[j]) s.complement.push_back(s.monomials[j]);

  if (!cache_dir.empty()) save_slice_cache(s, cache_dir);
  return s;
}

CPoly slice_normal_form(const CycloRing& R, const CoinvariantSlice& s, const CPoly& f) {
  std::map<Exps, long> col;
  for (size_t j = 0; j < s.monomials.size(); ++j) col[s.monomials[j]] = (long)j;
  CycloRow v(s.monomials.size());
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (d != s.d) continue;
    v[col.at(e)] += c;
  }
  for (size_t r = 0; r < s.ideal_rref.size(); ++r) {
    int p = s.pivots[r];
    if (v[p].is_zero()) continue;
    Cyclotomic a = v[p];
    for (size_t c = 0; c < v.size(); ++c)
      if (!s.ideal_rref[r][c].is_zero()) v[c] = v[c] - s.ideal_rref[r][c] * a;
  }
  CPoly out(R.n);
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) out.add_term(s.monomials[j], v[j]);
  return out;
}

namespace {

const std::vector<GroupElement>& wm_elements(const CycloRing& R) {
  static std::map<std::pair<int, int>, std::vector<GroupElement>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(R.n, R.m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_Wm(R.n, R.m)).first;
  return it->second;
}

// the finite S_n copy generated by s_1..s_{n-1}, with signs
std::vector<GroupElement> sn_elements(int n, int m) {
  const long period = (long)n * m;
  struct H {
    size_t operator()(const MonomialMatrix& g) const { return g.hash(); }
  };
  std::vector<MonomialMatrix> gens;
  for (int i = 1; i <= n - 1; ++i)
    gens.push_back(simple_reflection_matrix(n, i).reduced_mod(period));
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
    for (const auto& s : gens) {
      MonomialMatrix h = compose(g, s).reduced_mod(period);
      if (depth.emplace(h, d + 1).second) queue.push_back(h);
    }
  }
  return out;
}

const std::vector<GroupElement>& sn_cached(const CycloRing& R) {
  static std::map<std::pair<int, int>, std::vector<GroupElement>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(R.n, R.m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, sn_elements(R.n, R.m)).first;
  return it->second;
}

}  // namespace

CPoly antisymmetrize(const CycloRing& R, const CPoly& f, bool full) {
  const auto& elems = full ? wm_elements(R) : sn_cached(R);
  CPoly acc(R.n);
  for (const auto& g : elems) {
    CPoly t = matrix_apply(R, g.matrix, f);
    acc += g.sign > 0 ? t : -t;
  }
  return acc;
}

CPoly staircase(const CycloRing& R) {
  Exps e(R.n, 0);
  for (int k = 0; k < R.n - 1; ++k) e[k] = (R.n - 1 - k) * R.m;
  return CPoly::monomial(R.n, std::move(e), R.one());
}

CPoly J_operator(const CycloRing& R, const CPoly& f) {
  CPoly out(R.n);
  auto roots = phi1m(R.n, R.m);
  for (const auto& [e, c] : f.terms()) {
    // A(b) = m^(n-1) A'(b) when all exponents agree mod m, else 0
    bool congruent = true;
    for (int j = 1; j < R.n; ++j)
      if ((e[j] - e[0]) % R.m != 0) {
        congruent = false;
        break;
      }
    if (!congruent) continue;
    CPoly anti = antisymmetrize(R, CPoly::monomial(R.n, e, c), false);
    for (const auto& r : roots) {
      if (anti.is_zero()) break;
      anti = anti.divide_by_linear(r.a, r.b, R.zeta_pow(r.zexp));
    }
    out += anti;
  }
  return out;
}

PairingData frobenius_pairing(const CycloRing& R) {
  PairingData P;
  std::vector<int> fwd(R.n), bwd(R.n);
  for (int i = 0; i < R.n; ++i) {
    fwd[i] = i + 1;
    bwd[i] = R.n - i;
  }
  P.X = basis_X(R, fwd);
  P.Xp = basis_X(R, bwd);
  int top = R.m * R.n * (R.n - 1) / 2;
  size_t N = P.X.monomials.size();
  P.M.assign(N, CycloRow(N));
  for (size_t r = 0; r < N; ++r) {
    int dr = 0;
    for (int v : P.X.monomials[r]) dr += v;
    for (size_t c = 0; c < N; ++c) {
      int dc = 0;
      for (int v : P.Xp.monomials[c]) dc += v;
      if (dr + dc != top) continue;  // homogeneous, so degree-0 part is 0
      Exps prod(R.n);
      for (int j = 0; j < R.n; ++j) prod[j] = P.X.monomials[r][j] + P.Xp.monomials[c][j];
      P.M[r][c] = J_operator(R, CPoly::monomial(R.n, std::move(prod), R.one())).scalar_value();
    }
  }
  return P;
}

bool pairing_nondegenerate(const CycloRing& R) {
  PairingData P = frobenius_pairing(R);
  int top = R.m * R.n * (R.n - 1) / 2;
  auto deg_of = [&](const Exps& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  };
  for (int d = 0; d <= top; ++d) {
    std::vector<size_t> rows, cols;
    for (size_t r = 0; r < P.X.monomials.size(); ++r)
      if (deg_of(P.X.monomials[r]) == d) rows.push_back(r);
    for (size_t c = 0; c < P.Xp.monomials.size(); ++c)
      if (deg_of(P.Xp.monomials[c]) == top - d) cols.push_back(c);
    if (rows.size() != cols.size()) return false;
    if (rows.empty()) continue;
    CycloMatrix block(rows.size(), CycloRow(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) block[i][j] = P.M[rows[i]][cols[j]];
    if (determinant(block).is_zero()) return false;
  }
  return true;
}

}  // namespace nilcox
