#include "nilcox/serial.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nilcox/coinv.hpp"

namespace nilcox {

namespace fs = std::filesystem;

nlohmann::json cyclo_to_json(const Cyclotomic& x, int N_hint) {
  nlohmann::json j;
  int N = x.field() ? x.conductor() : N_hint;
  j["N"] = N;
  nlohmann::json coeffs = nlohmann::json::array();
  int deg = x.field() ? x.field()->degree()
                      : (N > 0 ? CycloField::get(N).degree() : 0);
  for (int t = 0; t < deg; ++t) {
    mpq_class c = x.coeff(t);
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  j["coeffs"] = coeffs;
  return j;
}

Cyclotomic cyclo_from_json(const nlohmann::json& j) {
  int N = j.at("N").get<int>();
  if (N == 0) return Cyclotomic();
  const CycloField& F = CycloField::get(N);
  Cyclotomic x = F.zero();
  const auto& coeffs = j.at("coeffs");
  for (size_t t = 0; t < coeffs.size(); ++t) {
    mpq_class c(mpz_class(coeffs[t][0].get<std::string>()),
                mpz_class(coeffs[t][1].get<std::string>()));
    c.canonicalize();
    if (c != 0) x += F.xi_pow((long)t).mul_rational(c);
  }
  return x;
}

nlohmann::json formal_to_json(const FormalScalar& s) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : s.coeffs()) {
    mpq_class q = c;
    q.canonicalize();
    j[std::to_string(e)] = q.get_str();
  }
  return j;
}

FormalScalar formal_from_json(const nlohmann::json& j) {
  FormalScalar s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    mpq_class c(it.value().get<std::string>());
    c.canonicalize();
    s += FormalScalar::p_pow(std::stol(it.key()), c);
  }
  return s;
}

nlohmann::json poly_to_json(const MultiPoly<Cyclotomic>& f, int N_hint) {
  nlohmann::json exps = nlohmann::json::array();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    exps.push_back(e);
    coeffs.push_back(cyclo_to_json(c, N_hint));
  }
  return {{"exps", exps}, {"coeffs", coeffs}};
}

MultiPoly<Cyclotomic> poly_from_json(const nlohmann::json& j, int nvars) {
  MultiPoly<Cyclotomic> f(nvars);
  const auto& exps = j.at("exps");
  const auto& coeffs = j.at("coeffs");
  for (size_t t = 0; t < exps.size(); ++t)
    f.add_term(exps[t].get<Exps>(), cyclo_from_json(coeffs[t]));
  return f;
}

nlohmann::json expr_to_json(const OperatorExpr<Cyclotomic>& e, int N_hint) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, w] : e.terms)
    out.push_back({{"coeff", cyclo_to_json(c, N_hint)}, {"word", word_str(w)}});
  return out;
}

namespace {
std::string slice_path(int n, int m, int d, const std::string& dir) {
  return dir + "/slice_n" + std::to_string(n) + "_m" + std::to_string(m) + "_d" +
         std::to_string(d) + ".json";
}
}  // namespace

void save_slice_cache(const CoinvariantSlice& s, const std::string& cache_dir) {
  fs::create_directories(cache_dir);
  nlohmann::json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["d"] = s.d;
  j["monomials"] = s.monomials;
  j["pivots"] = s.pivots;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.ideal_rref) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(cyclo_to_json(x, 2 * s.n * s.m));
    rows.push_back(std::move(r));
  }
  j["rref"] = rows;
  std::string final_path = slice_path(s.n, s.m, s.d, cache_dir);
  std::string tmp_path = final_path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    out << j.dump();
  }
  fs::rename(tmp_path, final_path);
}

std::optional<CoinvariantSlice> load_slice_cache(const CycloRing& R, int d,
                                                 const std::string& cache_dir) {
  std::string path = slice_path(R.n, R.m, d, cache_dir);
  std::ifstream in(path);
  if (!in.good()) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  CoinvariantSlice s;
  s.n = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  s.d = j.at("d").get<int>();
  if (s.n != R.n || s.m != R.m || s.d != d) return std::nullopt;
  s.monomials = j.at("monomials").get<std::vector<Exps>>();
  s.pivots = j.at("pivots").get<std::vector<int>>();
  for (const auto& r : j.at("rref")) {
    CycloRow row;
    for (const auto& x : r) row.push_back(cyclo_from_json(x));
    s.ideal_rref.push_back(std::move(row));
  }
  std::vector<char> is_piv(s.monomials.size(), 0);
  for (int p : s.pivots) is_piv[p] = 1;
  for (size_t t = 0; t < s.monomials.size(); ++t)
    if (!is_piv[t]) s.complement.push_back(s.monomials[t]);
  return s;
}

}  // namespace nilcox
