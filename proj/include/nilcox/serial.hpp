#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nilcox/demazure.hpp"
#include "nilcox/rings.hpp"

namespace nilcox {

struct CoinvariantSlice;

/// {"N": int, "coeffs": [["num","den"], ...]} with decimal-string integers.
nlohmann::json cyclo_to_json(const Cyclotomic& x, int N_hint = 0);
Cyclotomic cyclo_from_json(const nlohmann::json& j);

/// {"p_exp": coeff} map with string keys, e.g. {"-2": "1", "0": "3/2"}.
nlohmann::json formal_to_json(const FormalScalar& s);
FormalScalar formal_from_json(const nlohmann::json& j);

/// {"exps": [[e1..en], ...], "coeffs": [...]}.
nlohmann::json poly_to_json(const MultiPoly<Cyclotomic>& f, int N_hint = 0);
MultiPoly<Cyclotomic> poly_from_json(const nlohmann::json& j, int nvars);

/// JSON list of {"coeff":, "word":} with words as comma-separated letters.
nlohmann::json expr_to_json(const OperatorExpr<Cyclotomic>& e, int N_hint = 0);

/// Slice cache, one JSON file per (n, m, d); writes use atomic rename.
void save_slice_cache(const CoinvariantSlice& s, const std::string& cache_dir);
std::optional<CoinvariantSlice> load_slice_cache(const CycloRing& R, int d,
                                                 const std::string& cache_dir);

}  // namespace nilcox
