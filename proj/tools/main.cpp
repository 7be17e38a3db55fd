#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilcox/checks.hpp"
#include "nilcox/svg.hpp"

using namespace nilcox;

namespace {

int run_dims(int n, int m, bool conjA, const std::string& output, size_t budget,
             int degree) {
  if (output == "csv" && !conjA) {
    std::cout << "m,degree,dim,new_relations\n";
    for (const TableRow& row : nc_table(n, m, budget)) {
      if (degree >= 0 && row.degree != degree) continue;
      std::cout << m << "," << row.degree << "," << row.dim << ","
                << row.new_relations << "\n";
    }
    return 0;
  }
  GradedDims D = conjA ? conjectureA_dims(n, m, budget) : nc_graded_dims(n, m, budget);
  if (degree >= 0) {
    long v = degree < (int)D.dims.size() ? D.dims[degree] : 0;
    if (output == "json") {
      nlohmann::json j{{"n", D.n}, {"m", D.m}, {"degree", degree}, {"dim", v}};
      if (conjA) j["conjectureA"] = true;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }
  if (output == "json") {
    nlohmann::json j;
    j["n"] = D.n;
    j["m"] = D.m;
    j["dims"] = D.dims;
    if (conjA) j["conjectureA"] = true;
    std::cout << j.dump() << "\n";
  } else if (output == "csv") {
    std::cout << "m,degree,dim,new_relations\n";
    for (size_t d = 0; d < D.dims.size(); ++d)
      std::cout << m << "," << d << "," << D.dims[d] << ",0\n";
  } else {
    for (size_t d = 0; d < D.dims.size(); ++d) {
      if (d) std::cout << " ";
      std::cout << D.dims[d];
    }
    std::cout << " | total " << D.total() << "\n";
  }
  return 0;
}

int report(const std::string& suite, const SuiteResult& res) {
  if (res.ok()) {
    std::cout << "suite " << suite << ": pass (" << res.checks << " checks)\n";
    return 0;
  }
  std::cout << "suite " << suite << ": FAIL\n";
  for (const auto& f : res.failures) std::cout << "  counterexample: " << f << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the exotic nilCoxeter algebra NC(m,m,n)"};
  app.require_subcommand(1);

  int n = 3, m = 2, degree = -1;
  unsigned long seed = 2024;
  size_t budget = kDefaultBudget;
  std::string output = "text", cache_dir, suite = "braid", order = "", outfile = "";
  bool conjA = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "rank parameter n >= 2");
    cmd->add_option("--m", m, "root-of-unity order m >= 2");
    cmd->add_option("--budget", budget, "word-evaluation cap");
    cmd->add_option("--cache-dir", cache_dir, "slice cache directory");
    cmd->add_option("--output", output, "text|json|csv|svg");
    cmd->add_option("--seed", seed, "seed for randomized suites");
    cmd->add_option("--degree", degree, "restrict to one degree where meaningful");
  };

  CLI::App* dims = app.add_subcommand("dims", "graded dimensions of NC(m,m,n)");
  add_common(dims);
  dims->add_flag("--conjectureA", conjA, "roundabout-only algebra instead of NC");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite, "roundabout|frobenius|xi|gamma|braid");
  verify->add_option("--order", order, "variable order for the frobenius basis, e.g. 1,2,3");

  CLI::App* svg = app.add_subcommand("alcove-svg", "alcove diagram out to length 3m");
  add_common(svg);
  svg->add_option("--out", outfile, "output file (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (n < 2 || m < 2) {
      std::cerr << "error: need n >= 2 and m >= 2\n";
      return 2;
    }
    if (dims->parsed()) return run_dims(n, m, conjA, output, budget, degree);
    if (verify->parsed()) {
      if (suite == "roundabout") return report(suite, check_roundabout(n, m, seed, 100));
      if (suite == "frobenius") {
        std::vector<int> ord;
        if (order.empty())
          for (int i = 1; i <= n; ++i) ord.push_back(i);
        else
          for (int v : parse_word(n, order)) ord.push_back(v == 0 ? n : v);
        return report(suite, check_frobenius(n, m, ord, cache_dir));
      }
      if (suite == "xi") {
        if (n != 3) {
          std::cerr << "error: xi suite needs n = 3\n";
          return 2;
        }
        return report(suite, check_xi(m));
      }
      if (suite == "gamma") {
        if (n != 3 || m != 2) {
          std::cerr << "error: gamma suite is the (n,m) = (3,2) special element\n";
          return 2;
        }
        return report(suite, check_gamma());
      }
      if (suite == "braid") return report(suite, check_braid(n, m, seed, 50));
      std::cerr << "error: unknown suite " << suite << "\n";
      return 2;
    }
    if (svg->parsed()) {
      if (n != 3) {
        std::cerr << "error: alcove diagrams need n = 3\n";
        return 2;
      }
      std::string s = alcove_svg(m);
      if (outfile.empty()) {
        std::cout << s;
      } else {
        std::ofstream f(outfile);
        f << s;
      }
      return 0;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
