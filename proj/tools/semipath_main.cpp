// semipath: solve and benchmark symmetric Toeplitz Bellman systems over
// semirings. Output is a single JSON object on stdout.
//
// Exit codes: 0 success, 2 parse/request error, 3 solver undefined,
// 4 residual check failed.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semipath/errors.hpp"
#include "semipath/harness/instance_file.hpp"
#include "semipath/harness/registry.hpp"
#include "semipath/harness/run.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRequest = 2;
constexpr int kExitSolver = 3;
constexpr int kExitResidual = 4;

using nlohmann::json;
using namespace semipath;
using namespace semipath::harness;

void print_error(std::string_view kind, const std::string& message, const json& extra = json::object()) {
  json err = extra;
  err["kind"] = kind;
  err["message"] = message;
  std::cout << json{{"error", err}}.dump(2) << '\n';
}

const std::vector<std::string> kAlgorithms = {"durbin", "levinson", "bordering", "series"};
const std::vector<std::string> kVariants = {"recompute", "recursive", "fallback"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal Toeplitz Bellman solvers over semirings"};
  app.require_subcommand(1);

  std::string semiring;
  std::string algorithm_name;
  std::string variant_name = "recompute";
  std::string input;
  bool check = false;
  bool count = false;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;

  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("--semiring", semiring, "Semiring name")->required();
  solve->add_option("--algorithm", algorithm_name, "durbin | levinson | bordering | series")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--variant", variant_name, "recompute | recursive | fallback")
      ->check(CLI::IsMember(kVariants));
  solve->add_flag("--check", check, "Verify x = T x + b and report residual_ok");
  solve->add_flag("--count-ops", count, "Count semiring operations");
  solve->add_option("--input", input, "Instance file (JSON)")->required();

  auto* bench = app.add_subcommand("bench", "Count operations on random instances");
  bench->add_option("--semiring", semiring, "Semiring name")->required();
  bench->add_option("--algorithm", algorithm_name, "durbin | levinson | bordering | series")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  bench->add_option("--variant", variant_name, "recompute | recursive | fallback")
      ->check(CLI::IsMember(kVariants));
  bench->add_option("--sizes", sizes, "Comma-separated ascending sizes")->required()->delimiter(',');
  bench->add_option("--seeds", seeds, "Random instances per size")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("semirings", "List registered semiring names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitRequest;
  }

  const Algorithm algorithm = parse_algorithm(algorithm_name).value_or(Algorithm::durbin);
  const BetaVariant variant = parse_beta_variant(variant_name).value_or(BetaVariant::recompute);

  try {
    if (*list) {
      json names = json::array();
      for (auto name : kSemiringNames) names.push_back(name);
      std::cout << names.dump(2) << '\n';
      return kExitOk;
    }

    if (*solve) {
      auto inst = parse_instance(input);
      if (inst.semiring != semiring) {
        throw IncompatibleRequest("--semiring " + semiring + " does not match the file's semiring '" +
                                  inst.semiring + "'");
      }
      const auto report = run_solve(inst, SolveRequest{algorithm, variant, check, count});
      std::cout << to_json(report).dump(2) << '\n';
      if (report.residual_ok && !*report.residual_ok) return kExitResidual;
      return kExitOk;
    }

    if (*bench) {
      BenchRequest req{semiring, algorithm, variant, sizes, seeds, default_seed()};
      std::cout << to_json(run_bench(req)).dump(2) << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    print_error("parse", e.what(), json{{"context", e.context()}});
    return kExitRequest;
  } catch (const IncompatibleRequest& e) {
    print_error("request", e.what());
    return kExitRequest;
  } catch (const SolverError& e) {
    print_error(to_string(e.kind()), e.what(), json{{"step", e.step()}});
    return kExitSolver;
  } catch (const ShapeMismatch& e) {
    print_error("request", e.what());
    return kExitRequest;
  }
  return kExitOk;
}
