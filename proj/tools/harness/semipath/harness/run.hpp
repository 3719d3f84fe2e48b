#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semipath/counting.hpp"
#include "semipath/levinson.hpp"
#include "semipath/harness/instance_file.hpp"

namespace semipath::harness {

enum class Algorithm { durbin, levinson, bordering, series };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;

/// Algorithm and instance do not fit together (e.g. levinson without b).
class IncompatibleRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveRequest {
  Algorithm algorithm = Algorithm::durbin;
  BetaVariant variant = BetaVariant::recompute;
  bool check = false;
  bool count = false;
};

struct OpReport {
  std::string algorithm;
  std::string variant;
  std::string semiring;
  std::vector<double> solution;
  OpCounts counts;                  // all zero unless counting was requested
  std::optional<bool> residual_ok;  // set iff a check was requested
  double elapsed_ms = 0.0;
};

/// Solves `inst` with the requested algorithm. Solver failures propagate as
/// semipath::SolverError.
OpReport run_solve(const InstanceFile& inst, const SolveRequest& req);

nlohmann::json to_json(const OpReport& report, bool include_elapsed = true);

struct BenchRequest {
  std::string semiring;
  Algorithm algorithm = Algorithm::durbin;
  BetaVariant variant = BetaVariant::recompute;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;
  std::uint64_t seed = 42;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t seeds = 0;
  double mean_add = 0.0;
  double mean_mul = 0.0;
  double mean_closure = 0.0;
  double mean_inverse = 0.0;
  double mean_elapsed_ms = 0.0;
  // count(n) / count(n/2), when size n/2 is also in the table
  std::optional<double> add_ratio;
  std::optional<double> mul_ratio;
};

struct BenchTable {
  std::string semiring;
  std::string algorithm;
  std::string variant;
  std::vector<BenchRow> rows;
};

BenchTable run_bench(const BenchRequest& req);

nlohmann::json to_json(const BenchTable& table, bool include_elapsed = true);

/// Random solvable instance of dimension n. MaxPlus-type entries are
/// integers in [-10, 0]; NonNegReal instances satisfy r0 + 2·Σr_i < 0.9.
/// durbin gets a Yule–Walker instance, every other algorithm a system with b.
InstanceFile generate_instance(std::string_view semiring, Algorithm algorithm, std::size_t n,
                               std::mt19937_64& rng);

/// SEMIPATH_SEED if set and numeric, otherwise 42.
std::uint64_t default_seed();

}  // namespace semipath::harness
