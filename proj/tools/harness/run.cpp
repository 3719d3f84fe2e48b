#include "semipath/harness/run.hpp"

#include <chrono>
#include <cstdlib>
#include <map>

#include "semipath/bordering.hpp"
#include "semipath/harness/registry.hpp"
#include "semipath/toeplitz.hpp"

namespace semipath::harness {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::durbin:
      return "durbin";
    case Algorithm::levinson:
      return "levinson";
    case Algorithm::bordering:
      return "bordering";
    case Algorithm::series:
      return "series";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  if (text == "durbin") return Algorithm::durbin;
  if (text == "levinson") return Algorithm::levinson;
  if (text == "bordering") return Algorithm::bordering;
  if (text == "series") return Algorithm::series;
  return std::nullopt;
}

namespace {

using nlohmann::json;

template <class V>
std::vector<V> convert(const std::vector<double>& values) {
  std::vector<V> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(static_cast<V>(v));
  return out;
}

template <class V>
struct TypedInstance {
  V r0;
  std::vector<V> r;
  std::optional<std::vector<V>> b;

  SymToeplitz<V> matrix() const {
    if (b) return SymToeplitz<V>{r0, r};
    return SymToeplitz<V>{r0, std::vector<V>(r.begin(), r.end() - 1)};
  }
  const std::vector<V>& rhs() const { return b ? *b : r; }
};

template <Semiring S>
Matrix<value_t<S>> dispatch(const S& s, const TypedInstance<value_t<S>>& inst, const SolveRequest& req) {
  switch (req.algorithm) {
    case Algorithm::durbin:
      return durbin(s, YuleWalkerProblem<value_t<S>>{inst.r0, inst.r}, req.variant);
    case Algorithm::levinson:
      return levinson(s, ToeplitzBellmanProblem<value_t<S>>{inst.r0, inst.r, *inst.b}, req.variant);
    case Algorithm::bordering:
      return bordering_solve(s, toeplitz_expand(inst.matrix()), Matrix<value_t<S>>::column(inst.rhs()));
    case Algorithm::series:
      return mat_mul(s, series_closure(s, toeplitz_expand(inst.matrix())), Matrix<value_t<S>>::column(inst.rhs()));
  }
  throw IncompatibleRequest("unknown algorithm");
}

template <Semiring S>
OpReport solve_with(const S& s, const InstanceFile& file, const SolveRequest& req) {
  using V = value_t<S>;
  TypedInstance<V> inst{static_cast<V>(file.r0), convert<V>(file.r), std::nullopt};
  if (file.b) inst.b = convert<V>(*file.b);

  OpReport report;
  report.algorithm = std::string(to_string(req.algorithm));
  report.variant = std::string(to_string(req.variant));
  report.semiring = file.semiring;

  const auto start = std::chrono::steady_clock::now();
  Matrix<V> sol;
  if (req.count) {
    sol = dispatch(Counting<S>(s, report.counts), inst, req);
  } else {
    sol = dispatch(s, inst, req);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (const V& v : sol.values()) report.solution.push_back(static_cast<double>(v));
  if (req.check) {
    report.residual_ok = residual_check(s, inst.matrix(), sol, Matrix<V>::column(inst.rhs()));
  }
  return report;
}

}  // namespace

OpReport run_solve(const InstanceFile& inst, const SolveRequest& req) {
  if (req.algorithm == Algorithm::levinson && inst.is_yule_walker()) {
    throw IncompatibleRequest("levinson needs a right-hand side 'b'");
  }
  if (req.algorithm == Algorithm::durbin && !inst.is_yule_walker()) {
    throw IncompatibleRequest("durbin solves the Yule-Walker form and does not accept 'b'");
  }
  return visit_semiring(inst.semiring, [&](const auto& s) { return solve_with(s, inst, req); });
}

json to_json(const OpReport& report, bool include_elapsed) {
  const bool boolean = report.semiring == Boolean::name;
  json sol = json::array();
  for (double v : report.solution) {
    if (boolean) {
      sol.push_back(static_cast<int>(v));
    } else {
      sol.push_back(value_to_json(v));
    }
  }
  json out = json::object();
  out["algorithm"] = report.algorithm;
  out["variant"] = report.variant;
  out["semiring"] = report.semiring;
  out["solution"] = std::move(sol);
  out["add_count"] = report.counts.add;
  out["mul_count"] = report.counts.mul;
  out["closure_count"] = report.counts.closure;
  out["inverse_count"] = report.counts.inverse;
  if (report.residual_ok) out["residual_ok"] = *report.residual_ok;
  if (include_elapsed) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

InstanceFile generate_instance(std::string_view semiring, Algorithm algorithm, std::size_t n,
                               std::mt19937_64& rng) {
  if (n == 0) throw IncompatibleRequest("instance size must be at least 1");
  const bool with_b = algorithm != Algorithm::durbin;
  const std::size_t r_len = with_b ? n - 1 : n;
  InstanceFile inst;
  inst.semiring = std::string(semiring);

  auto fill = [&](auto draw) {
    inst.r0 = draw();
    inst.r.resize(r_len);
    for (auto& v : inst.r) v = draw();
    if (with_b) {
      inst.b.emplace(n);
      for (auto& v : *inst.b) v = draw();
    }
  };

  if (semiring == NonNegReal::name) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    fill([&] { return unit(rng); });
    double weight = inst.r0;
    for (double v : inst.r) weight += 2.0 * v;
    const double target = std::uniform_real_distribution<double>(0.1, 0.85)(rng);
    const double scale = weight > 0.0 ? target / weight : 0.0;
    inst.r0 *= scale;
    for (auto& v : inst.r) v *= scale;
  } else if (semiring == MaxPlus<double>::name || semiring == MaxPlusComplete<double>::name) {
    std::uniform_int_distribution<int> entry(-10, 0);
    fill([&] { return static_cast<double>(entry(rng)); });
  } else if (semiring == MaxMin<double>::name) {
    std::uniform_int_distribution<int> entry(-10, 10);
    fill([&] { return static_cast<double>(entry(rng)); });
  } else if (semiring == Boolean::name) {
    std::uniform_int_distribution<int> bit(0, 1);
    fill([&] { return static_cast<double>(bit(rng)); });
  } else {
    throw UnknownSemiring(std::string(semiring));
  }
  return inst;
}

BenchTable run_bench(const BenchRequest& req) {
  if (!is_registered(req.semiring)) throw UnknownSemiring(req.semiring);
  if (req.sizes.empty()) throw IncompatibleRequest("bench needs at least one size");
  if (req.seeds == 0) throw IncompatibleRequest("bench needs at least one seed");
  for (std::size_t i = 0; i < req.sizes.size(); ++i) {
    if (req.sizes[i] == 0) throw IncompatibleRequest("sizes must be positive");
    if (i > 0 && req.sizes[i] <= req.sizes[i - 1]) throw IncompatibleRequest("sizes must be strictly ascending");
  }

  BenchTable table;
  table.semiring = req.semiring;
  table.algorithm = std::string(to_string(req.algorithm));
  table.variant = std::string(to_string(req.variant));

  const SolveRequest solve{req.algorithm, req.variant, false, true};
  for (std::size_t n : req.sizes) {
    BenchRow row;
    row.n = n;
    row.seeds = req.seeds;
    for (std::size_t k = 0; k < req.seeds; ++k) {
      std::seed_seq seq{static_cast<std::uint32_t>(req.seed), static_cast<std::uint32_t>(req.seed >> 32),
                        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)};
      std::mt19937_64 rng(seq);
      const auto report = run_solve(generate_instance(req.semiring, req.algorithm, n, rng), solve);
      row.mean_add += static_cast<double>(report.counts.add);
      row.mean_mul += static_cast<double>(report.counts.mul);
      row.mean_closure += static_cast<double>(report.counts.closure);
      row.mean_inverse += static_cast<double>(report.counts.inverse);
      row.mean_elapsed_ms += report.elapsed_ms;
    }
    const auto seeds = static_cast<double>(req.seeds);
    row.mean_add /= seeds;
    row.mean_mul /= seeds;
    row.mean_closure /= seeds;
    row.mean_inverse /= seeds;
    row.mean_elapsed_ms /= seeds;
    table.rows.push_back(row);
  }

  std::map<std::size_t, const BenchRow*> by_size;
  for (const auto& row : table.rows) by_size[row.n] = &row;
  for (auto& row : table.rows) {
    if (row.n % 2 != 0) continue;
    auto half = by_size.find(row.n / 2);
    if (half == by_size.end()) continue;
    if (half->second->mean_add > 0) row.add_ratio = row.mean_add / half->second->mean_add;
    if (half->second->mean_mul > 0) row.mul_ratio = row.mean_mul / half->second->mean_mul;
  }
  return table;
}

json to_json(const BenchTable& table, bool include_elapsed) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::object();
    r["n"] = row.n;
    r["seeds"] = row.seeds;
    r["mean_add"] = row.mean_add;
    r["mean_mul"] = row.mean_mul;
    r["mean_closure"] = row.mean_closure;
    r["mean_inverse"] = row.mean_inverse;
    r["add_ratio"] = row.add_ratio ? json(*row.add_ratio) : json(nullptr);
    r["mul_ratio"] = row.mul_ratio ? json(*row.mul_ratio) : json(nullptr);
    if (include_elapsed) r["mean_elapsed_ms"] = row.mean_elapsed_ms;
    rows.push_back(std::move(r));
  }
  json out = json::object();
  out["semiring"] = table.semiring;
  out["algorithm"] = table.algorithm;
  out["variant"] = table.variant;
  out["rows"] = std::move(rows);
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SEMIPATH_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

}  // namespace semipath::harness
