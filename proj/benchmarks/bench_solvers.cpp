#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "semipath/semipath.hpp"

namespace {

using namespace semipath;
using I64 = std::int64_t;

std::vector<I64> weights(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<I64> dist(-10, 0);
  std::vector<I64> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::vector<double> nonneg_weights(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) total += 2.0 * (x = dist(rng));
  for (auto& x : v) x *= 0.8 / total;
  return v;
}

// Operation counts for one solve, reported once per benchmark.
template <class Solve>
void report_counts(benchmark::State& state, Solve solve) {
  OpCounts counts;
  solve(Counting<MaxPlus<I64>>(MaxPlus<I64>{}, counts));
  state.counters["mul"] = static_cast<double>(counts.mul);
  state.counters["add"] = static_cast<double>(counts.add);
  state.counters["closure"] = static_cast<double>(counts.closure);
  state.SetComplexityN(state.range(0));
}

void BM_DurbinMaxPlus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const YuleWalkerProblem<I64> p{-1, weights(n, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(durbin(MaxPlus<I64>{}, p));
  report_counts(state, [&](const auto& s) { (void)durbin(s, p); });
}

void BM_LevinsonMaxPlus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ToeplitzBellmanProblem<I64> p{-1, weights(n - 1, 2), weights(n, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(levinson(MaxPlus<I64>{}, p));
  report_counts(state, [&](const auto& s) { (void)levinson(s, p); });
}

void BM_LevinsonRecursiveMaxPlus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ToeplitzBellmanProblem<I64> p{-1, weights(n - 1, 2), weights(n, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(levinson(MaxPlus<I64>{}, p, BetaVariant::recursive));
  report_counts(state, [&](const auto& s) { (void)levinson(s, p, BetaVariant::recursive); });
}

void BM_BorderingMaxPlus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = toeplitz_expand(SymToeplitz<I64>{-1, weights(n - 1, 4)});
  for (auto _ : state) benchmark::DoNotOptimize(bordering_closure(MaxPlus<I64>{}, t));
  report_counts(state, [&](const auto& s) { (void)bordering_closure(s, t); });
}

void BM_DurbinNonNeg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = nonneg_weights(n + 1, 5);
  const YuleWalkerProblem<double> p{r[0], std::vector<double>(r.begin() + 1, r.end())};
  for (auto _ : state) benchmark::DoNotOptimize(durbin(NonNegReal{}, p));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_DurbinMaxPlus)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_LevinsonMaxPlus)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_LevinsonRecursiveMaxPlus)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_BorderingMaxPlus)->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_DurbinNonNeg)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
