#include <benchmark/benchmark.h>

#include "dickson/baseline.hpp"
#include "dickson/engine.hpp"
#include "dickson/graycodes.hpp"

namespace {

using namespace dickson;

void BM_EngineGenerator(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const int e = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    FactorOptions opts;
    opts.search = SeedSearch::random;
    opts.rng_seed = seed++;
    opts.verify = false;
    benchmark::DoNotOptimize(factor(p, e, opts));
  }
}
BENCHMARK(BM_EngineGenerator)
    ->ArgsProduct({{101, 1009, 5003}, {1}})
    ->ArgsProduct({{1009}, {2, 10, 50, 100}})
    ->Unit(benchmark::kMicrosecond);

void BM_EngineTargetedOneSlot(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  FactorOptions opts;
  opts.mode = FactorMode::targeted;
  opts.indices = {1};
  opts.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(factor(p, 20, opts));
}
BENCHMARK(BM_EngineTargetedOneSlot)->Arg(101)->Arg(1009)->Unit(benchmark::kMicrosecond);

void BM_Baseline(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const int e = static_cast<int>(state.range(1));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(baseline_factor(p, e, seed++));
}
BENCHMARK(BM_Baseline)
    ->ArgsProduct({{101, 1009}, {1}})
    ->Args({101, 10})
    ->Unit(benchmark::kMillisecond);

void BM_ExhaustiveRank2(benchmark::State& state) {
  const Factorization f = factor(13, 2);
  const CyclicCodeSpec code = build_code(f, std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_exhaustive(code, 1));
}
BENCHMARK(BM_ExhaustiveRank2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
