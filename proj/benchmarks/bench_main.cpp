#include <benchmark/benchmark.h>

#include <random>

#include "dupdist/approx_engine.hpp"
#include "dupdist/exact_engine.hpp"
#include "dupdist/seqcore.hpp"

using namespace dupdist;

namespace {

BinarySeq random_seq(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back((rng() & 1) != 0);
  return std::move(b).build();
}

void BM_BuildTable(benchmark::State& state) {
  SearchConfig cfg;
  cfg.max_n = static_cast<int>(state.range(0));
  cfg.worker_count = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto t = build_table(cfg);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{2} << cfg.max_n));
}
BENCHMARK(BM_BuildTable)
    ->ArgsProduct({{16, 18, 20}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_FnmGrid(benchmark::State& state) {
  SearchConfig cfg;
  cfg.max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_fnm_grid(cfg));
}
BENCHMARK(BM_FnmGrid)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FindRepeats(benchmark::State& state) {
  const auto s = random_seq(static_cast<std::size_t>(state.range(0)), 1);
  const double beta = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(find_repeats(s, beta));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindRepeats)
    ->ArgsProduct({{64, 256, 1024}, {0, 60}})
    ->Complexity();

void BM_PlotkinFinder(benchmark::State& state) {
  const auto s = random_seq(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(plotkin_repeat_finder(s, 0.6, 11));
}
BENCHMARK(BM_PlotkinFinder)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_GreedyLogDedup(benchmark::State& state) {
  const auto s = random_seq(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t steps = 0;
  for (auto _ : state) {
    const auto p = greedy_log_dedup(s, 0.6);
    steps = p.length();
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_GreedyLogDedup)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
