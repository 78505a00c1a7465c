#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "lcpa/cavity.hpp"
#include "lcpa/cpa.hpp"

using namespace lcpa;

namespace {

std::vector<double> log_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::pow(10.0, -6.0 + 13.0 * static_cast<double>(i) / (n - 1));
  return g;
}

SystemParams bench_params() {
  SystemParams p = default_params();
  p.delta_p = 6.0;
  p.delta_ac = -4.5;
  return p;
}

template <Execution E>
void BM_TransferSamples(benchmark::State& state) {
  const auto grid = log_grid(static_cast<std::size_t>(state.range(0)));
  const auto p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(transfer_samples(grid, 0.0, p, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Execution E>
void BM_CpaExistenceScan(benchmark::State& state) {
  std::vector<double> dp;
  for (int i = 0; i < state.range(0); ++i) dp.push_back(-15.0 + 30.0 * i / (state.range(0) - 1));
  const auto p = default_params();
  for (auto _ : state) benchmark::DoNotOptimize(cpa_existence_scan(dp, p, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_TransferSamples<Execution::serial>)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransferSamples<Execution::parallel>)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CpaExistenceScan<Execution::serial>)->Arg(601)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CpaExistenceScan<Execution::parallel>)->Arg(601)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
