#include <benchmark/benchmark.h>

#include <random>

#include "cuttree/flow.hpp"
#include "cuttree/oracle.hpp"
#include "support/helpers.hpp"

using namespace cuttree;

namespace {

Network sized(int n) {
  std::mt19937 rng(n);
  return testing_support::random_network(rng, n, 4, 0.3);
}

void BM_AllPairsParallel(benchmark::State& state) {
  const auto net = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_connectivity(net.graph()));
}

void BM_AllPairsSerial(benchmark::State& state) {
  const auto net = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_connectivity_serial(net.graph()));
}

void BM_CapacityTableParallel(benchmark::State& state) {
  const auto net = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::capacity_table(net.graph()));
}

void BM_CapacityTableSerial(benchmark::State& state) {
  const auto net = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::capacity_table_serial(net.graph()));
}

}  // namespace

BENCHMARK(BM_AllPairsParallel)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllPairsSerial)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CapacityTableParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CapacityTableSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
