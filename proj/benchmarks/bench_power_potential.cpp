#include <benchmark/benchmark.h>

#include <vector>

#include "strichartz/norms/power_potential.hpp"

using namespace strichartz;

static void BM_PowerPotentialCoefficient(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<int> n(static_cast<std::size_t>(d), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(power_potential_coefficient(0.5, n));
}
BENCHMARK(BM_PowerPotentialCoefficient)->Args({1, 1})->Args({1, 64})->Args({2, 1})->Args({2, 16});

static void BM_PeriodizedBand(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(periodized_power_potential(0.5, build_lattice(1, static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_PeriodizedBand)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
