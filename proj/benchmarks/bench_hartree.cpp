#include <benchmark/benchmark.h>

#include "strichartz/hartree/hartree.hpp"

using namespace strichartz;

static void BM_StrangStep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const HartreeModel model(d, N, 0.5);
  HartreeState s{0.0, random_state(d, N, 3, 5)};
  for (auto _ : state) {
    s = model.step_strang(s, 1e-3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_StrangStep)->Args({1, 2})->Args({1, 8})->Args({2, 2});

static void BM_Energy(benchmark::State& state) {
  const HartreeModel model(1, static_cast<int>(state.range(0)), 0.5);
  const auto gamma = random_state(1, static_cast<int>(state.range(0)), 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(model.energy(gamma));
}
BENCHMARK(BM_Energy)->Arg(2)->Arg(8);

BENCHMARK_MAIN();
