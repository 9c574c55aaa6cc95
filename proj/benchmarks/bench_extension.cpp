#include <benchmark/benchmark.h>

#include <random>

#include "strichartz/extension/extension.hpp"

using namespace strichartz;

namespace {

CoefficientVector random_coefficients(const FrequencyLattice& L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CoefficientVector a(L);
  for (auto& z : a.a) z = {g(rng), g(rng)};
  return a;
}

}  // namespace

static void BM_Extend(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto op = ExtensionOperator::on_product_grid(d, N);
  const auto a = random_coefficients(op.lattice(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(op.extend(a));
  state.counters["grid"] = static_cast<double>(op.grid().size());
}
BENCHMARK(BM_Extend)->Args({1, 8})->Args({1, 32})->Args({2, 4})->Args({2, 8});

static void BM_Restriction(benchmark::State& state) {
  const auto op = ExtensionOperator::on_product_grid(1, static_cast<int>(state.range(0)));
  const auto F = op.extend(random_coefficients(op.lattice(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(op.restriction(F));
}
BENCHMARK(BM_Restriction)->Arg(8)->Arg(32);

static void BM_DispersiveRatio(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const TorusGrid g(1, 8 * N, 16 * N * N);
  for (auto _ : state) benchmark::DoNotOptimize(dispersive_ratio(1, N, g));
}
BENCHMARK(BM_DispersiveRatio)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
