#include <benchmark/benchmark.h>

#include "strichartz/extension/extension.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/schatten.hpp"

using namespace strichartz;

// Rank-(2N+1)^d route for |W1 E E* W2|.
static void BM_SandwichSingularValues(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto op = ExtensionOperator::on_product_grid(d, N);
  const auto W1 = random_band_limited(op.grid(), 1);
  const auto W2 = random_band_limited(op.grid(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sandwich_singular_values(W1, W2, op));
}
BENCHMARK(BM_SandwichSingularValues)->Args({1, 4})->Args({1, 16})->Args({2, 3});

BENCHMARK_MAIN();
