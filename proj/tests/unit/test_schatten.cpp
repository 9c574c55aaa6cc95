#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/schatten.hpp"

using namespace strichartz;

TEST(SchattenNorm, SmallExamples) {
  const std::vector<double> sv{3.0, 4.0};
  EXPECT_NEAR(schatten_norm(sv, 2.0), 5.0, 1e-15);
  EXPECT_NEAR(schatten_norm(sv, 1.0), 7.0, 1e-15);
  EXPECT_EQ(schatten_norm(sv, kInf), 4.0);
  EXPECT_THROW(schatten_norm(std::vector<double>{1.0, -0.5}, 2.0), InvalidArgument);
  EXPECT_THROW(schatten_norm(sv, 0.5), InvalidArgument);
}

TEST(SchattenNorm, MonotoneInExponent) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> sv(12);
    for (double& s : sv) s = u(rng);
    double prev = kInf;
    for (double a : {1.0, 1.5, 2.0, 3.0, 8.0, kInf}) {
      const double v = schatten_norm(sv, a);
      EXPECT_LE(v, prev * (1 + 1e-14));
      prev = v;
    }
    double sq = 0.0;
    for (double s : sv) sq += s * s;
    EXPECT_NEAR(std::pow(schatten_norm(sv, 2.0), 2), sq, 1e-12 * sq);
  }
}

TEST(Sandwich, UnitWeightsGiveUnitSingularValues) {
  for (int d : {1, 2}) {
    const auto op = ExtensionOperator::on_product_grid(d, 2);
    const auto one = GridFunction::constant(op.grid(), 1.0);
    const auto sv = sandwich_singular_values(one, one, op);
    ASSERT_EQ(sv.size(), op.lattice().size());
    for (double s : sv) EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(Sandwich, AgreesWithDenseSvd) {
  for (int N : {1, 2}) {
    const auto op = ExtensionOperator::on_product_grid(1, N);
    for (unsigned seed = 0; seed < 3; ++seed) {
      const auto W1 = random_band_limited(op.grid(), 2 * seed);
      const auto W2 = random_band_limited(op.grid(), 2 * seed + 1);
      const auto sv = sandwich_singular_values(W1, W2, op);
      const auto ref = oracle::dense_singular_values(oracle::dense_sandwich(W1, W2, N));
      for (std::size_t i = 0; i < sv.size(); ++i) EXPECT_NEAR(sv[i] / ref[i], 1.0, 1e-8);
      // Everything beyond the rank vanishes.
      EXPECT_LT(ref[sv.size()], 1e-10 * ref[0]);
    }
  }
}

TEST(Sandwich, FrobeniusDoubleIntegral) {
  const int N = 2;
  const auto op = ExtensionOperator::on_product_grid(1, N);
  const auto W1 = random_band_limited(op.grid(), 41);
  const auto W2 = random_band_limited(op.grid(), 42);
  const auto sv = sandwich_singular_values(W1, W2, op);
  double hs = 0.0;
  for (double s : sv) hs += s * s;
  const auto A = oracle::dense_sandwich(W1, W2, N);
  EXPECT_NEAR(hs / A.squaredNorm(), 1.0, 1e-8);
}

TEST(Sandwich, AdjointSymmetry) {
  const auto op = ExtensionOperator::on_product_grid(2, 1);
  const auto W1 = random_band_limited(op.grid(), 5);
  const auto W2 = random_band_limited(op.grid(), 6);
  GridFunction c1(op.grid()), c2(op.grid());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    c1.values[i] = std::conj(W2.values[i]);
    c2.values[i] = std::conj(W1.values[i]);
  }
  const auto a = sandwich_singular_values(W1, W2, op);
  const auto b = sandwich_singular_values(c1, c2, op);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10 * (1 + a[0]));
}

TEST(Sandwich, WeightedGramIsHermitianPsd) {
  const auto op = ExtensionOperator::on_product_grid(1, 3);
  const auto M = weighted_gram(abs_squared(random_band_limited(op.grid(), 9)), op);
  EXPECT_LT((M - M.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
  const auto S = psd_sqrt(M);
  EXPECT_LT((S * S - M).cwiseAbs().maxCoeff(), 1e-12);
}
