#include <gtest/gtest.h>

#include <cmath>

#include "strichartz/errors.hpp"
#include "strichartz/extension/extension.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/lab/lhs.hpp"
#include "strichartz/norms/mixed_norm.hpp"

using namespace strichartz;

TEST(MixedNorm, ConstantFunction) {
  const TorusGrid g(2, 6, 9);
  const auto F = GridFunction::constant(g, Complex(3.0, -4.0));
  for (double p : {1.0, 2.0, 3.5, kInf}) {
    for (double q : {1.0, 4.0, kInf}) EXPECT_NEAR(mixed_norm(F, {p, q, {}}), 5.0, 1e-13);
  }
}

TEST(MixedNorm, EqualExponentsMatchSingleSum) {
  const TorusGrid g(1, 12, 20);
  const auto F = random_band_limited(g, 5);
  for (double p : {1.0, 2.0, 3.0, 7.5}) {
    double s = 0.0;
    for (const auto& z : F.values) s += std::pow(std::abs(z), p);
    const double direct = std::pow(s / static_cast<double>(g.size()), 1.0 / p);
    EXPECT_NEAR(mixed_norm(F, {p, p, {}}) / direct, 1.0, 1e-12);
  }
  double m = 0.0;
  for (const auto& z : F.values) m = std::max(m, std::abs(z));
  EXPECT_EQ(mixed_norm(F, {kInf, kInf, {}}), m);
}

TEST(MixedNorm, RejectsBadExponentsAndEmptyWindow) {
  const auto F = GridFunction::constant(TorusGrid(1, 4, 4), 1.0);
  EXPECT_THROW(mixed_norm(F, {0.5, 2.0, {}}), InvalidArgument);
  EXPECT_THROW(mixed_norm(F, {2.0, 0.99, {}}), InvalidArgument);
  EXPECT_THROW(mixed_norm(F, {2.0, 2.0, {0.0, 0.0}}), InvalidArgument);
  EXPECT_THROW(mixed_norm(F, {2.0, 2.0, {0.1, 0.1}}), InvalidArgument);  // between samples
}

TEST(MixedNorm, HoelderInequality) {
  const TorusGrid g(1, 16, 24);
  const auto F = random_band_limited(g, 8);
  const auto G = random_band_limited(g, 9);
  const auto FG = multiply(F, G);
  const double cases[][6] = {{2, 2, 4, 4, 4, 4}, {1, 2, 2, 4, 2, 4}, {4, 1, 8, 2, 8, 2}, {2, 4, kInf, kInf, 2, 4}};
  for (const auto& c : cases) {
    EXPECT_LE(mixed_norm(FG, {c[0], c[1], {}}),
              mixed_norm(F, {c[2], c[3], {}}) * mixed_norm(G, {c[4], c[5], {}}) * (1 + 1e-12));
  }
}

TEST(MixedNorm, ExtremalInstanceIsFlat) {
  for (int d : {1, 2}) {
    const int N = 3;
    const auto inst = extremal_instance(d, N);
    const auto op = ExtensionOperator::on_product_grid(d, N);
    const double target = std::pow(2.0 * N + 1, d);
    for (double p : {1.0, 4.0, kInf}) {
      for (double q : {2.0, kInf}) {
        EXPECT_NEAR(lhs_functional(inst.weights, inst.family, {p, q, {}}, op) / target, 1.0, 1e-10);
      }
    }
  }
}

TEST(MixedNorm, WindowsCoverTheCircle) {
  // With p < inf the p-th power over T is the sum over N aligned windows.
  const int N = 4;
  const auto op = ExtensionOperator(build_lattice(1, N), TorusGrid(1, 4 * N + 2, 4 * N * N * 3));
  const auto inst = random_instance(op.lattice(), 3, 21);
  const auto rho = weighted_density(inst.weights, inst.family, op);
  for (double p : {1.0, 2.0, 3.0}) {
    const double whole = std::pow(mixed_norm(rho, {p, 2.0, {}}), p);
    double parts = 0.0;
    for (int i = 0; i < N; ++i) parts += std::pow(mixed_norm(rho, {p, 2.0, {static_cast<double>(i) / N, 1.0 / N}}), p);
    EXPECT_NEAR(parts / whole, 1.0, 1e-10);
  }
}

TEST(MixedNorm, GalileanShiftOfWindow) {
  // b_j(n) = a_j(n) e^{2 pi i c |n|^2} moves the window [c, c + l) to [0, l).
  const int N = 3;
  const auto op = ExtensionOperator(build_lattice(1, N), TorusGrid(1, 14, 60));
  const auto inst = random_instance(op.lattice(), 2, 4);
  const double c = 13.0 / 60.0, len = 0.25;
  std::vector<CoefficientVector> shifted;
  for (const auto& a : inst.family.vectors()) shifted.push_back(free_propagate(a, c));
  const OrthonormalFamily moved(op.lattice(), shifted);
  for (double p : {2.0, 4.0, kInf}) {
    const double orig = lhs_functional(inst.weights, inst.family, {p, 2.0, {c, len}}, op);
    const double back = lhs_functional(inst.weights, moved, {p, 2.0, {0.0, len}}, op);
    EXPECT_NEAR(orig / back, 1.0, 1e-10);
  }
}

TEST(MixedNorm, RefinedGridLeavesExactNormsUnchanged) {
  const int N = 3;
  const auto inst = random_instance(build_lattice(1, N), 3, 6);
  const auto coarse = ExtensionOperator::on_product_grid(1, N);
  const ExtensionOperator fine(build_lattice(1, N), TorusGrid(1, 2 * coarse.grid().gx(), 3 * coarse.grid().gt()));
  for (double p : {1.0, 2.0}) {
    const double a = lhs_functional(inst.weights, inst.family, {p, 1.0, {}}, coarse);
    const double b = lhs_functional(inst.weights, inst.family, {p, 1.0, {}}, fine);
    // Sum_j lambda_j |E a_j|^2 >= 0, so L^1_x is an exactly integrated mean.
    if (p == 1.0) EXPECT_NEAR(a / b, 1.0, 1e-10);
  }
  const double a2 = lhs_functional(inst.weights, inst.family, {2.0, 2.0, {}}, coarse);
  const double b2 = lhs_functional(inst.weights, inst.family, {2.0, 2.0, {}}, fine);
  EXPECT_NEAR(a2 / b2, 1.0, 1e-10);
}
