#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "fft.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/lab/lhs.hpp"
#include "strichartz/norms/density.hpp"

namespace strichartz {

OrthonormalFamily::OrthonormalFamily(FrequencyLattice lattice, std::vector<CoefficientVector> vectors)
    : lattice_(std::move(lattice)), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) require(v.lattice == lattice_, "family vector on a different lattice");
  require(gram_deviation(vectors_) <= 1e-10, "family is not orthonormal to 1e-10");
}

WeightedFamily extremal_instance(int d, int N) {
  const FrequencyLattice L = build_lattice(d, N);
  std::vector<CoefficientVector> v;
  v.reserve(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) v.push_back(CoefficientVector::basis(L, L.mode(i)));
  return {std::vector<double>(L.size(), 1.0), OrthonormalFamily(L, std::move(v))};
}

WeightedFamily random_instance(const FrequencyLattice& lattice, std::size_t rank, std::uint64_t seed) {
  const auto L = static_cast<Eigen::Index>(lattice.size());
  require(rank >= 1 && rank <= lattice.size(), "rank must lie in [1, lattice size]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  Eigen::MatrixXcd G(L, static_cast<Eigen::Index>(rank));
  for (Eigen::Index c = 0; c < G.cols(); ++c) {
    for (Eigen::Index r = 0; r < L; ++r) {
      const double re = gauss(rng);
      G(r, c) = Complex(re, gauss(rng));
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  const Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(L, G.cols());
  std::vector<CoefficientVector> v;
  std::vector<double> w;
  for (Eigen::Index c = 0; c < Q.cols(); ++c) {
    ComplexArray a(static_cast<std::size_t>(L));
    for (Eigen::Index r = 0; r < L; ++r) a[r] = Q(r, c);
    v.emplace_back(lattice, std::move(a));
    w.push_back(unif(rng));
  }
  return {std::move(w), OrthonormalFamily(lattice, std::move(v))};
}

double lp_norm(const std::vector<double>& weights, double alpha) {
  require(alpha >= 1.0, "l^alpha needs alpha >= 1");
  double top = 0.0;
  for (double w : weights) top = std::max(top, std::abs(w));
  if (std::isinf(alpha) || top == 0.0) return top;
  double s = 0.0;
  for (double w : weights) s += std::pow(std::abs(w) / top, alpha);
  return top * std::pow(s, 1.0 / alpha);
}

namespace {

ComplexArray random_band_values(const TorusGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const int bx = grid.gx() / 4;
  const int bt = grid.space_only() ? 0 : grid.gt() / 4;
  const int d = grid.dim();
  const std::size_t side = 2 * static_cast<std::size_t>(bx) + 1;
  std::size_t modes_x = 1;
  for (int a = 0; a < d; ++a) modes_x *= side;
  const std::size_t modes = modes_x * (2 * static_cast<std::size_t>(bt) + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
  ComplexArray c(grid.size(), Complex{});
  for (int kt = -bt; kt <= bt; ++kt) {
    for (std::size_t m = 0; m < modes_x; ++m) {
      std::size_t rem = m, s = 0, stride = 1;
      for (int a = d - 1; a >= 0; --a) {
        const int kx = static_cast<int>(rem % side) - bx;
        rem /= side;
        s += stride * detail::wrap(kx, grid.gx());
        stride *= static_cast<std::size_t>(grid.gx());
      }
      const double re = gauss(rng);
      const double im = gauss(rng);
      c[detail::wrap(kt, grid.gt()) * grid.spatial_size() + s] = Complex(re, im) * scale;
    }
  }
  detail::grid_dft(c, grid, +1);
  return c;
}

}  // namespace

GridFunction random_band_limited(const TorusGrid& grid, std::uint64_t seed) {
  return GridFunction(grid, random_band_values(grid, seed));
}

GridFunction random_real_band_limited(const TorusGrid& grid, std::uint64_t seed) {
  ComplexArray c = random_band_values(grid, seed);
  for (auto& z : c) z = std::sqrt(2.0) * z.real();
  return GridFunction(grid, std::move(c));
}

GridFunction weighted_density(const std::vector<double>& weights, const OrthonormalFamily& family,
                              const ExtensionOperator& op) {
  require(weights.size() == family.size(), "one weight per family vector required");
  require(family.lattice() == op.lattice(), "family and operator lattices differ");
  GridFunction rho(op.grid());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const GridFunction u = op.extend(family.vectors()[j]);
    for (std::size_t i = 0; i < rho.size(); ++i) rho.values[i] += weights[j] * std::norm(u.values[i]);
  }
  return rho;
}

double lhs_functional(const std::vector<double>& weights, const OrthonormalFamily& family, const MixedNormSpec& spec,
                      const ExtensionOperator& op) {
  return mixed_norm(weighted_density(weights, family, op), spec);
}

}  // namespace strichartz
