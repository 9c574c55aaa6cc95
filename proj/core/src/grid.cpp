#include "strichartz/spectral/grid.hpp"

#include <cmath>
#include <string>

#include "strichartz/errors.hpp"
#include "strichartz/reduction.hpp"

namespace strichartz {

TorusGrid::TorusGrid(int d, int gx, int gt) : d_(d), gx_(gx), gt_(gt), spatial_(1) {
  require(d >= 1, "grid dimension must be >= 1");
  require(gx >= 1 && gt >= 1, "grid sizes must be positive");
  for (int i = 0; i < d; ++i) {
    require(spatial_ <= (std::size_t{1} << 34) / static_cast<std::size_t>(gx), "grid too large");
    spatial_ *= static_cast<std::size_t>(gx);
  }
  require(spatial_ <= (std::size_t{1} << 34) / static_cast<std::size_t>(gt), "grid too large");
}

TorusGrid TorusGrid::for_products(int d, int N) {
  require(d >= 1 && N >= 1, "for_products needs d >= 1 and N >= 1");
  return TorusGrid(d, 4 * N + 2, 4 * d * N * N + 2);
}

TorusGrid TorusGrid::space_for_products(int d, int N) {
  require(d >= 1 && N >= 1, "space_for_products needs d >= 1 and N >= 1");
  return TorusGrid(d, 4 * N + 2, 1);
}

double TorusGrid::t_centered(int k) const {
  int c = k % gt_;
  if (c < 0) c += gt_;
  if (2 * c >= gt_) c -= gt_;
  return static_cast<double>(c) / gt_;
}

void TorusGrid::spatial_index(std::size_t s, std::span<int> out) const {
  for (int axis = d_ - 1; axis >= 0; --axis) {
    out[axis] = static_cast<int>(s % static_cast<std::size_t>(gx_));
    s /= static_cast<std::size_t>(gx_);
  }
}

bool TorusGrid::exact_for(int x_band, long long t_band) const {
  return 2 * static_cast<long long>(x_band) < gx_ && 2 * t_band < gt_;
}

GridFunction::GridFunction(TorusGrid g) : grid(g), values(g.size(), Complex{}) {}

GridFunction::GridFunction(TorusGrid g, ComplexArray v) : grid(g), values(std::move(v)) {
  require(values.size() == grid.size(),
          "grid function has " + std::to_string(values.size()) + " samples, grid needs " +
              std::to_string(grid.size()));
  for (const auto& z : values) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "grid function contains NaN or Inf");
  }
}

GridFunction GridFunction::constant(const TorusGrid& g, Complex c) {
  return GridFunction(g, ComplexArray(g.size(), c));
}

Complex quadrature_integral(const GridFunction& F) {
  for (const auto& z : F.values) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "quadrature of non-finite samples");
  }
  return pairwise_reduce(0, F.size(), [&](std::size_t i) { return F.values[i]; }) * F.grid.weight();
}

GridFunction abs_squared(const GridFunction& F) {
  GridFunction out(F.grid);
  for (std::size_t i = 0; i < F.size(); ++i) out.values[i] = std::norm(F.values[i]);
  return out;
}

GridFunction multiply(const GridFunction& F, const GridFunction& G) {
  require(F.grid == G.grid, "pointwise product on different grids");
  GridFunction out(F.grid);
  for (std::size_t i = 0; i < F.size(); ++i) out.values[i] = F.values[i] * G.values[i];
  return out;
}

}  // namespace strichartz
