#include "strichartz/extension/extension.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fft.hpp"
#include "strichartz/errors.hpp"

namespace strichartz {

ExtensionOperator::ExtensionOperator(FrequencyLattice lattice, TorusGrid grid)
    : lattice_(std::move(lattice)), grid_(grid) {
  const int d = lattice_.dim();
  const long long N = lattice_.cutoff();
  require(grid_.dim() == d, "grid and lattice dimensions differ");
  require(grid_.gx() > 2 * N, "extension grid needs gx > 2N, got gx=" + std::to_string(grid_.gx()));
  require(grid_.gt() > 2 * d * N * N,
          "extension grid needs gt > 2dN^2 = " + std::to_string(2 * d * N * N) + ", got gt=" + std::to_string(grid_.gt()));
  char_index_.resize(lattice_.size());
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    std::size_t s = 0;
    for (int c : lattice_.mode(i)) s = s * grid_.gx() + detail::wrap(c, grid_.gx());
    const std::size_t k = detail::wrap(lattice_.norm2(i), grid_.gt());
    char_index_[i] = k * grid_.spatial_size() + s;
  }
}

ExtensionOperator ExtensionOperator::on_product_grid(int d, int N) {
  return ExtensionOperator(build_lattice(d, N), TorusGrid::for_products(d, N));
}

GridFunction ExtensionOperator::extend(const CoefficientVector& a) const {
  require(a.lattice == lattice_, "coefficient lattice does not match the extension operator");
  ComplexArray c(grid_.size(), Complex{});
  for (std::size_t i = 0; i < a.size(); ++i) c[char_index_[i]] = a.a[i];
  detail::grid_dft(c, grid_, +1);
  return GridFunction(grid_, std::move(c));
}

CoefficientVector ExtensionOperator::restriction(const GridFunction& F) const {
  require(F.grid == grid_, "grid function does not live on the extension grid");
  ComplexArray c = F.values;
  detail::grid_dft(c, grid_, -1);
  CoefficientVector out(lattice_);
  const double w = grid_.weight();
  for (std::size_t i = 0; i < out.size(); ++i) out.a[i] = c[char_index_[i]] * w;
  return out;
}

GridFunction ExtensionOperator::kernel() const {
  return extend(CoefficientVector(lattice_, ComplexArray(lattice_.size(), Complex{1.0, 0.0})));
}

CoefficientVector free_propagate(const CoefficientVector& a, double t) {
  require(std::isfinite(t), "propagation time must be finite");
  CoefficientVector out(a.lattice);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double phase = t * static_cast<double>(a.lattice.norm2(i));
    phase -= std::floor(phase);
    out.a[i] = a.a[i] * std::polar(1.0, kTwoPi * phase);
  }
  return out;
}

double dispersive_ratio(int d, int N, const TorusGrid& grid) {
  require(d >= 1 && N >= 1, "dispersive_ratio needs d >= 1 and N >= 1");
  require(grid.dim() == d && !grid.space_only(), "dispersive_ratio needs a space-time grid of matching dimension");
  const long long gx = grid.gx(), gt = grid.gt();
  std::vector<int> ks;
  for (int k = 0; k < grid.gt(); ++k) {
    const long long c = 2 * k >= gt ? k - gt : k;  // centered time index
    if (c != 0 && std::llabs(c) * N <= gt) ks.push_back(k);
  }
  require(ks.size() >= 32, "dispersive_ratio needs at least 32 samples with 0 < |t| <= 1/N, got " +
                               std::to_string(ks.size()));

  // K_N factorizes over axes, so sup_x |K_N| = (sup_x |one-axis sum|)^d.
  double best = 0.0;
  for (int k : ks) {
    double axis_max = 0.0;
    for (long long i = 0; i < gx; ++i) {
      Complex s{};
      for (long long n = -N; n <= N; ++n) s += unit_root(n * i * gt + n * n * k * gx, gx * gt);
      axis_max = std::max(axis_max, std::abs(s));
    }
    const double t = std::abs(grid.t_centered(k));
    best = std::max(best, std::pow(t, 0.5 * d) * std::pow(axis_max, d));
  }
  return best;
}

}  // namespace strichartz
