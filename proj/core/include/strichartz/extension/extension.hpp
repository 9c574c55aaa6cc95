#pragma once

#include "strichartz/spectral/grid.hpp"
#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

// The pair E_N a(x,t) = sum_n a_n e^{2 pi i (x.n + t|n|^2)} and its adjoint,
// sampled on a space-time grid that separates every character (n, |n|^2).
class ExtensionOperator {
 public:
  ExtensionOperator(FrequencyLattice lattice, TorusGrid grid);

  // Lattice plus the exact-products grid.
  static ExtensionOperator on_product_grid(int d, int N);

  const FrequencyLattice& lattice() const { return lattice_; }
  const TorusGrid& grid() const { return grid_; }

  GridFunction extend(const CoefficientVector& a) const;
  // Adjoint: quadrature of F against conjugate characters.
  CoefficientVector restriction(const GridFunction& F) const;
  // K_N = E_N applied to the all-ones vector.
  GridFunction kernel() const;

  // Flat grid index of the character of lattice mode i at the origin sample
  // of the transform (used for reading Fourier data off the grid).
  std::size_t character_index(std::size_t i) const { return char_index_[i]; }

 private:
  FrequencyLattice lattice_;
  TorusGrid grid_;
  std::vector<std::size_t> char_index_;
};

// a_n -> a_n e^{2 pi i t |n|^2}.
CoefficientVector free_propagate(const CoefficientVector& a, double t);

// sup over grid points with 0 < |t| <= 1/N of |t|^{d/2} |K_N(x,t)|.
double dispersive_ratio(int d, int N, const TorusGrid& grid);

}  // namespace strichartz
