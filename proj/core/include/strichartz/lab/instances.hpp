#pragma once

#include <cstdint>
#include <vector>

#include "strichartz/spectral/grid.hpp"
#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

// Orthonormal vectors on a common lattice (checked to 1e-10).
class OrthonormalFamily {
 public:
  OrthonormalFamily(FrequencyLattice lattice, std::vector<CoefficientVector> vectors);

  const FrequencyLattice& lattice() const { return lattice_; }
  const std::vector<CoefficientVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  FrequencyLattice lattice_;
  std::vector<CoefficientVector> vectors_;
};

struct WeightedFamily {
  std::vector<double> weights;
  OrthonormalFamily family;
};

// lambda_j = 1 and a_j = indicator of j, for every j in the lattice.
WeightedFamily extremal_instance(int d, int N);

// Random orthonormal family of the given rank (QR of a complex Gaussian
// matrix) with weights uniform in [0.1, 1].
WeightedFamily random_instance(const FrequencyLattice& lattice, std::size_t rank, std::uint64_t seed);

// |lambda|_{l^alpha}.
double lp_norm(const std::vector<double>& weights, double alpha);

// Complex Gaussian Fourier coefficients on the band |k_x| <= gx/4,
// |k_t| <= gt/4, synthesized on the grid. Unit RMS on average.
GridFunction random_band_limited(const TorusGrid& grid, std::uint64_t seed);
// Same, but real valued.
GridFunction random_real_band_limited(const TorusGrid& grid, std::uint64_t seed);

}  // namespace strichartz
