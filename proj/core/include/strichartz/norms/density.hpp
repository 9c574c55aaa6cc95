#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "strichartz/spectral/grid.hpp"
#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

// gamma = sum_j lambda_j |f_j><f_j| with real weights.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<double> weights, std::vector<CoefficientVector> orbitals, bool orthonormal);
  // The zero operator on a lattice.
  explicit DensityMatrix(FrequencyLattice lattice);

  // Eigendecomposition of a Hermitian matrix on the lattice, dropping
  // eigenvalues below rel_cutoff * max|eig|.
  static DensityMatrix from_matrix(const FrequencyLattice& lattice, const Eigen::MatrixXcd& G,
                                   double rel_cutoff = 1e-12);

  const FrequencyLattice& lattice() const { return lattice_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<CoefficientVector>& orbitals() const { return orbitals_; }
  bool orthonormal() const { return orthonormal_; }
  std::size_t rank() const { return weights_.size(); }

  Eigen::MatrixXcd gram() const;
  // Matrix of gamma in the lattice basis.
  Eigen::MatrixXcd matrix() const;
  double trace() const;

 private:
  FrequencyLattice lattice_;
  std::vector<double> weights_;
  std::vector<CoefficientVector> orbitals_;
  bool orthonormal_;
};

// Orbital coefficients as columns.
Eigen::MatrixXcd orbital_matrix(const std::vector<CoefficientVector>& orbitals);

// max_{jk} |Gram_jk - delta_jk|.
double gram_deviation(const std::vector<CoefficientVector>& orbitals);

// rho(x) = sum_j lambda_j |f_j(x)|^2, orbitals first propagated to time t.
GridFunction density(const DensityMatrix& gamma, const TorusGrid& space, std::optional<double> t = std::nullopt);

struct TracePairing {
  Complex left;
  Complex right;
  double difference = 0.0;
};

// Both sides of the density/trace identity for <D>^{-s} gamma0 <D>^{-s}
// propagated by the free flow and paired with V on a space-time grid.
TracePairing trace_pairing(const DensityMatrix& gamma0, const GridFunction& V, double s);

// |<D>^s gamma <D>^s|_{C^alpha}.
double sobolev_schatten_norm(const DensityMatrix& gamma, double s, double alpha);

}  // namespace strichartz
