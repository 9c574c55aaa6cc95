#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "strichartz/norms/density.hpp"
#include "strichartz/spectral/grid.hpp"
#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

enum class HartreeScheme { strang, picard };

struct HartreeConfig {
  int d = 1;
  int N = 2;
  double a = 0.5;
  double dt = 1e-3;  // negative together with T runs the flow backward
  HartreeScheme scheme = HartreeScheme::strang;
  double T = 0.1;
  int monitor_every = 1;
  double coupling = 1.0;  // prefactor of w_a; zero gives the free flow
  int picard_iters = 8;
};

void validate(const HartreeConfig& config);

struct HartreeState {
  double time = 0.0;
  DensityMatrix gamma;
};

struct MonitorRecord {
  double time = 0.0;
  std::vector<double> masses;
  double gram_deviation = 0.0;
  double energy = 0.0;
  double trace = 0.0;
};

struct ConservationReport {
  double dt = 0.0;
  double max_gram_deviation = 0.0;
  std::vector<double> mass_drift;
  double energy_drift = 0.0;
  double trace_drift = 0.0;
};

struct Trajectory {
  std::vector<HartreeState> states;
  std::vector<MonitorRecord> records;
  ConservationReport report;
};

// Galerkin discretization of i u_t = (-Delta + c w_a * rho) u on the cutoff-N
// lattice, with the kinetic symbol -2 pi |n|^2 matching e^{2 pi i t|n|^2}.
class HartreeModel {
 public:
  HartreeModel(int d, int N, double a, double coupling = 1.0);

  const FrequencyLattice& lattice() const { return lattice_; }
  const FrequencyLattice& band() const { return band_; }  // cutoff 2N, holds density modes
  const TorusGrid& space_grid() const { return space_; }
  double a() const { return a_; }
  double coupling() const { return coupling_; }
  // c * w^(k) on the band.
  const std::vector<double>& interaction() const { return what_; }

  // Density coefficients rho^(k) = sum_{m-n=k} gamma_mn on the band.
  Eigen::VectorXcd density_coefficients(const Eigen::MatrixXcd& gamma) const;
  // A_mn = c w^(m-n) rho^(m-n).
  Eigen::MatrixXcd potential_matrix(const Eigen::MatrixXcd& gamma) const;
  // (c w_a * rho) sampled on a space grid via the FFT.
  GridFunction potential(const GridFunction& rho) const;

  double energy(const DensityMatrix& gamma) const;
  HartreeState step_strang(const HartreeState& state, double dt) const;

 private:
  FrequencyLattice lattice_;
  FrequencyLattice band_;
  TorusGrid space_;
  double a_;
  double coupling_;
  std::vector<double> what_;
  std::vector<std::size_t> diff_index_;  // band index of m - n for lattice pairs
};

// w_a * rho by Fourier multiplication on rho's own grid.
GridFunction hartree_potential(const GridFunction& rho, double a);

HartreeState step_strang(const HartreeState& state, double dt, double a);
double energy(const HartreeState& state, double a);

MonitorRecord monitor(const HartreeModel& model, const HartreeState& state);

Trajectory evolve(const HartreeConfig& config, const DensityMatrix& gamma0);

struct PicardResult {
  DensityMatrix gamma;             // compressed eigendecomposition at time T
  Eigen::MatrixXcd matrix;         // gamma(T) in the lattice basis
  std::vector<double> distances;   // max_t |gamma^{(k+1)} - gamma^{(k)}|_{C^2}
  std::size_t rank = 0;            // rank kept after compression
};

PicardResult picard_iterate(const DensityMatrix& gamma0, double T, double a, int iters, double dt = 1e-3,
                            double coupling = 1.0);

// f_1 = e_0 and f_2 = (e_{+1} + e_{-1})/sqrt 2 along the first axis, weights (1, 1/2).
DensityMatrix low_mode_state(int d, int N);

// Random orthonormal state of the given rank with weights in [0.1, 1].
DensityMatrix random_state(int d, int N, std::size_t rank, std::uint64_t seed);

}  // namespace strichartz
