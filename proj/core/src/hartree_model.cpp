#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/extension/extension.hpp"
#include "strichartz/hartree/hartree.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/power_potential.hpp"

namespace strichartz {
namespace {

// exp(-i dt A) for Hermitian A.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& A, double dt) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  if (es.info() != Eigen::Success) throw NumericalGuard("eigensolver failed in potential step");
  Eigen::VectorXcd ph(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < ph.size(); ++i) ph[i] = std::polar(1.0, -dt * es.eigenvalues()[i]);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd gamma_of(const Eigen::MatrixXcd& F, const std::vector<double>& w) {
  Eigen::VectorXd lw(static_cast<Eigen::Index>(w.size()));
  for (std::size_t j = 0; j < w.size(); ++j) lw[static_cast<Eigen::Index>(j)] = w[j];
  return F * lw.asDiagonal() * F.adjoint();
}

std::vector<CoefficientVector> columns(const FrequencyLattice& L, const Eigen::MatrixXcd& F) {
  std::vector<CoefficientVector> out;
  for (Eigen::Index c = 0; c < F.cols(); ++c) {
    ComplexArray a(static_cast<std::size_t>(F.rows()));
    for (Eigen::Index r = 0; r < F.rows(); ++r) a[r] = F(r, c);
    out.emplace_back(L, std::move(a));
  }
  return out;
}

Eigen::MatrixXcd kinetic(const Eigen::MatrixXcd& F, const FrequencyLattice& L, double t) {
  Eigen::MatrixXcd out = F;
  for (Eigen::Index r = 0; r < F.rows(); ++r) {
    double phase = t * static_cast<double>(L.norm2(static_cast<std::size_t>(r)));
    phase -= std::floor(phase);
    out.row(r) *= std::polar(1.0, kTwoPi * phase);
  }
  return out;
}

}  // namespace

HartreeModel::HartreeModel(int d, int N, double a, double coupling)
    : lattice_(build_lattice(d, N)),
      band_(build_lattice(d, 2 * N)),
      space_(TorusGrid::space_for_products(d, N)),
      a_(a),
      coupling_(coupling) {
  require(a > 0.0 && a < d, "interaction power must lie in (0, d)");
  require(std::isfinite(coupling), "coupling must be finite");
  what_.assign(band_.size(), 0.0);
  if (coupling != 0.0) {
    const CoefficientVector w = periodized_power_potential(a, band_);
    for (std::size_t i = 0; i < band_.size(); ++i) what_[i] = coupling * w.a[i].real();
  }
  const std::size_t L = lattice_.size();
  diff_index_.resize(L * L);
  std::vector<int> k(d);
  for (std::size_t m = 0; m < L; ++m) {
    for (std::size_t n = 0; n < L; ++n) {
      for (int ax = 0; ax < d; ++ax) k[ax] = lattice_.mode(m)[ax] - lattice_.mode(n)[ax];
      diff_index_[m * L + n] = *band_.index_of(k);
    }
  }
}

Eigen::VectorXcd HartreeModel::density_coefficients(const Eigen::MatrixXcd& gamma) const {
  const std::size_t L = lattice_.size();
  Eigen::VectorXcd rho = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(band_.size()));
  for (std::size_t m = 0; m < L; ++m) {
    for (std::size_t n = 0; n < L; ++n) {
      rho[static_cast<Eigen::Index>(diff_index_[m * L + n])] +=
          gamma(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }
  }
  return rho;
}

Eigen::MatrixXcd HartreeModel::potential_matrix(const Eigen::MatrixXcd& gamma) const {
  const Eigen::VectorXcd rho = density_coefficients(gamma);
  const std::size_t L = lattice_.size();
  Eigen::MatrixXcd A(static_cast<Eigen::Index>(L), static_cast<Eigen::Index>(L));
  for (std::size_t m = 0; m < L; ++m) {
    for (std::size_t n = 0; n < L; ++n) {
      const std::size_t k = diff_index_[m * L + n];
      A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = what_[k] * rho[static_cast<Eigen::Index>(k)];
    }
  }
  return 0.5 * (A + A.adjoint());
}

GridFunction HartreeModel::potential(const GridFunction& rho) const {
  GridFunction V = hartree_potential(rho, a_);
  for (auto& z : V.values) z *= coupling_;
  return V;
}

double HartreeModel::energy(const DensityMatrix& gamma) const {
  double kin = 0.0;
  for (std::size_t j = 0; j < gamma.rank(); ++j) {
    const auto& f = gamma.orbitals()[j].a;
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += static_cast<double>(lattice_.norm2(i)) * std::norm(f[i]);
    kin += gamma.weights()[j] * s;
  }
  double pot = 0.0;
  if (coupling_ != 0.0 && gamma.rank() > 0) {
    const Eigen::VectorXcd rho = density_coefficients(gamma.matrix());
    for (std::size_t k = 0; k < band_.size(); ++k) pot += what_[k] * std::norm(rho[static_cast<Eigen::Index>(k)]);
  }
  return -kTwoPi * kin + 0.5 * pot;
}

HartreeState HartreeModel::step_strang(const HartreeState& state, double dt) const {
  const DensityMatrix& g = state.gamma;
  require(g.lattice() == lattice_, "state lattice does not match the model");
  require(std::isfinite(dt), "time step must be finite");
  if (g.rank() == 0) return {state.time + dt, g};
  const std::vector<double>& w = g.weights();

  Eigen::MatrixXcd F = kinetic(orbital_matrix(g.orbitals()), lattice_, 0.5 * dt);
  if (coupling_ != 0.0) {
    // Symmetric potential step: A = (A(start) + A(end)) / 2, solved by
    // fixed-point iteration so the scheme stays time reversible.
    const Eigen::MatrixXcd A0 = potential_matrix(gamma_of(F, w));
    const double scale = 1.0 + A0.cwiseAbs().maxCoeff();
    Eigen::MatrixXcd A = A0;
    Eigen::MatrixXcd U = unitary_exp(A, dt);
    double prev = kInf;
    for (int it = 0;; ++it) {
      const Eigen::MatrixXcd A1 = potential_matrix(gamma_of(U * F, w));
      const Eigen::MatrixXcd next = 0.5 * (A0 + A1);
      const double diff = (next - A).cwiseAbs().maxCoeff();
      A = next;
      U = unitary_exp(A, dt);
      if (diff <= 1e-15 * scale) break;
      if (diff >= prev && diff <= 1e-13 * scale) break;  // stalled at roundoff
      if (it >= 50) throw NumericalGuard("potential fixed point did not converge in 50 iterations");
      prev = diff;
    }
    F = U * F;
  }
  F = kinetic(F, lattice_, 0.5 * dt);
  return {state.time + dt, DensityMatrix(w, columns(lattice_, F), g.orthonormal())};
}

GridFunction hartree_potential(const GridFunction& rho, double a) {
  const TorusGrid& g = rho.grid;
  require(g.space_only(), "hartree potential acts on space-only grids");
  require(a > 0.0 && a < g.dim(), "interaction power must lie in (0, d)");
  require(g.gx() >= 3, "grid too coarse for the hartree potential");
  double peak = 0.0, imag = 0.0;
  for (const auto& z : rho.values) {
    peak = std::max(peak, std::abs(z));
    imag = std::max(imag, std::abs(z.imag()));
  }
  require(imag <= 1e-12 * std::max(peak, 1.0), "density must be real");

  const int band = (g.gx() - 1) / 2;
  const FrequencyLattice B = build_lattice(g.dim(), band);
  const CoefficientVector w = periodized_power_potential(a, B);
  ComplexArray c = rho.values;
  detail::grid_dft(c, g, -1);
  std::vector<int> idx(g.dim()), n(g.dim());
  for (std::size_t s = 0; s < c.size(); ++s) {
    g.spatial_index(s, idx);
    for (int ax = 0; ax < g.dim(); ++ax) n[ax] = detail::signed_frequency(idx[ax], g.gx());
    const auto i = B.index_of(n);
    if (!i) {
      require(std::abs(c[s]) <= 1e-10 * std::max(peak, 1e-300) * static_cast<double>(g.size()),
              "density has content at the Nyquist frequency");
      c[s] = 0.0;
      continue;
    }
    c[s] *= w.a[*i].real() / static_cast<double>(g.size());
  }
  detail::grid_dft(c, g, +1);
  return GridFunction(g, std::move(c));
}

HartreeState step_strang(const HartreeState& state, double dt, double a) {
  const FrequencyLattice& L = state.gamma.lattice();
  return HartreeModel(L.dim(), L.cutoff(), a).step_strang(state, dt);
}

double energy(const HartreeState& state, double a) {
  const FrequencyLattice& L = state.gamma.lattice();
  return HartreeModel(L.dim(), L.cutoff(), a).energy(state.gamma);
}

DensityMatrix low_mode_state(int d, int N) {
  const FrequencyLattice L = build_lattice(d, N);
  std::vector<int> zero(d, 0), plus(d, 0), minus(d, 0);
  plus[0] = 1;
  minus[0] = -1;
  CoefficientVector f1 = CoefficientVector::basis(L, zero);
  CoefficientVector f2(L);
  f2.a[*L.index_of(plus)] = 1.0 / std::sqrt(2.0);
  f2.a[*L.index_of(minus)] = 1.0 / std::sqrt(2.0);
  return DensityMatrix({1.0, 0.5}, {f1, f2}, true);
}

DensityMatrix random_state(int d, int N, std::size_t rank, std::uint64_t seed) {
  const FrequencyLattice L = build_lattice(d, N);
  WeightedFamily inst = random_instance(L, rank, seed);
  return DensityMatrix(inst.weights, inst.family.vectors(), true);
}

}  // namespace strichartz
