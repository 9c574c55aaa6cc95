#include "strichartz/norms/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "strichartz/errors.hpp"
#include "strichartz/extension/extension.hpp"
#include "strichartz/norms/schatten.hpp"
#include "strichartz/reduction.hpp"
#include "strichartz/spectral/multiplier.hpp"

namespace strichartz {

DensityMatrix::DensityMatrix(std::vector<double> weights, std::vector<CoefficientVector> orbitals, bool orthonormal)
    : lattice_(orbitals.empty() ? build_lattice(1, 1) : orbitals.front().lattice),
      weights_(std::move(weights)),
      orbitals_(std::move(orbitals)),
      orthonormal_(orthonormal) {
  require(!orbitals_.empty(), "density matrix needs at least one orbital (use the lattice constructor for zero)");
  require(weights_.size() == orbitals_.size(), "one weight per orbital required");
  for (double w : weights_) require(std::isfinite(w), "density matrix weights must be finite");
  for (const auto& f : orbitals_) require(f.lattice == lattice_, "orbitals live on different lattices");
  if (orthonormal_) {
    require(gram_deviation(orbitals_) <= 1e-10, "orbitals claimed orthonormal but Gram matrix deviates from identity");
  }
}

DensityMatrix::DensityMatrix(FrequencyLattice lattice) : lattice_(std::move(lattice)), orthonormal_(true) {}

DensityMatrix DensityMatrix::from_matrix(const FrequencyLattice& lattice, const Eigen::MatrixXcd& G, double rel_cutoff) {
  const auto L = static_cast<Eigen::Index>(lattice.size());
  require(G.rows() == L && G.cols() == L, "matrix does not match the lattice");
  const Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success) throw NumericalGuard("eigensolver failed to converge on density matrix");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  std::vector<double> w;
  std::vector<CoefficientVector> f;
  // Descending by |lambda| so the dominant orbitals come first.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(L));
  for (Eigen::Index i = 0; i < L; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return std::abs(ev[x]) > std::abs(ev[y]); });
  for (Eigen::Index i : order) {
    if (top == 0.0 || std::abs(ev[i]) < rel_cutoff * top) continue;
    w.push_back(ev[i]);
    ComplexArray c(static_cast<std::size_t>(L));
    for (Eigen::Index r = 0; r < L; ++r) c[r] = es.eigenvectors()(r, i);
    f.emplace_back(lattice, std::move(c));
  }
  if (w.empty()) return DensityMatrix(lattice);
  return DensityMatrix(std::move(w), std::move(f), true);
}

Eigen::MatrixXcd orbital_matrix(const std::vector<CoefficientVector>& orbitals) {
  if (orbitals.empty()) return {};
  const auto L = static_cast<Eigen::Index>(orbitals.front().size());
  Eigen::MatrixXcd F(L, static_cast<Eigen::Index>(orbitals.size()));
  for (std::size_t j = 0; j < orbitals.size(); ++j) {
    for (Eigen::Index r = 0; r < L; ++r) F(r, static_cast<Eigen::Index>(j)) = orbitals[j].a[r];
  }
  return F;
}

double gram_deviation(const std::vector<CoefficientVector>& orbitals) {
  double dev = 0.0;
  for (std::size_t j = 0; j < orbitals.size(); ++j) {
    for (std::size_t k = 0; k < orbitals.size(); ++k) {
      const Complex g = inner(orbitals[j], orbitals[k]);
      dev = std::max(dev, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  }
  return dev;
}

Eigen::MatrixXcd DensityMatrix::gram() const {
  const Eigen::MatrixXcd F = orbital_matrix(orbitals_);
  return F.adjoint() * F;
}

Eigen::MatrixXcd DensityMatrix::matrix() const {
  const auto L = static_cast<Eigen::Index>(lattice_.size());
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(L, L);
  for (std::size_t j = 0; j < orbitals_.size(); ++j) {
    Eigen::Map<const Eigen::VectorXcd> f(orbitals_[j].a.data(), L);
    G += weights_[j] * f * f.adjoint();
  }
  return G;
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (std::size_t j = 0; j < orbitals_.size(); ++j) t += weights_[j] * std::pow(l2_norm(orbitals_[j]), 2);
  return t;
}

GridFunction density(const DensityMatrix& gamma, const TorusGrid& space, std::optional<double> t) {
  require(space.space_only(), "density is sampled on a space-only grid");
  require(space.dim() == gamma.lattice().dim(), "grid and lattice dimensions differ");
  require(space.gx() > 2 * gamma.lattice().cutoff(), "space grid does not resolve the orbitals");
  GridFunction rho(space);
  for (std::size_t j = 0; j < gamma.rank(); ++j) {
    const CoefficientVector& f0 = gamma.orbitals()[j];
    const GridFunction u = synthesize(t ? free_propagate(f0, *t) : f0, space);
    for (std::size_t i = 0; i < rho.size(); ++i) rho.values[i] += gamma.weights()[j] * std::norm(u.values[i]);
  }
  return rho;
}

TracePairing trace_pairing(const DensityMatrix& gamma0, const GridFunction& V, double s) {
  require(std::isfinite(s), "smoothness must be finite");
  const FrequencyLattice& L = gamma0.lattice();
  const ExtensionOperator op(L, V.grid);
  const MultiplierSymbol smooth = MultiplierSymbol::bessel(-s);

  // Left side: quadrature of the propagated density against V.
  GridFunction rho(V.grid);
  for (std::size_t j = 0; j < gamma0.rank(); ++j) {
    const GridFunction u = op.extend(apply_multiplier(smooth, gamma0.orbitals()[j]));
    for (std::size_t i = 0; i < rho.size(); ++i) rho.values[i] += gamma0.weights()[j] * std::norm(u.values[i]);
  }
  TracePairing out;
  out.left = quadrature_integral(multiply(rho, V));

  // Right side: trace against the matrix A_mn = w_m w_n V^(m - n, |m|^2 - |n|^2),
  // with V^ summed directly on the grid.
  const TorusGrid& g = V.grid;
  const long long gx = g.gx(), gt = g.gt();
  const long long den = gx * gt;
  ComplexArray roots(static_cast<std::size_t>(den));
  for (long long r = 0; r < den; ++r) roots[r] = unit_root(-r, den);
  const int d = g.dim();
  std::vector<std::vector<int>> sidx(g.spatial_size(), std::vector<int>(d));
  for (std::size_t sp = 0; sp < g.spatial_size(); ++sp) g.spatial_index(sp, sidx[sp]);

  std::map<std::pair<std::vector<int>, long long>, Complex> memo;
  auto vhat = [&](const std::vector<int>& k, long long tau) {
    const auto key = std::make_pair(k, tau);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t S = g.spatial_size();
    const Complex v = pairwise_reduce(0, g.size(), [&](std::size_t idx) {
      const std::size_t kk = idx / S, sp = idx % S;
      long long kx = 0;
      for (int a = 0; a < d; ++a) kx += static_cast<long long>(k[a]) * sidx[sp][a];
      long long r = ((kx % gx) * gt + (tau % gt) * static_cast<long long>(kk) % gt * gx) % den;
      if (r < 0) r += den;
      return V.values[idx] * roots[static_cast<std::size_t>(r)];
    }) * g.weight();
    memo.emplace(key, v);
    return v;
  };

  std::vector<double> w(L.size());
  for (std::size_t m = 0; m < L.size(); ++m) w[m] = smooth(L.mode(m));
  Complex right{};
  std::vector<int> k(d);
  for (std::size_t j = 0; j < gamma0.rank(); ++j) {
    const auto& f = gamma0.orbitals()[j].a;
    Complex acc{};
    for (std::size_t m = 0; m < L.size(); ++m) {
      if (f[m] == Complex{}) continue;
      for (std::size_t n = 0; n < L.size(); ++n) {
        if (f[n] == Complex{}) continue;
        for (int a = 0; a < d; ++a) k[a] = L.mode(m)[a] - L.mode(n)[a];
        acc += std::conj(f[m]) * w[m] * w[n] * vhat(k, L.norm2(m) - L.norm2(n)) * f[n];
      }
    }
    right += gamma0.weights()[j] * acc;
  }
  out.right = right;
  out.difference = std::abs(out.left - out.right);
  return out;
}

double sobolev_schatten_norm(const DensityMatrix& gamma, double s, double alpha) {
  const FrequencyLattice& L = gamma.lattice();
  Eigen::VectorXd D(static_cast<Eigen::Index>(L.size()));
  const MultiplierSymbol sym = MultiplierSymbol::bessel(s);
  for (std::size_t i = 0; i < L.size(); ++i) D[static_cast<Eigen::Index>(i)] = sym(L.mode(i));
  const Eigen::MatrixXcd M = D.asDiagonal() * gamma.matrix() * D.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (M + M.adjoint()), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalGuard("eigensolver failed in Sobolev-Schatten norm");
  std::vector<double> sv;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) sv.push_back(std::abs(es.eigenvalues()[i]));
  return schatten_norm(sv, alpha);
}

}  // namespace strichartz
