#include "strichartz/norms/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fft.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/reduction.hpp"

namespace strichartz {

double schatten_norm(std::span<const double> sv, double alpha) {
  require(alpha >= 1.0, "Schatten exponent must be >= 1");
  double top = 0.0;
  for (double s : sv) {
    require(std::isfinite(s) && s >= 0.0, "singular values must be finite and nonnegative");
    top = std::max(top, s);
  }
  if (std::isinf(alpha) || top == 0.0) return top;
  const double sum = pairwise_reduce(0, sv.size(), [&](std::size_t i) { return std::pow(sv[i] / top, alpha); });
  return top * std::pow(sum, 1.0 / alpha);
}

Eigen::MatrixXcd weighted_gram(const GridFunction& psi, const ExtensionOperator& op) {
  const TorusGrid& g = op.grid();
  require(psi.grid == g, "weight does not live on the extension grid");
  ComplexArray c = psi.values;
  detail::grid_dft(c, g, -1);
  const double w = g.weight();
  const FrequencyLattice& L = op.lattice();
  const auto n = static_cast<Eigen::Index>(L.size());
  const int d = L.dim();
  Eigen::MatrixXcd M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto mi = L.mode(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto mj = L.mode(static_cast<std::size_t>(j));
      std::size_t s = 0;
      for (int a = 0; a < d; ++a) s = s * g.gx() + detail::wrap(mi[a] - mj[a], g.gx());
      const std::size_t k = detail::wrap(L.norm2(static_cast<std::size_t>(i)) - L.norm2(static_cast<std::size_t>(j)), g.gt());
      M(i, j) = c[k * g.spatial_size() + s] * w;
    }
  }
  return M;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& M, double rel_clamp) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (M + M.adjoint()));
  if (es.info() != Eigen::Success) throw NumericalGuard("eigensolver failed to converge in matrix square root");
  Eigen::VectorXd ev = es.eigenvalues();
  const double top = std::max(ev.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev[i] = ev[i] <= top * rel_clamp ? 0.0 : std::sqrt(ev[i]);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<double> sandwich_singular_values(const GridFunction& W1, const GridFunction& W2,
                                             const ExtensionOperator& op) {
  const Eigen::MatrixXcd M1 = weighted_gram(abs_squared(W1), op);
  const Eigen::MatrixXcd M2 = weighted_gram(abs_squared(W2), op);
  const Eigen::MatrixXcd S = psd_sqrt(M1);
  const Eigen::MatrixXcd B = S * M2 * S;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (B + B.adjoint()), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalGuard("eigensolver failed to converge on sandwiched operator");
  std::vector<double> sv;
  sv.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) sv.push_back(std::sqrt(std::max(es.eigenvalues()[i], 0.0)));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace strichartz
