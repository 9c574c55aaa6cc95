#include "strichartz/lab/duality.hpp"

#include <cmath>

#include "strichartz/errors.hpp"
#include "strichartz/lab/lhs.hpp"
#include "strichartz/norms/schatten.hpp"

namespace strichartz {

DualityReport duality_check(const std::vector<double>& weights, const OrthonormalFamily& family, const GridFunction& W,
                            const MixedNormSpec& spec, double alpha, const ExtensionOperator& op) {
  validate(spec);
  DualityReport r;
  const GridFunction rho = weighted_density(weights, family, op);
  r.lhs = mixed_norm(rho, spec);
  r.l_alpha = lp_norm(weights, alpha);
  require(r.l_alpha > 0.0, "duality check needs nonzero weights");
  r.r1 = r.lhs / r.l_alpha;

  const std::vector<double> sv = sandwich_singular_values(W, W, op);
  r.schatten = schatten_norm(sv, conjugate_exponent(alpha));
  const MixedNormSpec dual{2.0 * conjugate_exponent(spec.p), 2.0 * conjugate_exponent(spec.q), spec.window};
  const double wn = mixed_norm(W, dual);
  r.weight_norm_sq = wn * wn;
  require(r.weight_norm_sq > 0.0, "duality check needs a nonzero weight");
  r.r2 = r.schatten / r.weight_norm_sq;

  const GridFunction psi = abs_squared(W);
  r.pairing_density = quadrature_integral(multiply(rho, psi));
  const Eigen::MatrixXcd M = weighted_gram(psi, op);
  const auto L = static_cast<Eigen::Index>(op.lattice().size());
  Complex tr{};
  for (std::size_t j = 0; j < family.size(); ++j) {
    Eigen::Map<const Eigen::VectorXcd> a(family.vectors()[j].a.data(), L);
    tr += weights[j] * a.dot(M * a);
  }
  r.pairing_trace = tr;
  r.pairing_residual = std::abs(r.pairing_density - r.pairing_trace);
  return r;
}

GridFunction holder_dual_weight(const std::vector<double>& weights, const OrthonormalFamily& family,
                                const MixedNormSpec& spec, const ExtensionOperator& op) {
  validate(spec);
  require(spec.p > 1.0 && std::isfinite(spec.p) && spec.q > 1.0 && std::isfinite(spec.q),
          "Hoelder dual weight needs 1 < p, q < inf");
  const GridFunction rho = weighted_density(weights, family, op);
  const std::vector<double> slice = spatial_norms(rho, spec.q);
  const TorusGrid& g = op.grid();
  GridFunction W(g);
  const std::size_t S = g.spatial_size();
  for (int k = 0; k < g.gt(); ++k) {
    if (!spec.window.contains(g.t(k)) || slice[k] == 0.0) continue;
    const double tfac = std::pow(slice[k], spec.p - spec.q);
    for (std::size_t s = 0; s < S; ++s) {
      const std::size_t i = static_cast<std::size_t>(k) * S + s;
      W.values[i] = std::sqrt(std::pow(std::abs(rho.values[i]), spec.q - 1.0) * tfac);
    }
  }
  return W;
}

}  // namespace strichartz
