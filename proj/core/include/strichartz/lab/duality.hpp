#pragma once

#include <vector>

#include "strichartz/extension/extension.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/mixed_norm.hpp"

namespace strichartz {

struct DualityReport {
  double r1 = 0.0;              // lhs / |lambda|_{l^alpha}
  double r2 = 0.0;              // |W E E^* W|_{C^{alpha'}} / |W|^2_{L^{2p'} L^{2q'}}
  double lhs = 0.0;
  double l_alpha = 0.0;
  double schatten = 0.0;
  double weight_norm_sq = 0.0;
  Complex pairing_density;      // <sum lambda_j |E a_j|^2, |W|^2>
  Complex pairing_trace;        // Tr(Gamma E^* |W|^2 E)
  double pairing_residual = 0.0;
};

DualityReport duality_check(const std::vector<double>& weights, const OrthonormalFamily& family, const GridFunction& W,
                            const MixedNormSpec& spec, double alpha, const ExtensionOperator& op);

// The weight attaining Hoelder's inequality against the family's density in
// L^p_t L^q_x: |W|^2 proportional to rho^{q-1} |rho(t)|_q^{p-q}. Needs
// 1 < p, q < inf.
GridFunction holder_dual_weight(const std::vector<double>& weights, const OrthonormalFamily& family,
                                const MixedNormSpec& spec, const ExtensionOperator& op);

}  // namespace strichartz
