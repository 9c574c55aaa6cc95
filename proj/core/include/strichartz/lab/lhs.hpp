#pragma once

#include <vector>

#include "strichartz/extension/extension.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/mixed_norm.hpp"

namespace strichartz {

// sum_j lambda_j |E_N a_j|^2 on the operator's grid.
GridFunction weighted_density(const std::vector<double>& weights, const OrthonormalFamily& family,
                              const ExtensionOperator& op);

// |sum_j lambda_j |E_N a_j|^2|_{L^p_t L^q_x}.
double lhs_functional(const std::vector<double>& weights, const OrthonormalFamily& family, const MixedNormSpec& spec,
                      const ExtensionOperator& op);

}  // namespace strichartz
