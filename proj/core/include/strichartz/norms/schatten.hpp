#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "strichartz/extension/extension.hpp"

namespace strichartz {

// (sum sv^alpha)^{1/alpha}, max(sv) for alpha = inf.
double schatten_norm(std::span<const double> sv, double alpha);

// M = E^* psi E, i.e. M_mn = psi^(m - n, |m|^2 - |n|^2), Hermitian for real psi.
Eigen::MatrixXcd weighted_gram(const GridFunction& psi, const ExtensionOperator& op);

// Nonzero singular values of F -> W1 E E^*(W2 F), descending, via the
// eigenvalues of M1^{1/2} M2 M1^{1/2}.
std::vector<double> sandwich_singular_values(const GridFunction& W1, const GridFunction& W2,
                                             const ExtensionOperator& op);

// Hermitian PSD square root, eigenvalues below max * rel_clamp set to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& M, double rel_clamp = 1e-14);

}  // namespace strichartz
