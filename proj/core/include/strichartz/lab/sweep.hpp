#pragma once

#include <functional>
#include <vector>

#include "strichartz/extension/extension.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/norms/mixed_norm.hpp"

namespace strichartz {

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::vector<int> Ns;
};

// Ordinary least squares of log(values) against log(Ns).
ExponentFit fit_loglog(const std::vector<int>& Ns, const std::vector<double>& values);

struct SweepPoint {
  int N = 0;
  double lhs = 0.0;
  double l_alpha = 0.0;
  double ratio = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  ExponentFit fit;
};

using InstanceMaker = std::function<WeightedFamily(int d, int N)>;
using OperatorMaker = std::function<ExtensionOperator(int d, int N)>;

// Fits lhs / |lambda|_{l^alpha} against N. The default operator is the
// exact-products grid.
SweepResult exponent_sweep(int d, const MixedNormSpec& spec, double alpha, const std::vector<int>& Ns,
                           const InstanceMaker& make_instance, const OperatorMaker& make_operator = {});

// alpha with 1/alpha = 1 - rho/d.
double critical_alpha(int d, double rho);

}  // namespace strichartz
