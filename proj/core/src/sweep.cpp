#include "strichartz/lab/sweep.hpp"

#include <cmath>

#include "ols.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/lab/lhs.hpp"

namespace strichartz {

ExponentFit fit_loglog(const std::vector<int>& Ns, const std::vector<double>& values) {
  require(Ns.size() >= 3, "exponent fit needs at least three cutoffs");
  require(Ns.size() == values.size(), "one value per cutoff required");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    require(Ns[i] >= 1, "cutoffs must be positive");
    require(values[i] > 0.0 && std::isfinite(values[i]), "log-log fit needs positive finite values");
    x.push_back(std::log(static_cast<double>(Ns[i])));
    y.push_back(std::log(values[i]));
  }
  const detail::Line l = detail::ols(x, y);
  return {l.slope, l.intercept, l.max_residual, Ns};
}

SweepResult exponent_sweep(int d, const MixedNormSpec& spec, double alpha, const std::vector<int>& Ns,
                           const InstanceMaker& make_instance, const OperatorMaker& make_operator) {
  require(static_cast<bool>(make_instance), "exponent sweep needs an instance maker");
  require(Ns.size() >= 3, "exponent sweep needs at least three cutoffs");
  validate(spec);
  SweepResult out;
  std::vector<double> ratios;
  for (int N : Ns) {
    const WeightedFamily inst = make_instance(d, N);
    const ExtensionOperator op = make_operator ? make_operator(d, N) : ExtensionOperator::on_product_grid(d, N);
    SweepPoint pt;
    pt.N = N;
    pt.lhs = lhs_functional(inst.weights, inst.family, spec, op);
    pt.l_alpha = lp_norm(inst.weights, alpha);
    require(pt.l_alpha > 0.0, "instance has zero weights");
    pt.ratio = pt.lhs / pt.l_alpha;
    out.points.push_back(pt);
    ratios.push_back(pt.ratio);
  }
  out.fit = fit_loglog(Ns, ratios);
  return out;
}

double critical_alpha(int d, double rho) {
  require(d >= 1, "dimension must be >= 1");
  require(rho >= 0.0 && rho < d, "critical alpha needs 0 <= rho < d");
  return 1.0 / (1.0 - rho / d);
}

}  // namespace strichartz
