#include "strichartz/norms/mixed_norm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "strichartz/errors.hpp"
#include "strichartz/reduction.hpp"

namespace strichartz {

bool TimeWindow::contains(double t) const {
  double r = t - start;
  r -= std::floor(r);
  if (r > 1.0 - 1e-12) r = 0.0;  // wrap roundoff back onto the start point
  return r < length - 1e-12;
}

void validate(const MixedNormSpec& spec) {
  require(spec.p >= 1.0, "mixed norm needs p >= 1");
  require(spec.q >= 1.0, "mixed norm needs q >= 1");
  require(std::isfinite(spec.window.start), "time window start must be finite");
  require(spec.window.length > 0.0 && spec.window.length <= 1.0, "time window length must lie in (0, 1]");
}

std::vector<double> spatial_norms(const GridFunction& F, double q) {
  require(q >= 1.0, "spatial norm needs q >= 1");
  const std::size_t S = F.grid.spatial_size();
  const auto slices = static_cast<std::size_t>(F.grid.gt());
  std::vector<double> out(slices);
  for (std::size_t k = 0; k < slices; ++k) {
    const Complex* row = F.values.data() + k * S;
    if (std::isinf(q)) {
      double m = 0.0;
      for (std::size_t s = 0; s < S; ++s) m = std::max(m, std::abs(row[s]));
      out[k] = m;
    } else {
      const double sum = pairwise_reduce(0, S, [&](std::size_t s) { return std::pow(std::abs(row[s]), q); });
      out[k] = std::pow(sum / static_cast<double>(S), 1.0 / q);
    }
  }
  return out;
}

double mixed_norm(const GridFunction& F, const MixedNormSpec& spec) {
  validate(spec);
  const std::vector<double> inner = spatial_norms(F, spec.q);
  std::vector<double> kept;
  for (int k = 0; k < F.grid.gt(); ++k) {
    if (spec.window.contains(F.grid.t(k))) kept.push_back(inner[k]);
  }
  require(!kept.empty(), "time window contains no grid samples");
  if (std::isinf(spec.p)) return *std::max_element(kept.begin(), kept.end());
  const double sum = pairwise_reduce(0, kept.size(), [&](std::size_t i) { return std::pow(kept[i], spec.p); });
  return std::pow(sum / static_cast<double>(F.grid.gt()), 1.0 / spec.p);
}

double conjugate_exponent(double p) {
  require(p >= 1.0, "conjugate exponent needs p >= 1");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace strichartz
