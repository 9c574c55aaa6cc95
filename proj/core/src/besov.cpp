#include "strichartz/norms/besov.hpp"

#include <cmath>
#include <string>

#include "strichartz/errors.hpp"
#include "strichartz/norms/mixed_norm.hpp"
#include "strichartz/spectral/multiplier.hpp"

namespace strichartz {

int default_besov_kmax(const TorusGrid& space) {
  int k = -1;
  while (2 * (1 << (k + 2)) < space.gx()) ++k;
  return k;
}

BesovResult besov_norm(const GridFunction& f, double s, double p, std::optional<int> kmax) {
  require(f.grid.space_only(), "Besov norms are taken on space-only grids");
  require(std::isfinite(s), "Besov smoothness must be finite");
  require(p >= 1.0, "Besov exponent must be >= 1");
  const int top = default_besov_kmax(f.grid);
  const int K = kmax.value_or(top);
  require(K >= 0, "Besov top block must be >= 0");
  require(K <= top, "grid with gx=" + std::to_string(f.grid.gx()) + " does not resolve dyadic block " +
                        std::to_string(K));
  BesovResult r;
  r.blocks.reserve(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    const GridFunction piece = apply_multiplier(MultiplierSymbol::dyadic(k), f);
    const double v = std::pow(2.0, k * s) * mixed_norm(piece, {p, p, {}});
    r.blocks.push_back(v);
    if (k == 0 || v > r.value) {
      r.value = v;
      r.argmax = k;
    }
  }
  return r;
}

}  // namespace strichartz
