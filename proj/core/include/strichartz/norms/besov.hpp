#pragma once

#include <optional>
#include <vector>

#include "strichartz/spectral/grid.hpp"

namespace strichartz {

struct BesovResult {
  double value = 0.0;          // max_k 2^{ks} |P_k f|_{L^p}
  int argmax = 0;              // smallest maximizing k
  std::vector<double> blocks;  // 2^{ks} |P_k f|_{L^p} for k = 0..Kmax
};

// Largest k with 2^{k+1} < gx/2 (no aliased block); -1 if none.
int default_besov_kmax(const TorusGrid& space);

BesovResult besov_norm(const GridFunction& f, double s, double p, std::optional<int> kmax = std::nullopt);

}  // namespace strichartz
