#pragma once

#include <span>

#include "strichartz/spectral/grid.hpp"
#include "strichartz/types.hpp"

namespace strichartz::detail {

// Unnormalized in-place DFT over row-major dims. sign = -1 is the forward
// transform sum_j x_j e^{-2 pi i jk/n}, sign = +1 the backward one.
void dft(ComplexArray& data, std::span<const int> dims, int sign);

// DFT over all axes of a grid (time axis dropped when gt == 1).
void grid_dft(ComplexArray& data, const TorusGrid& grid, int sign);

// Signed frequency represented by index i on an axis of length g.
inline int signed_frequency(int i, int g) { return 2 * i > g ? i - g : i; }

inline int wrap(long long k, int g) {
  long long r = k % g;
  return static_cast<int>(r < 0 ? r + g : r);
}

}  // namespace strichartz::detail
