#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace strichartz {

using Complex = std::complex<double>;
using ComplexArray = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// e^{2 pi i r} for a rational phase r = num/den, reduced mod den first so
// large integer phases stay accurate.
inline Complex unit_root(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  const double theta = kTwoPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace strichartz
