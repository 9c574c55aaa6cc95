#pragma once

#include <span>

#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

// Fourier coefficient int_{[-1/2,1/2]^d} |x|^{-a} e^{-2 pi i n.x} dx of the
// periodized power potential. Requires 0 < a < d.
double power_potential_coefficient(double a, std::span<const int> n);

// All coefficients on a lattice (real and exactly even in n).
CoefficientVector periodized_power_potential(double a, const FrequencyLattice& band);

}  // namespace strichartz
