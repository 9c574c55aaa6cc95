#pragma once

#include <span>

#include "strichartz/spectral/grid.hpp"
#include "strichartz/spectral/lattice.hpp"

namespace strichartz {

// Smooth radial bump: 1 on [0, 1], 0 on [2, inf), C-infinity in between.
double bump(double r);

// Littlewood-Paley piece phi_k(n) built from bump() with Euclidean |n|.
double dyadic_piece(int k, double r);

class MultiplierSymbol {
 public:
  enum class Kind { cutoff, dyadic, bessel };

  static MultiplierSymbol cutoff(int N);
  static MultiplierSymbol dyadic(int k);
  static MultiplierSymbol bessel(double s);

  Kind kind() const { return kind_; }
  int level() const { return level_; }       // N for cutoff, k for dyadic
  double order() const { return order_; }    // s for bessel

  double operator()(std::span<const int> n) const;

  // Largest |n|_inf where the symbol can be nonzero; -1 when unbounded.
  int support_radius() const;

 private:
  MultiplierSymbol(Kind kind, int level, double order) : kind_(kind), level_(level), order_(order) {}
  Kind kind_;
  int level_ = 0;
  double order_ = 0.0;
};

CoefficientVector apply_multiplier(const MultiplierSymbol& sym, const CoefficientVector& f);

// Grid route: transform, multiply, transform back. The grid must be
// space-only and must resolve both the symbol and the function's band.
GridFunction apply_multiplier(const MultiplierSymbol& sym, const GridFunction& f);

// Samples of sum_n a_n e^{2 pi i n.x} on a space grid (gx > 2N required).
GridFunction synthesize(const CoefficientVector& f, const TorusGrid& space);
// Fourier coefficients of a space grid function on the given lattice.
CoefficientVector analyze(const GridFunction& f, const FrequencyLattice& lattice);

}  // namespace strichartz
