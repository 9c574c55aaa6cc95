#pragma once

#include "strichartz/spectral/grid.hpp"
#include "strichartz/types.hpp"

namespace strichartz {

// Half-open arc [start, start + length) of the time torus.
struct TimeWindow {
  double start = 0.0;
  double length = 1.0;

  bool contains(double t) const;
};

// L^p_t L^q_x with p in time and q in space; kInf allowed for either.
struct MixedNormSpec {
  double p = 2.0;
  double q = 2.0;
  TimeWindow window{};
};

void validate(const MixedNormSpec& spec);

// (int_window (int |F|^q dx)^{p/q} dt)^{1/p}, with grid maxima at infinity.
// Space-only grids are treated as a single time sample of weight one.
double mixed_norm(const GridFunction& F, const MixedNormSpec& spec);

// Per-time-sample spatial norms (int |F(., t_k)|^q dx)^{1/q}.
std::vector<double> spatial_norms(const GridFunction& F, double q);

// Conjugate exponent p' with 1/p + 1/p' = 1.
double conjugate_exponent(double p);

}  // namespace strichartz
