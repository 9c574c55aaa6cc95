#pragma once

#include <cstddef>
#include <span>

#include "strichartz/types.hpp"

namespace strichartz {

// Uniform grid on T^d (gt == 1) or T^{d+1}. Samples are stored time-major:
// index k * gx^d + s, with the spatial index s lexicographic in (i_1, ..., i_d).
class TorusGrid {
 public:
  TorusGrid(int d, int gx, int gt = 1);

  // Smallest grid on which products of two cutoff-N extensions integrate
  // exactly: gx = 4N + 2 and gt = 4 d N^2 + 2.
  static TorusGrid for_products(int d, int N);
  // Space-only grid resolving products of two cutoff-N functions.
  static TorusGrid space_for_products(int d, int N);

  int dim() const { return d_; }
  int gx() const { return gx_; }
  int gt() const { return gt_; }
  bool space_only() const { return gt_ == 1; }
  std::size_t spatial_size() const { return spatial_; }
  std::size_t size() const { return spatial_ * static_cast<std::size_t>(gt_); }
  double weight() const { return 1.0 / static_cast<double>(size()); }

  double x(int i) const { return static_cast<double>(i) / gx_; }
  double t(int k) const { return static_cast<double>(k) / gt_; }
  // Centered time in [-1/2, 1/2).
  double t_centered(int k) const;

  // Spatial multi-index of flat spatial index s.
  void spatial_index(std::size_t s, std::span<int> out) const;

  // True when every trigonometric polynomial with |x-frequency| <= x_band per
  // axis and |t-frequency| <= t_band is integrated exactly.
  bool exact_for(int x_band, long long t_band = 0) const;

  // Spatial sub-grid (gt = 1) of this grid.
  TorusGrid space() const { return TorusGrid(d_, gx_, 1); }

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.d_ == b.d_ && a.gx_ == b.gx_ && a.gt_ == b.gt_;
  }

 private:
  int d_;
  int gx_;
  int gt_;
  std::size_t spatial_;
};

// Complex samples on a TorusGrid; finite by construction.
struct GridFunction {
  TorusGrid grid;
  ComplexArray values;

  explicit GridFunction(TorusGrid g);  // zero
  GridFunction(TorusGrid g, ComplexArray v);

  std::size_t size() const { return values.size(); }
  Complex& operator[](std::size_t i) { return values[i]; }
  const Complex& operator[](std::size_t i) const { return values[i]; }

  static GridFunction constant(const TorusGrid& g, Complex c);
};

// Normalized quadrature: mean of the samples.
Complex quadrature_integral(const GridFunction& F);

// Pointwise helpers used throughout.
GridFunction abs_squared(const GridFunction& F);
GridFunction multiply(const GridFunction& F, const GridFunction& G);

}  // namespace strichartz
