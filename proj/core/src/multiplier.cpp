#include "strichartz/spectral/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fft.hpp"
#include "strichartz/errors.hpp"

namespace strichartz {
namespace {

double smooth_step_factor(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

}  // namespace

double bump(double r) {
  r = std::abs(r);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double up = smooth_step_factor(2.0 - r);
  const double down = smooth_step_factor(r - 1.0);
  return up / (up + down);
}

double dyadic_piece(int k, double r) {
  if (k == 0) return bump(r);
  return bump(std::ldexp(r, -k)) - bump(std::ldexp(r, 1 - k));
}

MultiplierSymbol MultiplierSymbol::cutoff(int N) {
  require(N >= 0, "cutoff level must be >= 0");
  return {Kind::cutoff, N, 0.0};
}

MultiplierSymbol MultiplierSymbol::dyadic(int k) {
  require(k >= 0 && k < 30, "dyadic level must lie in [0, 30)");
  return {Kind::dyadic, k, 0.0};
}

MultiplierSymbol MultiplierSymbol::bessel(double s) {
  require(std::isfinite(s), "bessel order must be finite");
  return {Kind::bessel, 0, s};
}

double MultiplierSymbol::operator()(std::span<const int> n) const {
  switch (kind_) {
    case Kind::cutoff:
      return std::all_of(n.begin(), n.end(), [&](int c) { return std::abs(c) <= level_; }) ? 1.0 : 0.0;
    case Kind::dyadic: {
      double r2 = 0.0;
      for (int c : n) r2 += static_cast<double>(c) * c;
      return dyadic_piece(level_, std::sqrt(r2));
    }
    case Kind::bessel: {
      double r2 = 0.0;
      for (int c : n) r2 += static_cast<double>(c) * c;
      return std::pow(1.0 + r2, 0.5 * order_);
    }
  }
  return 0.0;
}

int MultiplierSymbol::support_radius() const {
  switch (kind_) {
    case Kind::cutoff:
      return level_;
    case Kind::dyadic:
      return (1 << (level_ + 1)) - 1;
    case Kind::bessel:
      return -1;
  }
  return -1;
}

CoefficientVector apply_multiplier(const MultiplierSymbol& sym, const CoefficientVector& f) {
  CoefficientVector out(f.lattice);
  for (std::size_t i = 0; i < f.size(); ++i) out.a[i] = sym(f.lattice.mode(i)) * f.a[i];
  return out;
}

GridFunction apply_multiplier(const MultiplierSymbol& sym, const GridFunction& f) {
  const TorusGrid& g = f.grid;
  require(g.space_only(), "grid multipliers act on space-only grids");
  const int gx = g.gx();
  if (sym.kind() == MultiplierSymbol::Kind::dyadic) {
    require(2 * (1 << (sym.level() + 1)) < gx,
            "grid with gx=" + std::to_string(gx) + " does not resolve dyadic block " + std::to_string(sym.level()));
  }
  ComplexArray c = f.values;
  detail::grid_dft(c, g, -1);
  const double scale = 1.0 / static_cast<double>(g.size());

  std::vector<int> idx(g.dim()), n(g.dim());
  double peak = 0.0, nyquist = 0.0;
  for (std::size_t s = 0; s < c.size(); ++s) {
    g.spatial_index(s, idx);
    bool on_nyquist = false;
    for (int a = 0; a < g.dim(); ++a) on_nyquist |= (2 * idx[a] == gx);
    const double m = std::abs(c[s]) * scale;
    peak = std::max(peak, m);
    if (on_nyquist) nyquist = std::max(nyquist, m);
  }
  require(nyquist <= 1e-10 * std::max(peak, 1e-300),
          "grid does not resolve the function's band (content at the Nyquist frequency)");

  for (std::size_t s = 0; s < c.size(); ++s) {
    g.spatial_index(s, idx);
    for (int a = 0; a < g.dim(); ++a) n[a] = detail::signed_frequency(idx[a], gx);
    c[s] *= sym(n) * scale;
  }
  detail::grid_dft(c, g, +1);
  return GridFunction(g, std::move(c));
}

GridFunction synthesize(const CoefficientVector& f, const TorusGrid& space) {
  const FrequencyLattice& L = f.lattice;
  require(space.space_only(), "synthesize needs a space-only grid");
  require(space.dim() == L.dim(), "grid and lattice dimensions differ");
  require(space.gx() > 2 * L.cutoff(), "space grid does not resolve the lattice (need gx > 2N)");
  ComplexArray c(space.size(), Complex{});
  for (std::size_t i = 0; i < L.size(); ++i) {
    std::size_t s = 0;
    for (int c_ : L.mode(i)) s = s * space.gx() + detail::wrap(c_, space.gx());
    c[s] += f.a[i];
  }
  detail::grid_dft(c, space, +1);
  return GridFunction(space, std::move(c));
}

CoefficientVector analyze(const GridFunction& f, const FrequencyLattice& L) {
  const TorusGrid& space = f.grid;
  require(space.space_only(), "analyze needs a space-only grid");
  require(space.dim() == L.dim(), "grid and lattice dimensions differ");
  require(space.gx() > 2 * L.cutoff(), "space grid does not resolve the lattice (need gx > 2N)");
  ComplexArray c = f.values;
  detail::grid_dft(c, space, -1);
  CoefficientVector out(L);
  const double scale = 1.0 / static_cast<double>(space.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    std::size_t s = 0;
    for (int c_ : L.mode(i)) s = s * space.gx() + detail::wrap(c_, space.gx());
    out.a[i] = c[s] * scale;
  }
  return out;
}

}  // namespace strichartz
