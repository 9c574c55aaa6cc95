#include "strichartz/norms/power_potential.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <map>
#include <vector>

#include "strichartz/errors.hpp"
#include "strichartz/spectral/multiplier.hpp"

namespace strichartz {
namespace {

using Gauss16 = boost::math::quadrature::gauss<double, 16>;

// The integrand is split with chi(r) = bump(8r): 1 on r <= 1/8, 0 on r >= 1/4.
double chi(double r) { return bump(8.0 * r); }

// int_{S^{d-1}} e^{-i z w.e} dw.
double angular_factor(int d, double z) {
  if (d == 1) return 2.0 * std::cos(z);
  const double nu = 0.5 * d - 1.0;
  if (z == 0.0) return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
  if (d == 2) return kTwoPi * std::cyl_bessel_j(0.0, z);
  return std::pow(kTwoPi, 0.5 * d) * std::pow(z, -nu) * std::cyl_bessel_j(nu, z);
}

// int_0^{1/4} chi(r) r^{d-1-a} Omega_d(2 pi |n| r) dr on a geometric mesh.
double ball_part(double a, int d, double nrm) {
  const double e = d - 1 - a;
  const double z = kTwoPi * nrm;
  constexpr int kLevels = 32;
  auto f = [&](double r) { return chi(r) * std::pow(r, e) * angular_factor(d, z * r); };
  double total = 0.0;
  // Sum smallest panels first.
  for (int i = kLevels - 1; i >= 0; --i) {
    const double hi = std::ldexp(0.25, -i);
    const double lo = 0.5 * hi;
    const double width = hi - lo;
    int m = std::max(1, static_cast<int>(std::ceil(2.0 * nrm * width)));
    if (i == 0) m = std::max(m, 8);  // the cutoff transition lives here
    for (int j = 0; j < m; ++j) {
      const double u0 = lo + width * j / m, u1 = lo + width * (j + 1) / m;
      total += Gauss16::integrate(f, u0, u1);
    }
  }
  const double head = std::ldexp(0.25, -kLevels);
  total += angular_factor(d, 0.0) * std::pow(head, e + 1.0) / (e + 1.0);
  return total;
}

struct Rule {
  std::vector<double> x, w;
};

// Composite 16-point Gauss-Legendre on [0, 1/2].
Rule half_interval_rule(int panels) {
  Rule r;
  const auto& abs = Gauss16::abscissa();
  const auto& wts = Gauss16::weights();
  const double h = 0.5 / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * h;
    for (std::size_t j = abs.size(); j-- > 0;) {
      r.x.push_back(c - 0.5 * h * abs[j]);
      r.w.push_back(0.5 * h * wts[j]);
    }
    for (std::size_t j = (abs[0] == 0.0 ? 1 : 0); j < abs.size(); ++j) {
      r.x.push_back(c + 0.5 * h * abs[j]);
      r.w.push_back(0.5 * h * wts[j]);
    }
  }
  return r;
}

// 2^d int_{[0,1/2]^d} (1 - chi(|x|)) |x|^{-a} prod cos(2 pi n_i x_i) dx.
double remainder_part(double a, std::span<const int> n) {
  const int d = static_cast<int>(n.size());
  std::vector<Rule> rules;
  std::vector<std::vector<double>> cosines;
  for (int c : n) {
    const int panels = std::max(32, 2 * std::abs(c));
    rules.push_back(half_interval_rule(panels));
    std::vector<double> cs;
    for (double x : rules.back().x) cs.push_back(std::cos(kTwoPi * std::abs(c) * x));
    cosines.push_back(std::move(cs));
  }
  std::vector<std::size_t> idx(d, 0);
  double total = 0.0;
  while (true) {
    double r2 = 0.0, w = 1.0, c = 1.0;
    for (int i = 0; i < d; ++i) {
      const double x = rules[i].x[idx[i]];
      r2 += x * x;
      w *= rules[i].w[idx[i]];
      c *= cosines[i][idx[i]];
    }
    const double r = std::sqrt(r2);
    total += w * c * (1.0 - chi(r)) * std::pow(r, -a);
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == rules[axis].x.size()) idx[axis--] = 0;
    if (axis < 0) break;
  }
  return std::ldexp(total, d);
}

// |n_i| sorted: the coefficient is invariant under signs and permutations.
std::vector<int> canonical(std::span<const int> n) {
  std::vector<int> k;
  for (int c : n) k.push_back(std::abs(c));
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

double power_potential_coefficient(double a, std::span<const int> n) {
  const int d = static_cast<int>(n.size());
  require(d >= 1, "power potential needs d >= 1");
  require(a > 0.0 && a < d, "power potential needs 0 < a < d");
  const std::vector<int> k = canonical(n);
  double n2 = 0.0;
  for (int c : k) n2 += static_cast<double>(c) * c;
  return ball_part(a, d, std::sqrt(n2)) + remainder_part(a, k);
}

CoefficientVector periodized_power_potential(double a, const FrequencyLattice& band) {
  const int d = band.dim();
  require(a > 0.0 && a < d, "power potential needs 0 < a < d");
  std::map<std::vector<int>, double> memo;
  CoefficientVector out(band);
  for (std::size_t i = 0; i < band.size(); ++i) {
    const std::vector<int> k = canonical(band.mode(i));
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, power_potential_coefficient(a, k)).first;
    out.a[i] = it->second;
  }
  return out;
}

}  // namespace strichartz
