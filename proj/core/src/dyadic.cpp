#include "strichartz/lab/dyadic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "fft.hpp"
#include "ols.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/norms/schatten.hpp"

namespace strichartz {
namespace {

int top_shell(int N) {
  int j = 0;
  while ((2LL << (-j)) <= N) --j;  // j = -floor(log2 N)
  return j;
}

long long centered(long long k, long long gt) {
  long long c = k % gt;
  if (c < 0) c += gt;
  if (2 * c >= gt) c -= gt;
  return c;
}

}  // namespace

bool in_dyadic_shell(long long dk, int j, int N, int gt) {
  const long long a = std::llabs(dk);
  if (a == 0 || a * N >= gt) return false;
  // 2^{j-1} gt <= a < 2^j gt with j <= 0.
  const int e = -j;
  const bool above = static_cast<long long>(gt) <= (a << (e + 1));
  const bool below = (a << e) < static_cast<long long>(gt);
  return above && below;
}

std::vector<int> dyadic_shells(int N, int gt) {
  require(N >= 1 && gt >= 1, "dyadic shells need N >= 1 and gt >= 1");
  require(static_cast<long long>(gt) > N, "time grid too coarse for shells below 1/N");
  std::vector<int> js;
  for (int j = top_shell(N); j > -60; --j) {
    js.push_back(j);
    if (in_dyadic_shell(1, j, N, gt)) return js;
  }
  throw InvalidArgument("empty dyadic shell range");
}

GridFunction dyadic_shell_kernel(const ExtensionOperator& op, int j) {
  GridFunction K = op.kernel();
  const TorusGrid& g = op.grid();
  const int N = op.lattice().cutoff();
  const std::size_t S = g.spatial_size();
  for (int k = 0; k < g.gt(); ++k) {
    if (in_dyadic_shell(centered(k, g.gt()), j, N, g.gt())) continue;
    for (std::size_t s = 0; s < S; ++s) K.values[static_cast<std::size_t>(k) * S + s] = 0.0;
  }
  return K;
}

DyadicProfile dyadic_schatten_profile(const GridFunction& W1, const GridFunction& W2, double alpha,
                                      const ExtensionOperator& op) {
  require(alpha >= 1.0, "Schatten exponent must be >= 1");
  const TorusGrid& g = op.grid();
  require(W1.grid == g && W2.grid == g, "weights must live on the extension grid");
  const int N = op.lattice().cutoff();
  const int d = g.dim();
  const long long gt = g.gt();
  const std::vector<int> js = dyadic_shells(N, g.gt());
  const int jtop = js.front();

  // Time samples in the window |t| <= 1/(2N), as centered indices.
  std::vector<long long> ts;
  for (long long k = 0; k < gt; ++k) {
    const long long c = centered(k, gt);
    if (2 * std::llabs(c) * N <= gt) ts.push_back(c);
  }
  const std::size_t S = g.spatial_size();
  const GridFunction K = op.kernel();
  const double w = g.weight();

  // Flat index of the spatial difference x_s - x_r.
  std::vector<std::size_t> diff(S * S);
  {
    std::vector<int> a(d), b(d);
    for (std::size_t s = 0; s < S; ++s) {
      g.spatial_index(s, a);
      for (std::size_t r = 0; r < S; ++r) {
        g.spatial_index(r, b);
        std::size_t idx = 0;
        for (int ax = 0; ax < d; ++ax) idx = idx * g.gx() + detail::wrap(a[ax] - b[ax], g.gx());
        diff[s * S + r] = idx;
      }
    }
  }
  auto shell_of = [&](long long dk) {
    for (std::size_t i = 0; i < js.size(); ++i) {
      if (in_dyadic_shell(dk, js[i], N, g.gt())) return static_cast<int>(i);
    }
    return -1;
  };
  auto sample = [&](const GridFunction& F, long long c, std::size_t s) {
    return F.values[static_cast<std::size_t>(detail::wrap(c, g.gt())) * S + s];
  };

  std::vector<double> sums(js.size(), 0.0);
  std::vector<std::size_t> counts(js.size(), 0);
  const bool frobenius = alpha == 2.0;
  const std::size_t dim = ts.size() * S;
  if (!frobenius) {
    require(dim <= 2048, "dense Schatten route limited to 2048 windowed samples, got " + std::to_string(dim));
  }
  std::vector<Eigen::MatrixXcd> dense;
  if (!frobenius) dense.assign(js.size(), Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));

  for (std::size_t a = 0; a < ts.size(); ++a) {
    for (std::size_t b = 0; b < ts.size(); ++b) {
      const long long dk = ts[a] - ts[b];
      const int sh = shell_of(dk);
      if (sh < 0) continue;
      ++counts[sh];
      const std::size_t krow = static_cast<std::size_t>(detail::wrap(dk, g.gt())) * S;
      for (std::size_t s = 0; s < S; ++s) {
        const Complex u = sample(W1, ts[a], s);
        for (std::size_t r = 0; r < S; ++r) {
          const Complex entry = w * u * K.values[krow + diff[s * S + r]] * sample(W2, ts[b], r);
          if (frobenius) {
            sums[sh] += std::norm(entry);
          } else {
            dense[sh](static_cast<Eigen::Index>(a * S + s), static_cast<Eigen::Index>(b * S + r)) = entry;
          }
        }
      }
    }
  }

  DyadicProfile prof;
  prof.slope = prof.intercept = prof.max_residual = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x, y;
  for (std::size_t i = 0; i < js.size(); ++i) {
    DyadicRow row;
    row.j = js[i];
    row.t_lo = std::ldexp(1.0, js[i] - 1);
    row.t_hi = js[i] == jtop ? std::min(std::ldexp(1.0, js[i]), 1.0 / N) : std::ldexp(1.0, js[i]);
    row.count = counts[i];
    std::size_t lags = 0;
    for (long long dk = 1; dk * N < gt; ++dk) lags += in_dyadic_shell(dk, js[i], N, g.gt()) ? 1 : 0;
    row.resolved = lags >= 4 && 2.0 * row.t_hi * N <= 1.0;
    if (frobenius) {
      row.norm = std::sqrt(sums[i]);
    } else {
      Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense[i]);
      const Eigen::VectorXd sv = svd.singularValues();
      row.norm = schatten_norm(std::span<const double>(sv.data(), static_cast<std::size_t>(sv.size())), alpha);
    }
    if (row.resolved && row.norm > 0.0) {
      x.push_back(js[i] * std::log(2.0));
      y.push_back(std::log(row.norm));
    }
    prof.rows.push_back(row);
  }
  if (x.size() >= 2) {
    const detail::Line l = detail::ols(x, y);
    prof.slope = l.slope;
    prof.intercept = l.intercept;
    prof.max_residual = l.max_residual;
  }
  return prof;
}

}  // namespace strichartz
