#include "strichartz/lab/endpoint.hpp"

#include <cmath>

#include "fft.hpp"
#include "strichartz/errors.hpp"
#include "strichartz/norms/mixed_norm.hpp"
#include "strichartz/norms/schatten.hpp"

namespace strichartz {

int pair_count(long long m1, long long m2, int N) {
  require(m1 != 0, "pair_count needs m1 != 0");
  if (m2 % m1 != 0) return 0;
  const long long q = m2 / m1;
  if ((m1 + q) % 2 != 0) return 0;
  const long long n1 = (m1 + q) / 2;
  const long long n2 = (q - m1) / 2;
  return (std::llabs(n1) <= N && std::llabs(n2) <= N) ? 1 : 0;
}

EndpointReport endpoint_decomposition(const GridFunction& W1, const GridFunction& W2, const ExtensionOperator& op) {
  require(op.lattice().dim() == 1, "endpoint decomposition is one-dimensional");
  const TorusGrid& g = op.grid();
  require(W1.grid == g && W2.grid == g, "weights must live on the extension grid");
  const long long N = op.lattice().cutoff();

  ComplexArray p1 = abs_squared(W1).values;
  ComplexArray p2 = abs_squared(W2).values;
  detail::grid_dft(p1, g, -1);
  detail::grid_dft(p2, g, -1);
  const double w = g.weight();
  auto at = [&](const ComplexArray& c, long long m1, long long m2) {
    return c[static_cast<std::size_t>(detail::wrap(m2, g.gt())) * g.spatial_size() + detail::wrap(m1, g.gx())] * w;
  };

  EndpointReport r;
  r.term_I = static_cast<double>(2 * N + 1) * std::real(at(p1, 0, 0) * at(p2, 0, 0));
  Complex off{};
  for (long long m1 = -2 * N; m1 <= 2 * N; ++m1) {
    if (m1 == 0) continue;
    for (long long m2 = -N * N; m2 <= N * N; ++m2) {
      if (pair_count(m1, m2, static_cast<int>(N)) == 0) continue;
      off += std::conj(at(p1, m1, m2)) * at(p2, m1, m2);
    }
  }
  r.term_II = off.real();

  const std::vector<double> sv = sandwich_singular_values(W1, W2, op);
  for (double s : sv) r.total += s * s;
  const double n1 = mixed_norm(W1, {4.0, 2.0, {}});
  const double n2 = mixed_norm(W2, {4.0, 2.0, {}});
  r.bound = 6.0 * static_cast<double>(N) * n1 * n1 * n2 * n2;
  r.residual = std::abs(r.total - (r.term_I + r.term_II));
  return r;
}

}  // namespace strichartz
