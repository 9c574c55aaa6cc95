#include <cmath>
#include <vector>

#include "strichartz/errors.hpp"
#include "strichartz/hartree/hartree.hpp"

namespace strichartz {

PicardResult picard_iterate(const DensityMatrix& gamma0, double T, double a, int iters, double dt, double coupling) {
  require(iters >= 1, "picard needs at least one iteration");
  require(std::isfinite(T) && T >= 0.0 && T <= 1.0, "picard horizon must lie in [0, 1]");
  require(std::isfinite(dt) && dt > 0.0, "picard time step must be positive");
  const FrequencyLattice& L = gamma0.lattice();
  const HartreeModel model(L.dim(), L.cutoff(), a, coupling);
  const long long M = std::llround(T / dt);
  require(std::abs(static_cast<double>(M) * dt - T) <= 1e-9 * std::max(1.0, T), "T must be a multiple of dt");

  const auto n = static_cast<Eigen::Index>(L.size());
  // Free-flow phases e^{2 pi i t |n|^2} at each time node.
  auto phases = [&](long long i) {
    Eigen::VectorXcd p(n);
    for (Eigen::Index r = 0; r < n; ++r) {
      double ph = static_cast<double>(i) * dt * static_cast<double>(L.norm2(static_cast<std::size_t>(r)));
      ph -= std::floor(ph);
      p[r] = std::polar(1.0, kTwoPi * ph);
    }
    return p;
  };
  std::vector<Eigen::VectorXcd> U;
  for (long long i = 0; i <= M; ++i) U.push_back(phases(i));

  const Eigen::MatrixXcd G0 = gamma0.matrix();
  auto conj_by = [&](const Eigen::VectorXcd& u, const Eigen::MatrixXcd& X) -> Eigen::MatrixXcd {
    return u.asDiagonal() * X * u.conjugate().asDiagonal();
  };

  std::vector<Eigen::MatrixXcd> cur;
  for (long long i = 0; i <= M; ++i) cur.push_back(conj_by(U[i], G0));

  PicardResult out{DensityMatrix(L), {}, {}, 0};
  int growth = 0;
  for (int k = 0; k < iters; ++k) {
    // Interaction picture: B(s) = U(s)^* [A(s), gamma(s)] U(s).
    std::vector<Eigen::MatrixXcd> next(cur.size());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd prevB;
    double dist = 0.0;
    for (long long i = 0; i <= M; ++i) {
      const Eigen::MatrixXcd A = model.potential_matrix(cur[i]);
      const Eigen::MatrixXcd B = conj_by(U[i].conjugate(), A * cur[i] - cur[i] * A);
      if (i > 0) acc += 0.5 * dt * (prevB + B);
      prevB = B;
      next[i] = conj_by(U[i], G0 - Complex(0.0, 1.0) * acc);
      dist = std::max(dist, (next[i] - cur[i]).norm());
    }
    if (!out.distances.empty() && dist > out.distances.back() && dist > 1e-12) {
      if (++growth >= 2) throw NumericalGuard("picard divergence guard: iterate distance grew twice in a row");
    } else {
      growth = 0;
    }
    out.distances.push_back(dist);
    cur = std::move(next);
  }
  out.matrix = cur.back();
  out.gamma = DensityMatrix::from_matrix(L, out.matrix, 1e-12);
  out.rank = out.gamma.rank();
  return out;
}

}  // namespace strichartz
