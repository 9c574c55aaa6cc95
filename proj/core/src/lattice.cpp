#include "strichartz/spectral/lattice.hpp"

#include <cmath>
#include <string>

#include "strichartz/errors.hpp"
#include "strichartz/reduction.hpp"

namespace strichartz {

FrequencyLattice::FrequencyLattice(int d, int N) : d_(d), N_(N) {
  require(d >= 1, "lattice dimension must be >= 1");
  require(N >= 1, "lattice cutoff must be >= 1");
  const std::size_t side = 2 * static_cast<std::size_t>(N) + 1;
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) {
    require(count <= (std::size_t{1} << 40) / side, "lattice too large");
    count *= side;
  }
  std::vector<int> coords(count * static_cast<std::size_t>(d));
  std::vector<long long> n2(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rem = idx;
    long long s = 0;
    for (int axis = d - 1; axis >= 0; --axis) {
      const int c = static_cast<int>(rem % side) - N;
      rem /= side;
      coords[idx * d + axis] = c;
      s += static_cast<long long>(c) * c;
    }
    n2[idx] = s;
  }
  coords_ = std::make_shared<const std::vector<int>>(std::move(coords));
  norm2_ = std::make_shared<const std::vector<long long>>(std::move(n2));
}

std::optional<std::size_t> FrequencyLattice::index_of(std::span<const int> n) const {
  if (n.size() != static_cast<std::size_t>(d_)) return std::nullopt;
  const std::size_t side = 2 * static_cast<std::size_t>(N_) + 1;
  std::size_t idx = 0;
  for (int c : n) {
    if (c < -N_ || c > N_) return std::nullopt;
    idx = idx * side + static_cast<std::size_t>(c + N_);
  }
  return idx;
}

FrequencyLattice build_lattice(int d, int N) { return FrequencyLattice(d, N); }

CoefficientVector::CoefficientVector(FrequencyLattice lat)
    : lattice(std::move(lat)), a(lattice.size(), Complex{}) {}

CoefficientVector::CoefficientVector(FrequencyLattice lat, ComplexArray coeffs)
    : lattice(std::move(lat)), a(std::move(coeffs)) {
  require(a.size() == lattice.size(),
          "coefficient length " + std::to_string(a.size()) + " does not match lattice size " +
              std::to_string(lattice.size()));
}

CoefficientVector CoefficientVector::basis(const FrequencyLattice& lat, std::span<const int> n) {
  const auto idx = lat.index_of(n);
  require(idx.has_value(), "basis mode outside the lattice");
  CoefficientVector v(lat);
  v.a[*idx] = 1.0;
  return v;
}

double l2_norm(const CoefficientVector& v) {
  return std::sqrt(pairwise_reduce(0, v.size(), [&](std::size_t i) { return std::norm(v.a[i]); }));
}

Complex inner(const CoefficientVector& u, const CoefficientVector& v) {
  require(u.lattice == v.lattice, "inner product across different lattices");
  return pairwise_reduce(0, u.size(), [&](std::size_t i) { return std::conj(u.a[i]) * v.a[i]; });
}

}  // namespace strichartz
