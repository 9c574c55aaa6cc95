#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "strichartz/types.hpp"

namespace strichartz {

// The modes Z^d cap [-N, N]^d in lexicographic order (first coordinate
// slowest). Copies share the enumeration.
class FrequencyLattice {
 public:
  FrequencyLattice(int d, int N);

  int dim() const { return d_; }
  int cutoff() const { return N_; }
  std::size_t size() const { return norm2_->size(); }

  std::span<const int> mode(std::size_t i) const {
    return {coords_->data() + i * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
  }
  // |n|^2 of mode i.
  long long norm2(std::size_t i) const { return (*norm2_)[i]; }

  // Position of n in the enumeration, or nothing if n lies outside the box.
  std::optional<std::size_t> index_of(std::span<const int> n) const;

  bool contains(std::span<const int> n) const { return index_of(n).has_value(); }

  friend bool operator==(const FrequencyLattice& a, const FrequencyLattice& b) {
    return a.d_ == b.d_ && a.N_ == b.N_;
  }

 private:
  int d_;
  int N_;
  std::shared_ptr<const std::vector<int>> coords_;
  std::shared_ptr<const std::vector<long long>> norm2_;
};

FrequencyLattice build_lattice(int d, int N);

// Fourier coefficients aligned with a lattice.
struct CoefficientVector {
  FrequencyLattice lattice;
  ComplexArray a;

  explicit CoefficientVector(FrequencyLattice lat);
  CoefficientVector(FrequencyLattice lat, ComplexArray coeffs);

  std::size_t size() const { return a.size(); }
  Complex& operator[](std::size_t i) { return a[i]; }
  const Complex& operator[](std::size_t i) const { return a[i]; }

  // Indicator of a single mode.
  static CoefficientVector basis(const FrequencyLattice& lat, std::span<const int> n);
};

double l2_norm(const CoefficientVector& v);
Complex inner(const CoefficientVector& u, const CoefficientVector& v);  // sum conj(u) v

}  // namespace strichartz
