#pragma once

#include <stdexcept>
#include <string>

namespace strichartz {

// Bad caller input: wrong shape, out-of-range parameter, mismatched lattice.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical safeguard tripped (eigensolver failure, blow-up, divergence).
class NumericalGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace strichartz
