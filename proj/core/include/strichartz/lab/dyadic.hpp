#pragma once

#include <vector>

#include "strichartz/extension/extension.hpp"

namespace strichartz {

struct DyadicRow {
  int j = 0;
  double t_lo = 0.0;  // shell is t_lo <= |t| < t_hi
  double t_hi = 0.0;
  double norm = 0.0;
  std::size_t count = 0;  // ordered time-sample pairs in the shell
  // At least four distinct time lags and t_hi <= 1/(2N); only these rows
  // enter the fit, the others are dominated by grid spacing or the window edge.
  bool resolved = false;
};

struct DyadicProfile {
  std::vector<DyadicRow> rows;  // j descending
  double slope = 0.0;           // fit of log norm against log 2^j over resolved rows, NaN if < 2
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Shell exponents j from the top (shell reaching 1/N, clipped there) down to
// the shell holding one time step.
std::vector<int> dyadic_shells(int N, int gt);

// True when the centered time-index difference dk falls in shell j.
bool in_dyadic_shell(long long dk, int j, int N, int gt);

// K_N multiplied by the indicator of shell j in t.
GridFunction dyadic_shell_kernel(const ExtensionOperator& op, int j);

// Schatten-alpha norms of F -> W1 1_I (K_{N,j} * (1_I W2 F)) with the window
// I = {|t| <= 1/(2N)}. alpha = 2 is summed from the entries; other alpha use a
// dense SVD and are limited to small windows.
DyadicProfile dyadic_schatten_profile(const GridFunction& W1, const GridFunction& W2, double alpha,
                                      const ExtensionOperator& op);

}  // namespace strichartz
