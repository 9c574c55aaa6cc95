#pragma once

#include "strichartz/extension/extension.hpp"

namespace strichartz {

// 1 iff (m1 + m2/m1)/2 and (-m1 + m2/m1)/2 are integers in [-N, N].
int pair_count(long long m1, long long m2, int N);

struct EndpointReport {
  double total = 0.0;    // |W1 E E^* W2|_{C^2}^2 from the singular values
  double term_I = 0.0;   // diagonal contribution
  double term_II = 0.0;  // off-diagonal contribution
  double bound = 0.0;    // 6N |W1|^2_{L^4 L^2} |W2|^2_{L^4 L^2}
  double residual = 0.0; // |total - (I + II)|
};

// One-dimensional expansion of the Hilbert-Schmidt norm into diagonal and
// off-diagonal Fourier sums.
EndpointReport endpoint_decomposition(const GridFunction& W1, const GridFunction& W2, const ExtensionOperator& op);

}  // namespace strichartz
