#pragma once

#include "bose2d/torus.hpp"

namespace bose2d {

struct LanczosResult {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double residual_min = 0.0;  // ||A v - lambda_min v|| for the Ritz pair
  int iterations = 0;
  bool converged = false;
};

// Extreme eigenvalues of a real-symmetric spectral operator by Lanczos with
// full reorthogonalization and a deterministic start vector.  Throws
// std::runtime_error if the extreme Ritz values fail to settle within
// max_iter iterations.
LanczosResult lanczos_extreme(const SpectralOperator& op, int max_iter = 400,
                              double tol = 1e-10, bool parallel = true);

}  // namespace bose2d
