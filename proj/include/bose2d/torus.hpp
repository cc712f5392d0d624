#pragma once

#include <array>
#include <complex>
#include <vector>

namespace bose2d {

// Square torus [0,L)^2 sampled on an N x N grid (N a power of two).
struct TorusGrid {
  double L = 1.0;
  int N = 16;

  void validate() const;  // throws std::invalid_argument

  double dx() const { return L / N; }
  int size() const { return N * N; }

  // node coordinate of index k in {0..N-1}
  double coord(int k) const { return L * k / N; }

  // signed momentum of FFT index k: (2 pi / L) * (k <= N/2 ? k : k - N)
  double momentum(int k) const;

  // exact torus metric d(x,y) = min_k |x - y - kL| (minimal image)
  double dist(double x1, double x2, double y1, double y2) const;

  // minimal-image displacement component in [-L/2, L/2)
  double wrap(double d) const;
};

// A Hermitian operator of the form  multiplier(p) + diag(x)  on the grid:
// the multiplier acts in Fourier space, the diagonal in position space.
struct SpectralOperator {
  TorusGrid grid;
  std::vector<double> multiplier;  // length N^2, indexed by FFT mode
  std::vector<double> diagonal;    // length N^2, indexed by position

  // y = A x (real input/output; the operator is real-symmetric)
  void apply(const std::vector<double>& x, std::vector<double>* y,
             bool parallel = true) const;

  // infinity-norm style upper bound max|multiplier| + max|diagonal|
  double norm_upper_bound() const;
};

}  // namespace bose2d
