#include "bose2d/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bose2d/kernels.hpp"

namespace bose2d {

void TorusGrid::validate() const {
  if (!(L > 0.0)) throw std::invalid_argument("TorusGrid: L must be > 0");
  if (N < 16 || (N & (N - 1)) != 0) {
    throw std::invalid_argument("TorusGrid: N must be a power of two >= 16");
  }
}

double TorusGrid::momentum(int k) const {
  const int s = k <= N / 2 ? k : k - N;
  return 2.0 * std::numbers::pi * s / L;
}

double TorusGrid::wrap(double d) const {
  d = std::fmod(d, L);
  if (d < -0.5 * L) d += L;
  if (d >= 0.5 * L) d -= L;
  return d;
}

double TorusGrid::dist(double x1, double x2, double y1, double y2) const {
  const double dx1 = wrap(x1 - y1);
  const double dx2 = wrap(x2 - y2);
  return std::hypot(dx1, dx2);
}

void SpectralOperator::apply(const std::vector<double>& x,
                             std::vector<double>* y, bool parallel) const {
  const int n = grid.size();
  std::vector<std::complex<double>> buf(n);
  for (int i = 0; i < n; ++i) buf[i] = x[i];
  kernels::fft2d(buf.data(), grid.N, false, parallel);
  for (int i = 0; i < n; ++i) buf[i] *= multiplier[i];
  kernels::fft2d(buf.data(), grid.N, true, parallel);
  y->resize(n);
  for (int i = 0; i < n; ++i) {
    (*y)[i] = buf[i].real() + diagonal[i] * x[i];
  }
}

double SpectralOperator::norm_upper_bound() const {
  double m = 0.0, d = 0.0;
  for (double v : multiplier) m = std::max(m, std::abs(v));
  for (double v : diagonal) d = std::max(d, std::abs(v));
  return m + d;
}

}  // namespace bose2d
