#include "bose2d/special_fns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bose2d {
namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Series sum_{n>=1} z^n / n^2, valid (and fast) for |z| <= 0.5.
double li2_series(double z) {
  double term = z;
  double sum = z;
  for (int n = 2; n < 200; ++n) {
    term *= z;
    const double add = term / (static_cast<double>(n) * n);
    sum += add;
    if (std::abs(add) < 1e-17) break;
  }
  return sum;
}

}  // namespace

double li2(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("li2: argument must lie in [0,1]");
  }
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kPi2Over6;
  if (z <= 0.5) return li2_series(z);
  // Reflection: Li2(z) + Li2(1-z) = pi^2/6 - ln(z) ln(1-z).
  const double u = 1.0 - z;
  return kPi2Over6 - std::log(z) * std::log(u) - li2_series(u);
}

double li2_one_minus(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error("li2_one_minus: argument must lie in [0,1]");
  }
  if (u == 0.0) return kPi2Over6;
  if (u == 1.0) return 0.0;
  if (u >= 0.5) return li2_series(1.0 - u);
  // Reflection with ln(1-u) computed via log1p so tiny u keeps full precision.
  return kPi2Over6 - std::log1p(-u) * std::log(u) - li2_series(u);
}

double checked_log(double x) {
  if (!(x > 0.0)) throw std::domain_error("checked_log: argument must be > 0");
  return std::log(x);
}

}  // namespace bose2d
