#include "bose2d/ideal_gas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bose2d/special_fns.hpp"

namespace bose2d {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

void ThermoPoint::validate() const {
  if (!(beta > 0.0)) throw std::domain_error("ThermoPoint: beta must be > 0");
  if (!(rho > 0.0)) throw std::domain_error("ThermoPoint: rho must be > 0");
  if (a.has_value()) {
    if (!(*a >= 0.0)) throw std::domain_error("ThermoPoint: a must be >= 0");
    if (!(*a * *a * rho < 1.0)) {
      throw std::domain_error("ThermoPoint: diluteness a^2 rho < 1 violated");
    }
  }
}

double ThermoPoint::sigma() const {
  if (!a.has_value()) {
    throw std::domain_error("ThermoPoint: sigma needs a scattering length");
  }
  validate();
  return std::abs(std::log(*a * *a * rho));
}

double mu0(const ThermoPoint& point) {
  point.validate();
  // log1p keeps precision when e^{-4 pi beta rho} is tiny.
  return std::log1p(-std::exp(-kFourPi * point.beta * point.rho)) / point.beta;
}

double f0_scaled(double x) {
  if (!(x >= 0.0)) throw std::domain_error("f0_scaled: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double u = std::exp(-kFourPi * x);  // in (0,1)
  // f0(x,1) = ln(1-u)/x - Li2(1-u)/(4 pi x^2); evaluate Li2 at 1-u without
  // forming the rounded difference.
  return std::log1p(-u) / x - li2_one_minus(u) / (kFourPi * x * x);
}

double f0_scaled_excess(double x) {
  if (!(x > 0.0)) throw std::domain_error("f0_scaled_excess: x must be > 0");
  const double u = std::exp(-kFourPi * x);
  // pi^2/6 - Li2(1-u) = ln(u) ln(1-u) + Li2(u) by the reflection identity;
  // every term here is exponentially small for large x, so the shift of
  // f0_scaled by pi/(24 x^2) never cancels in floating point.
  const double head = std::log1p(-u) / x;
  const double tail = ((-kFourPi * x) * std::log1p(-u) + li2(u)) /
                      (kFourPi * x * x);
  return head + tail;
}

double f0(const ThermoPoint& point) {
  point.validate();
  return point.rho * point.rho * f0_scaled(point.beta * point.rho);
}

double density_from_mu(double beta, double mu) {
  if (!(beta > 0.0)) throw std::domain_error("density_from_mu: beta must be > 0");
  if (mu > 0.0) throw std::domain_error("density_from_mu: mu must be <= 0");
  if (mu == 0.0) throw std::domain_error("density_from_mu: diverges at mu = 0");
  // 1 - e^{beta mu} = -expm1(beta mu), exact for tiny |beta mu|.
  return -std::log(-std::expm1(beta * mu)) / (kFourPi * beta);
}

}  // namespace bose2d
