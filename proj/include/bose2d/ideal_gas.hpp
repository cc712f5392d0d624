#pragma once

#include <optional>

namespace bose2d {

// A thermodynamic state point of the 2D gas.  The scattering length is
// optional: ideal-gas queries do not need it.
struct ThermoPoint {
  double beta = 1.0;   // inverse temperature
  double rho = 1.0;    // density
  std::optional<double> a;  // scattering length (diluteness a^2 rho < 1)

  // Validates beta > 0, rho > 0 and (if a is set) a^2 rho < 1;
  // throws std::domain_error otherwise.
  void validate() const;

  // sigma = |ln a^2 rho|; requires a.  Throws if absent.
  double sigma() const;
};

// Chemical potential of the ideal 2D Bose gas at (beta, rho):
//   mu0 = (1/beta) ln(1 - e^{-4 pi beta rho})  < 0.
double mu0(const ThermoPoint& point);

// Free energy per unit area of the ideal 2D Bose gas:
//   f0 = rho^2 [ (1/x) ln(1-e^{-4 pi x}) - Li2(1-e^{-4 pi x})/(4 pi x^2) ],
// with x = beta rho.  Always negative; f0(beta, 0) = 0.
double f0(const ThermoPoint& point);

// Dimensionless form f0(x, 1) (density 1, inverse temperature x); the scaling
// relation reads f0(beta, rho) = rho^2 f0_scaled(beta rho).
double f0_scaled(double x);

// f0_scaled(x) + pi/(24 x^2), evaluated without cancellation.  This isolates
// the x-dependent remainder of the free energy beyond its deep-quantum bulk
// -pi/(24 x^2); it decays like e^{-4 pi x} and stays accurate there.
double f0_scaled_excess(double x);

// Density at chemical potential mu <= 0:
//   rho = -(1/(4 pi beta)) ln(1 - e^{beta mu}).
// Inverse of mu0; throws std::domain_error if mu > 0.
double density_from_mu(double beta, double mu);

}  // namespace bose2d
