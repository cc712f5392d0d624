#pragma once

#include <map>
#include <string>
#include <utility>

#include "bose2d/ideal_gas.hpp"

namespace bose2d {

// Critical scales of the dilute 2D gas at a state point.
struct CriticalData {
  double beta_c = 0.0;            // ln(sigma) / (4 pi rho)
  double rho_s = 0.0;             // rho [1 - beta_c/beta]_+
  double tilde_pc_sq_beta = 0.0;  // beta tilde{p}_c^2 (dimensionless)
  double sigma = 0.0;             // |ln a^2 rho|
};

enum class Regime { kSubcritical, kNearcritical, kSupercritical, kGroundstate };

// Dimensionless parameter bundle of the error optimization (density set to 1).
struct BudgetParams {
  double R = 0.0;
  double s = 0.0;
  double kappa = 0.0;
  double b = 0.0;
  double phi = 0.0;
  double C = 0.0;
  double epsilon = 0.0;
  double D = 0.0;
  double tau = 0.0;
  double tilde_tau = 0.0;
  double d = 0.0;
};

struct ErrorBudget {
  Regime regime = Regime::kSubcritical;
  double pc_sq_beta = 0.0;  // beta p_c^2
  BudgetParams params;
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;
  std::map<std::string, double> Z_terms;  // per-term diagnostics
  double o1_bound = 0.0;
  bool vacuous = false;  // o1_bound >= 1: the bound carries no information
};

const char* regime_name(Regime regime);

// Critical temperature, superfluid density and the condensation threshold
// momentum.  Requires the scattering length (sigma > 1).  The (beta, rho,
// sigma) overloads exist because sigma beyond ~1400 cannot be expressed
// through a double-valued scattering length (a = e^{-sigma/2} underflows).
CriticalData critical_data(const ThermoPoint& point);
CriticalData critical_data(double beta, double rho, double sigma);

// The interaction correction (4 pi rho^2 / sigma)(2 - [1 - beta_c/beta]_+^2),
// always between 4 pi rho^2/sigma and 8 pi rho^2/sigma.
double correction_term(const ThermoPoint& point);
double correction_term(double beta, double rho, double sigma);

// Regime selection and the explicit o(1) error rate at (sigma, beta rho).
// Recognized constants: "const" (overall multiplier, default 1), "phi", "C",
// "epsilon", "D", "delta" (parameter presets), "Z1".."Z5" (per-term
// multipliers, default 1), "extra_o1" (additive input for the finite-range
// reduction cost, default 0).  Requires beta_rho >= 1 and sigma > e.
ErrorBudget error_budget(double sigma, double beta_rho,
                         const std::map<std::string, double>& constants = {});

// Two-term lower bound f0 + correction (1 - o1_bound) with its budget.
std::pair<double, ErrorBudget> lower_bound(
    const ThermoPoint& point,
    const std::map<std::string, double>& constants = {});
std::pair<double, ErrorBudget> lower_bound(
    double beta, double rho, double sigma,
    const std::map<std::string, double>& constants = {});

// Minimizes f0(beta, rho - rho0) + (4 pi/sigma)(2 rho^2 - rho0^2) over
// rho0 in [0, rho]; returns (minimizer, value).  The minimizer approaches the
// superfluid density as sigma grows.
std::pair<double, double> variational_min(const ThermoPoint& point);
std::pair<double, double> variational_min(double beta, double rho,
                                          double sigma);

}  // namespace bose2d
