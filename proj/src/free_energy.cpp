#include "bose2d/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bose2d {

namespace {

constexpr double kPi = 3.14159265358979323846;

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double get_const(const std::map<std::string, double>& constants,
                 const std::string& key, double fallback) {
  const auto it = constants.find(key);
  return it == constants.end() ? fallback : it->second;
}

}  // namespace

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::kSubcritical: return "subcritical";
    case Regime::kNearcritical: return "nearcritical";
    case Regime::kSupercritical: return "supercritical";
    case Regime::kGroundstate: return "groundstate";
  }
  return "unknown";
}

CriticalData critical_data(double beta, double rho, double sigma) {
  if (!(beta > 0.0) || !(rho > 0.0)) {
    throw std::domain_error("critical_data: requires beta > 0, rho > 0");
  }
  if (!(sigma > 1.0)) {
    throw std::domain_error("critical_data: requires a^2 rho < 1/e (sigma > 1)");
  }
  CriticalData out;
  out.sigma = sigma;
  out.beta_c = std::log(sigma) / (4.0 * kPi * rho);
  out.rho_s = rho * positive_part(1.0 - out.beta_c / beta);
  const double y = 4.0 * kPi * beta * rho;
  // beta p_c~^2 = [1/sigma - e^{-y}]_+ / (1 - e^{-y}), stable for large y
  out.tilde_pc_sq_beta =
      positive_part(1.0 / sigma - std::exp(-y)) / (-std::expm1(-y));
  return out;
}

CriticalData critical_data(const ThermoPoint& point) {
  point.validate();
  return critical_data(point.beta, point.rho, point.sigma());
}

double correction_term(double beta, double rho, double sigma) {
  const CriticalData crit = critical_data(beta, rho, sigma);
  const double br = positive_part(1.0 - crit.beta_c / beta);
  return (4.0 * kPi * rho * rho / sigma) * (2.0 - br * br);
}

double correction_term(const ThermoPoint& point) {
  point.validate();
  return correction_term(point.beta, point.rho, point.sigma());
}

ErrorBudget error_budget(double sigma, double beta_rho,
                         const std::map<std::string, double>& constants) {
  if (!(beta_rho >= 1.0)) {
    throw std::domain_error("error_budget: requires beta rho >= 1");
  }
  if (!(sigma > std::exp(1.0))) {
    throw std::domain_error("error_budget: requires sigma > e");
  }

  ErrorBudget out;
  const double ln_sigma = std::log(sigma);
  const double ln_br = std::log(beta_rho);
  const double y = 4.0 * kPi * beta_rho;
  const double beta_mu0 = std::log1p(-std::exp(-y));  // beta mu_0 < 0
  const double tilde_pc =
      positive_part(1.0 / sigma - std::exp(-y)) / (-std::expm1(-y));
  const double tilde_tau = -beta_mu0 + tilde_pc;

  // regime thresholds, with equality assigned to the lower regime; the
  // nearcritical window carries a configurable prefactor (default 2) so that
  // the critical point beta_c rho = ln(sigma)/(4 pi) stays inside it at
  // desk-scale sigma, as the asymptotic statement intends
  const double c2 = get_const(constants, "threshold2", 2.0);
  if (y <= ln_sigma - 30.0 * std::log(ln_sigma)) {
    out.regime = Regime::kSubcritical;
  } else if (ln_br <= std::log(c2) + ln_sigma / 59.0) {
    out.regime = Regime::kNearcritical;
  } else if (ln_br <= 233.0 / 580.0 * ln_sigma) {
    out.regime = Regime::kSupercritical;
  } else {
    out.regime = Regime::kGroundstate;
  }

  // beta p_c^2 by regime
  double pc = 0.0;
  switch (out.regime) {
    case Regime::kSubcritical:
      pc = 0.0;
      break;
    case Regime::kNearcritical: {
      // one fixed-point pass on the logarithm, chemical potential dropped
      const double ln_arg = 30.0 * ln_br - ln_sigma - std::log(tilde_tau);
      const double big_log = std::max(ln_arg, 1.0);
      pc = std::exp(30.0 * ln_br - ln_sigma - 28.0 * std::log(big_log));
      break;
    }
    case Regime::kSupercritical:
    case Regime::kGroundstate:
      pc = std::exp((29.0 / 57.0) * (2.0 * ln_br - ln_sigma));
      break;
  }
  pc = std::max(pc, tilde_pc);
  out.pc_sq_beta = pc;

  const double tau = -beta_mu0 + pc;
  const double d = 1.0 + std::cbrt(ln_sigma / beta_rho);

  // parameter bundle in density-1 units
  BudgetParams& p = out.params;
  p.tau = tau;
  p.tilde_tau = tilde_tau;
  p.d = d;
  p.R = std::sqrt(std::pow(beta_rho, 3.0 / 14.0) / std::pow(d, 3.0 / 7.0) /
                  std::pow(tau * sigma, 3.0 / 28.0));
  p.s = std::cbrt(beta_rho * p.R / ln_sigma);
  const double delta = get_const(constants, "delta", 1.0);
  p.kappa = (1.0 + delta) * p.s * p.s * ln_sigma / beta_rho;
  p.b = std::pow(sigma / tau, 0.25);
  p.phi = get_const(constants, "phi", std::sqrt(beta_rho) / sigma);
  p.C = get_const(constants, "C", std::sqrt(sigma));
  p.epsilon = get_const(constants, "epsilon", 1.0 / p.s);
  p.D = get_const(constants, "D", 1.0);

  // the three displayed error terms (all nonnegative since tau >= tilde_tau)
  out.A1 = std::log(tau / tilde_tau) / beta_rho;
  out.A2 = sigma * pc * pc / (beta_rho * beta_rho);
  out.A3 = std::pow(d, 6.0 / 7.0) *
           std::pow(beta_rho * beta_rho / (tau * sigma), 1.0 / 28.0);

  const double z1 = get_const(constants, "Z1", 1.0) * out.A1;
  const double z2 = get_const(constants, "Z2", 1.0) * out.A2;
  const double z3 = get_const(constants, "Z3", 1.0) * out.A3;
  const double gs_row =
      out.regime == Regime::kGroundstate
          ? get_const(constants, "Z4", 1.0) *
                (std::pow(sigma, 0.8) / (beta_rho * beta_rho) +
                 std::pow(sigma, -0.2) +
                 std::pow(sigma, 0.1) * std::sqrt(ln_sigma) /
                     std::sqrt(beta_rho))
          : 0.0;
  const double extra = get_const(constants, "extra_o1", 0.0);
  out.Z_terms = {{"Z1", z1}, {"Z2", z2}, {"Z3", z3}, {"Z4", gs_row},
                 {"Z5", extra}};

  const double row =
      out.regime == Regime::kGroundstate ? gs_row : z1 + z2 + z3;
  out.o1_bound = get_const(constants, "const", 1.0) * (row + extra);
  // beyond beta rho ~ sigma^{1/2} the interaction is comparable to f0 and the
  // perturbative bound carries no information
  if (2.0 * ln_br >= ln_sigma) {
    out.o1_bound = std::max(out.o1_bound, 1.0);
  }
  out.vacuous = out.o1_bound >= 1.0;
  return out;
}

std::pair<double, ErrorBudget> lower_bound(
    double beta, double rho, double sigma,
    const std::map<std::string, double>& constants) {
  ErrorBudget budget = error_budget(sigma, beta * rho, constants);
  const double ideal = rho * rho * f0_scaled(beta * rho);
  const double f_lower =
      ideal + correction_term(beta, rho, sigma) * (1.0 - budget.o1_bound);
  return {f_lower, budget};
}

std::pair<double, ErrorBudget> lower_bound(
    const ThermoPoint& point, const std::map<std::string, double>& constants) {
  point.validate();
  return lower_bound(point.beta, point.rho, point.sigma(), constants);
}

std::pair<double, double> variational_min(double beta, double rho,
                                          double sigma) {
  if (!(beta > 0.0) || !(rho > 0.0)) {
    throw std::domain_error("variational_min: requires beta > 0, rho > 0");
  }
  if (!(sigma > 1.0)) {
    throw std::domain_error("variational_min: requires sigma > 1");
  }
  // Minimize the shifted objective G = F + pi/(24 beta^2): subtracting the
  // rho0-independent deep-quantum bulk of f0 keeps the sigma^{-1}-scale
  // interaction signal above rounding noise at extreme diluteness.
  auto F = [&](double rho0) {
    const double rest = rho - rho0;
    const double ideal = rest > 0.0
                             ? rest * rest * f0_scaled_excess(beta * rest)
                             : kPi / (24.0 * beta * beta);
    return ideal + (4.0 * kPi / sigma) * (2.0 * rho * rho - rho0 * rho0);
  };
  const int n = 10000;
  int best = 0;
  double best_val = F(0.0);
  for (int i = 1; i <= n; ++i) {
    const double val = F(rho * i / n);
    if (val < best_val) {
      best_val = val;
      best = i;
    }
  }
  // golden-section refinement inside the bracketing neighbors
  double lo = rho * std::max(best - 1, 0) / n;
  double hi = rho * std::min(best + 1, n) / n;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = F(x1), f2 = F(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * rho; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = F(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = F(x2);
    }
  }
  const double xm = 0.5 * (lo + hi);
  const double rest = rho - xm;
  const double value = (rest > 0.0 ? rest * rest * f0_scaled(beta * rest) : 0.0) +
                       (4.0 * kPi / sigma) * (2.0 * rho * rho - xm * xm);
  return {xm, value};
}

std::pair<double, double> variational_min(const ThermoPoint& point) {
  point.validate();
  return variational_min(point.beta, point.rho, point.sigma());
}

}  // namespace bose2d
