#pragma once

#include <optional>
#include <utility>

#include "bose2d/radial_potential.hpp"
#include "bose2d/scattering.hpp"

namespace bose2d {

enum class SurgeryCase {
  kRangeCutoff,    // truncation of the range
  kCapCase1Tail,   // keep only the tail beyond s
  kCapCase2Shave,  // fill a capped shell just inside the divergence radius t
  kCapNoop,        // the integral budget already holds
};

struct SurgeryReport {
  double original_a = 0.0;
  double modified_a = 0.0;
  // the certified inequality: bound_lhs >= bound_rhs
  double bound_lhs = 0.0;
  double bound_rhs = 0.0;
  SurgeryCase construction_case = SurgeryCase::kCapNoop;
  double phi = 0.0;
  double delta = 0.0;
  double s_or_t = 0.0;  // tail start s (case 1) or divergence radius t (case 2)
  std::optional<double> tau;  // shaving cap (case 2 only)
  double integral_2d = 0.0;   // int_{R^2} v_tilde = 2 pi int r v_tilde dr
  double R = 0.0;

  bool holds(double slack = 0.0) const { return bound_lhs >= bound_rhs - slack; }
};

// Range cutoff: returns v * theta(R0_new - r) plus a report certifying
//   1/ln(R/a_cut) >= [ ln(R/a) + (1/4pi) int_{|x|>R0_new} v ln^2(|x|/a_cut) ]^{-1}.
// Throws std::invalid_argument on bad radii and std::runtime_error if the
// truncated potential is identically zero (degenerate logarithms).
std::pair<RadialPotential, SurgeryReport> cutoff_range(const RadialPotential& v,
                                                       double R0_new, double R);

// Integral capping: returns v_tilde with 0 <= v_tilde <= v and
// int v_tilde <= 4 pi phi, via the tail construction (case 1) or the capped
// shell at the divergence radius (case 2); no-op when the budget already
// holds.  The report certifies
//   1/ln(R/a_tilde) >= (1/ln(R/a)) (1 - 1/sqrt(phi ln(R/a))
//                                     + ln(1-delta)/ln(R/a)).
std::pair<RadialPotential, SurgeryReport> cap_integral(const RadialPotential& v,
                                                       double phi, double delta,
                                                       double R);

// The budget-optimal shaving width delta = sqrt(ln(R/a)/phi), clamped to
// (0, 1).
double optimal_delta(double phi, double log_R_over_a);

}  // namespace bose2d
