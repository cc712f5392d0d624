#pragma once

#include <utility>
#include <vector>

#include "bose2d/radial_potential.hpp"

namespace bose2d {

// Output of the zero-energy scattering solve on the disk of radius R.
struct ScatteringResult {
  double a = 0.0;        // scattering length
  double R_used = 0.0;   // outer radius of the solve
  bool degenerate = false;  // v == 0: a = 0, normalization log-divergent
  // (r, g(r)) profile of the minimizer, normalized so g(R) = 1
  // (left unnormalized when degenerate).
  std::vector<std::pair<double, double>> g_samples;
  // (r, r g'(r)) at the same nodes; handy for log-derivative checks.
  std::vector<std::pair<double, double>> rgprime_samples;
  double functional_value = 0.0;  // int |grad g|^2 + (v/2) g^2 over B_R
};

// Solves g'' + g'/r = (v/2) g outward (in t = ln r to remove the coordinate
// singularity) and extracts a = r exp(-g(r)/(r g'(r))) in the exterior
// region, averaged over 5 sample radii.  Hard cores enter through the
// boundary condition g(r_c) = 0, g'(r_c) = 1; otherwise the regular solution
// g -> 1, g' -> 0 at r -> 0 is used.  Requires R > range of v.
ScatteringResult scattering_length(const RadialPotential& v, double R);

// Quadrature of int_{B_R} |grad g|^2 + (v/2)|g|^2 using the stored profile;
// equals 2 pi / ln(R/a) for the true minimizer.
double functional_energy(const RadialPotential& v,
                         const ScatteringResult& result);

// 2 pi int_b^{R0} v(r) ln^2(r/a_ref) r dr, with a_ref defaulting to b.
// Finite for finite-range potentials; the hardcore region contributes 0
// whenever b is at or beyond the core edge, and +inf otherwise.
double finiteness_integral(const RadialPotential& v, double b);
double finiteness_integral(const RadialPotential& v, double b, double a_ref);

}  // namespace bose2d
