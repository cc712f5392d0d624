#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "bose2d/torus.hpp"

namespace bose2d {

// Shallow circular well -depth on r < R0, observed on a Neumann disk.
struct WellSpec {
  double R0 = 0.05;
  double R = 1.0;
  double depth = 0.0;          // 0 means the canonical 1/(R0^2 ln(R/R0))
  double domain_radius = 0.0;  // 0 means the canonical R/10

  void validate() const;  // throws std::invalid_argument (requires R0 < R/10)

  double effective_depth() const {
    return depth > 0.0 ? depth : 1.0 / (R0 * R0 * std::log(R / R0));
  }
  double effective_domain() const {
    return domain_radius > 0.0 ? domain_radius : R / 10.0;
  }
};

// Lowest eigenvalue of -(1/r)(r u')' - depth theta(R0 - r) on the disk of
// radius domain_radius with a Neumann outer boundary.  Radial P1 elements in
// log radius (free inner end far below R0 stands in for regularity at 0),
// smallest eigenvalue by Sturm bisection, Richardson-extrapolated over the
// mesh and its refinement.  mesh >= 200 radial nodes required.
double neumann_ground_energy(const WellSpec& spec, int mesh);

struct HolesMarginResult {
  double margin = 0.0;   // smallest eigenvalue
  double op_norm = 0.0;  // upper bound on the operator norm
  int iterations = 0;
};

// Smallest eigenvalue of
//   -Laplacian - depth sum_i theta(R0 - d(x,y_i))
//              + (Ctilde/R^2) sum_i theta(R/10 - d(x,y_i))
// on the torus.  Requires pairwise center separation >= R/5 and R0 < R/10.
HolesMarginResult holes_inequality_margin(
    const TorusGrid& grid, const std::vector<std::array<double, 2>>& centers,
    double R0, double R, double ctilde = 400.0, bool parallel = true);

}  // namespace bose2d
