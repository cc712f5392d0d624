#pragma once

#include <functional>

namespace bose2d {

// Result of an adaptive quadrature: value and an error estimate.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of f over the finite interval
// [a, b].  Bisects until the local K15-G7 error estimate is below
// max(abs_tol, rel_tol * |integral|) on every subinterval (or max_depth is
// reached; the returned error field reports the accumulated estimate).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12,
                     int max_depth = 60);

// Integral of f over [a, inf).  Maps the tail to a finite interval via
// t = a + u/(1-u) and applies the adaptive rule.
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double abs_tol = 1e-12, double rel_tol = 1e-12);

// Gauss-Laguerre nodes/weights for integrals of exp(-x) f(x) over [0, inf).
// Computed by Newton iteration on the Laguerre recurrence.
void gauss_laguerre(int n, double* nodes, double* weights);

}  // namespace bose2d
