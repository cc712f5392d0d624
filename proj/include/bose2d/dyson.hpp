#pragma once

#include <array>
#include <functional>
#include <vector>

#include "bose2d/radial_potential.hpp"
#include "bose2d/torus.hpp"

namespace bose2d {

// ------------------------------------------------------------------ kernels

// Normalized disk-overlap kernel j(t) = (16/pi)[arccos t - t sqrt(1-t^2)]
// on [0,1], zero beyond; j(0) = 8 and int_0^1 j(t) t dt = 1.
double j_overlap(double t);

// Smooth momentum bump: 0 for |p| <= 1, 1 for |p| >= 2, and
// exp(1 - 1/(1 - (2-|p|)^2)) in between (C-infinity).
double nu_bump(double p);

// Parameters of the soft-potential machinery on the torus.
struct DysonParams {
  double R = 1.0;       // soft-potential range
  double s = 1.0;       // momentum-cutoff length scale (chi(p) = nu(s p))
  double epsilon = 0.3;
  double kappa = 0.5;
  double R0 = 0.1;      // hole radius (range of the hard potential)
  std::vector<std::array<double, 2>> centers;

  void validate(const TorusGrid& grid) const;  // R0 < R <= s < L/2, eps/kappa in (0,1)
};

// Soft potential without the hole: U~_R(t) = j(t/R) / (R^2 ln(R/a_tilde)).
double soft_potential_tilde(double R, double a_tilde, double t);

// Soft potential with the hole: U_R(t) = U~_R(t) theta(t - R0).
double soft_potential(double R, double R0, double a_tilde, double t);

// int_{R0}^{R} U_R(t) ln(t/a_tilde) t dt; must be <= 1.
double soft_potential_condition_integral(double R, double R0, double a_tilde);

// int_{R0}^{R} U_R(t) t dt (the coefficient of the w_R correction).
double soft_potential_first_moment(double R, double R0, double a_tilde);

// ------------------------------------------------------------- torus fields

struct TorusFields {
  std::vector<double> h;    // inverse DFT of 1 - chi(p)
  std::vector<double> f_R;  // sup_{|y|<=R} |h(x-y) - h(x)|
  std::vector<double> w_R;  // (2/pi) f_R(x) int f_R
  bool degenerate = false;  // 1 - chi vanishes on every nonzero mode
};

// Assembles h, f_R, w_R on the grid.  Requires the grid to resolve the 1/s
// scale (N >= 8 L / s); throws std::invalid_argument otherwise.
TorusFields torus_fields(const TorusGrid& grid, const DysonParams& params,
                         bool parallel = true);

// ------------------------------------------------------- Fourier decay bound

// Smooth compactly supported test function on R^2 with analytic derivative
// sup norms: deriv_sup(k1, k2) = sup |d^{k1}_x d^{k2}_y o|.
struct TestFunction2D {
  std::function<double(double, double)> value;
  std::function<double(int, int)> deriv_sup;
  double support_half_side = 2.0;  // o supported in a square of side 4
};

struct DecayBound {
  double u_value = 0.0;      // u(x) = L^{-2} sum_p o(s p) e^{-i p x}
  double bound_value = 0.0;  // (s/d)^{2n} C_n max|d^a o| (2/(pi s)+(2n+1)/L)^2
};

// Direct lattice sum for u and the decay bound with C_n = (pi^2/2)^n from the
// discrete-Laplacian summation-by-parts estimate.  For n >= 1 the point x
// must not be the origin (minimal-image distance enters as d(x,0)^{-2n}).
DecayBound fourier_decay_bound(const TestFunction2D& o, double s, double L,
                               int n, double x1, double x2);

// --------------------------------------------------------- center selection

// Two-phase greedy selection with lexicographic visiting order.
// Returns indices i != excluded with pairwise torus distances >= R/5 and
// maximality: every rejected l has a selected k with d(l,k) < R/5.
// Pass excluded = -1 to select among all centers.
std::vector<int> select_Jj(const std::vector<std::array<double, 2>>& centers,
                           int excluded, double R, const TorusGrid& grid);

// ------------------------------------------------- operator inequality test

struct MarginResult {
  double margin = 0.0;        // smallest eigenvalue of LHS - RHS
  double op_norm = 0.0;       // max |eigenvalue| estimate
  int iterations = 0;
  double condition_integral = 0.0;  // the U_R admissibility integral (<= 1)
};

// Assembles LHS - RHS of the one-particle soft-potential inequality
//   -grad chi(p)^2 grad + (1/2) sum_i v(d(x,y_i))
//     >= (1-eps) U_R(d(x, y_sel(x))) - (1/eps) (int U_R t dt) sum_i w_R(x-y_i)
// on the grid and returns its smallest eigenvalue (Lanczos).  Hard cores are
// replaced by the finite penalty 1e6 / L^2.  With use_Jj = true the nearest
// neighbor and the w_R sum run over the R/5-separated subset select_Jj.
MarginResult dyson_inequality_margin(const TorusGrid& grid,
                                     const RadialPotential& v,
                                     const DysonParams& params, double a_tilde,
                                     bool use_Jj = false, bool parallel = true);

// --------------------------------------- m(r) / c / J(b/s) kernel quadratures

// m(r) = -(r/16) int_r^inf g'''(s) s (s^2-r^2)^{-1/2} ds for a radial profile
// with third derivative gppp of rapid decay.
double m_kernel(const std::function<double(double)>& gppp, double r);

// Reconstruction int_0^inf m(r) j(t/r) dr; equals g(t) when m comes from g.
double m_reconstruct(const std::function<double(double)>& gppp, double t);

// c = int_0^1 |m| dr + int_1^inf |m| r^4 dr.
double m_constant_c(const std::function<double(double)>& gppp);

// J(x) = int_x^inf |m(r)| r^2 dr.
double m_tail_J(const std::function<double(double)>& gppp, double x);

// Third derivative of the Gaussian test profile g(t) = exp(-t^2).
double gaussian_gppp(double t);

}  // namespace bose2d
