#include "bose2d/filling_holes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bose2d/lanczos.hpp"

namespace bose2d {

void WellSpec::validate() const {
  if (!(R0 > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("WellSpec: R0 and R must be positive");
  }
  if (!(R0 < R / 10.0)) {
    throw std::invalid_argument("WellSpec: requires R0 < R/10");
  }
  if (depth < 0.0 || domain_radius < 0.0) {
    throw std::invalid_argument("WellSpec: depth/domain_radius must be >= 0");
  }
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below lam.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                double lam) {
  int count = 0;
  double d = 1.0;
  const size_t n = diag.size();
  for (size_t i = 0; i < n; ++i) {
    const double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - lam - b2 / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

double smallest_eigenvalue_tridiag(const std::vector<double>& diag,
                                   const std::vector<double>& off) {
  // Gershgorin bracket
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const size_t n = diag.size();
  for (size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (std::abs(lo) + std::abs(hi)) +
                                           1e-300;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// One solve of the radial problem at a given node count.
double radial_solve(double depth, double R0, double r_out, int n) {
  const double t0 = std::log(R0);
  const double t_min = t0 - 12.0;           // r_min = R0 e^-12: negligible mass
  const double t_max = std::log(r_out);
  const double h = (t_max - t_min) / (n - 1);

  // quadratic form in t = ln r:  int u_t^2 dt + int V e^{2t} u^2 dt over
  // int e^{2t} u^2 dt.  Cell-exact lumped weights, free (Neumann) ends.
  std::vector<double> mass(n), pot(n);
  auto cell_weight = [](double a, double b) {
    return 0.5 * (std::exp(2.0 * b) - std::exp(2.0 * a));
  };
  for (int i = 0; i < n; ++i) {
    const double t = t_min + i * h;
    const double a = std::max(t - 0.5 * h, t_min);
    const double b = std::min(t + 0.5 * h, t_max);
    mass[i] = cell_weight(a, b);
    const double bw = std::min(b, t0);  // well occupies t < ln R0
    pot[i] = a < t0 ? -depth * cell_weight(a, bw) : 0.0;
  }

  // stiffness (free-free 1D Laplacian) + potential, then the symmetric
  // mass-scaled form D^{-1/2} A D^{-1/2}
  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) {
    double a = pot[i];
    if (i > 0) a += 1.0 / h;
    if (i + 1 < n) a += 1.0 / h;
    diag[i] = a / mass[i];
  }
  for (int i = 0; i + 1 < n; ++i) {
    off[i] = (-1.0 / h) / std::sqrt(mass[i] * mass[i + 1]);
  }
  return smallest_eigenvalue_tridiag(diag, off);
}

}  // namespace

double neumann_ground_energy(const WellSpec& spec, int mesh) {
  spec.validate();
  if (mesh < 200) {
    throw std::invalid_argument("neumann_ground_energy: mesh must be >= 200");
  }
  const double depth = spec.effective_depth();
  if (depth == 0.0) return 0.0;
  const double r_out = spec.effective_domain();
  const double e1 = radial_solve(depth, spec.R0, r_out, mesh);
  const double e2 = radial_solve(depth, spec.R0, r_out, 2 * mesh);
  const double e = (4.0 * e2 - e1) / 3.0;  // second-order Richardson
  const double resid = std::abs(e2 - e1);
  const double scale = depth + 1.0 / (r_out * r_out);
  if (!(resid <= 0.2 * std::abs(e) + 1e-9 * scale)) {
    throw std::runtime_error(
        "neumann_ground_energy: mesh sequence not converged, |E2-E1| = " +
        std::to_string(resid));
  }
  return e;
}

HolesMarginResult holes_inequality_margin(
    const TorusGrid& grid, const std::vector<std::array<double, 2>>& centers,
    double R0, double R, double ctilde, bool parallel) {
  grid.validate();
  if (!(R0 > 0.0) || !(R0 < R / 10.0)) {
    throw std::invalid_argument("holes_inequality_margin: requires 0 < R0 < R/10");
  }
  for (size_t i = 0; i < centers.size(); ++i) {
    for (size_t j = i + 1; j < centers.size(); ++j) {
      const double d = grid.dist(centers[i][0], centers[i][1], centers[j][0],
                                 centers[j][1]);
      if (d < R / 5.0 * (1.0 - 1e-12)) {
        throw std::invalid_argument(
            "holes_inequality_margin: centers closer than R/5");
      }
    }
  }
  const double depth = 1.0 / (R0 * R0 * std::log(R / R0));

  SpectralOperator op;
  op.grid = grid;
  op.multiplier.assign(grid.size(), 0.0);
  op.diagonal.assign(grid.size(), 0.0);
  const int N = grid.N;
  for (int k1 = 0; k1 < N; ++k1) {
    for (int k2 = 0; k2 < N; ++k2) {
      const double p1 = grid.momentum(k1);
      const double p2 = grid.momentum(k2);
      // cap the kinetic multiplier at a few potential scales: min(p^2, cap)
      // only lowers the smallest eigenvalue, so a nonnegative margin still
      // certifies the uncapped inequality, while the reduced spectral spread
      // keeps Lanczos convergent on fine grids
      const double cap = 4.0 * (depth + ctilde / (R * R));
      op.multiplier[k1 * N + k2] = std::min(p1 * p1 + p2 * p2, cap);
    }
  }
  for (int i1 = 0; i1 < N; ++i1) {
    for (int i2 = 0; i2 < N; ++i2) {
      const double x1 = grid.coord(i1);
      const double x2 = grid.coord(i2);
      double v = 0.0;
      for (const auto& c : centers) {
        const double d = grid.dist(x1, x2, c[0], c[1]);
        if (d < R0) v -= depth;
        if (d < R / 10.0) v += ctilde / (R * R);
      }
      op.diagonal[i1 * N + i2] = v;
    }
  }

  const auto res = lanczos_extreme(op, 400, 1e-10, parallel);
  HolesMarginResult out;
  out.margin = res.lambda_min;
  out.op_norm = op.norm_upper_bound();
  out.iterations = res.iterations;
  return out;
}

}  // namespace bose2d
