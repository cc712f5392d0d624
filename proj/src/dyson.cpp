#include "bose2d/dyson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bose2d/kernels.hpp"
#include "bose2d/lanczos.hpp"
#include "bose2d/quadrature.hpp"

namespace bose2d {

namespace {
constexpr double kPi = std::numbers::pi;
}

double j_overlap(double t) {
  if (t < 0.0) throw std::domain_error("j_overlap: t must be >= 0");
  if (t >= 1.0) return 0.0;
  return (16.0 / kPi) * (std::acos(t) - t * std::sqrt(1.0 - t * t));
}

double nu_bump(double p) {
  const double q = std::abs(p);
  if (q <= 1.0) return 0.0;
  if (q >= 2.0) return 1.0;
  const double w = 2.0 - q;            // in (0,1)
  return std::exp(1.0 - 1.0 / (1.0 - w * w));
}

void DysonParams::validate(const TorusGrid& grid) const {
  grid.validate();
  if (!(R0 < R && R <= s && s < 0.5 * grid.L)) {
    throw std::invalid_argument("DysonParams: need R0 < R <= s < L/2");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(kappa > 0.0 && kappa < 1.0)) {
    throw std::invalid_argument("DysonParams: epsilon, kappa must be in (0,1)");
  }
}

double soft_potential_tilde(double R, double a_tilde, double t) {
  if (!(a_tilde > 0.0 && a_tilde < R)) {
    throw std::invalid_argument("soft_potential: need 0 < a_tilde < R");
  }
  return j_overlap(t / R) / (R * R * std::log(R / a_tilde));
}

double soft_potential(double R, double R0, double a_tilde, double t) {
  if (t < R0) return 0.0;
  return soft_potential_tilde(R, a_tilde, t);
}

double soft_potential_condition_integral(double R, double R0, double a_tilde) {
  auto f = [R, R0, a_tilde](double t) {
    return soft_potential(R, R0, a_tilde, t) * std::log(t / a_tilde) * t;
  };
  return integrate(f, R0, R, 1e-13, 1e-11).value;
}

double soft_potential_first_moment(double R, double R0, double a_tilde) {
  auto f = [R, R0, a_tilde](double t) {
    return soft_potential(R, R0, a_tilde, t) * t;
  };
  return integrate(f, R0, R, 1e-13, 1e-11).value;
}

TorusFields torus_fields(const TorusGrid& grid, const DysonParams& params,
                         bool parallel) {
  params.validate(grid);
  const int N = grid.N;
  if (N < 8.0 * grid.L / params.s) {
    throw std::invalid_argument(
        "torus_fields: grid too coarse to resolve the 1/s scale (need N >= "
        "8 L / s)");
  }
  TorusFields out;
  const size_t n = static_cast<size_t>(N) * N;

  // h(x) = L^{-2} sum_p (1 - nu(s|p|)) e^{-i p x}; only modes with
  // |p| < 2/s contribute, so gather them first.
  struct Mode {
    double p1, p2, amp;
  };
  std::vector<Mode> modes;
  int nonzero_contributing = 0;
  for (int k1 = 0; k1 < N; ++k1) {
    for (int k2 = 0; k2 < N; ++k2) {
      const double p1 = grid.momentum(k1);
      const double p2 = grid.momentum(k2);
      const double amp = 1.0 - nu_bump(params.s * std::hypot(p1, p2));
      if (amp != 0.0) {
        modes.push_back({p1, p2, amp});
        if (k1 != 0 || k2 != 0) ++nonzero_contributing;
      }
    }
  }
  out.degenerate = nonzero_contributing == 0;

  out.h.assign(n, 0.0);
  const double inv_area = 1.0 / (grid.L * grid.L);
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp parallel for if (parallel) schedule(static)
#endif
  for (int i1 = 0; i1 < N; ++i1) {
    for (int i2 = 0; i2 < N; ++i2) {
      const double x1 = grid.coord(i1);
      const double x2 = grid.coord(i2);
      double acc = 0.0;
      for (const auto& m : modes) {
        acc += m.amp * std::cos(m.p1 * x1 + m.p2 * x2);
      }
      out.h[static_cast<size_t>(i1) * N + i2] = acc * inv_area;
    }
  }

  out.f_R = kernels::sup_in_ball(grid, out.h, params.R, parallel);
  double integral = 0.0;
  for (double v : out.f_R) integral += v;
  integral *= grid.dx() * grid.dx();
  out.w_R.resize(n);
  const double c = (2.0 / kPi) * integral;
  for (size_t i = 0; i < n; ++i) out.w_R[i] = c * out.f_R[i];
  return out;
}

DecayBound fourier_decay_bound(const TestFunction2D& o, double s, double L,
                               int n, double x1, double x2) {
  if (!(s > 0.0 && L > 0.0) || n < 0) {
    throw std::invalid_argument("fourier_decay_bound: bad parameters");
  }
  const double h = 2.0 * kPi / L;
  const double half = o.support_half_side;
  const int kmax = static_cast<int>(std::floor(half / (s * h))) + 1;

  double u = 0.0;
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      const double p1 = h * k1;
      const double p2 = h * k2;
      u += o.value(s * p1, s * p2) * std::cos(p1 * x1 + p2 * x2);
    }
  }
  u /= L * L;

  // minimal-image distance to the origin
  auto wrap = [L](double d) {
    d = std::fmod(d, L);
    if (d < -0.5 * L) d += L;
    if (d >= 0.5 * L) d -= L;
    return d;
  };
  const double d = std::hypot(wrap(x1), wrap(x2));
  if (n >= 1 && d == 0.0) {
    throw std::invalid_argument(
        "fourier_decay_bound: x must differ from 0 when n >= 1");
  }

  double max_deriv = 0.0;
  for (int a = 0; a <= 2 * n; ++a) {
    max_deriv = std::max(max_deriv, o.deriv_sup(a, 2 * n - a));
  }
  const double cn = std::pow(kPi * kPi / 2.0, n);
  const double geom = 2.0 / (kPi * s) + (2.0 * n + 1.0) / L;
  const double dist_factor = n == 0 ? 1.0 : std::pow(s / d, 2 * n);
  DecayBound out;
  out.u_value = u;
  out.bound_value = dist_factor * cn * max_deriv * geom * geom;
  return out;
}

std::vector<int> select_Jj(const std::vector<std::array<double, 2>>& centers,
                           int excluded, double R, const TorusGrid& grid) {
  const int n = static_cast<int>(centers.size());
  const double sep = R / 5.0;
  auto dist = [&](int i, int k) {
    return grid.dist(centers[i][0], centers[i][1], centers[k][0],
                     centers[k][1]);
  };
  // lexicographic visiting order on (x1, x2)
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    if (i != excluded) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (centers[a][0] != centers[b][0]) return centers[a][0] < centers[b][0];
    if (centers[a][1] != centers[b][1]) return centers[a][1] < centers[b][1];
    return a < b;
  });

  std::vector<int> J;
  std::vector<bool> in_J(n, false);
  // phase 1: centers whose nearest neighbor (among the others, j excluded)
  // is at least R/5 away
  for (int i : order) {
    double nn = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      if (k == i || k == excluded) continue;
      nn = std::min(nn, dist(i, k));
    }
    if (nn >= sep) {
      J.push_back(i);
      in_J[i] = true;
    }
  }
  // phase 2: greedily admit remaining centers that keep the separation
  for (int i : order) {
    if (in_J[i]) continue;
    bool ok = true;
    for (int k : J) {
      if (dist(i, k) < sep) {
        ok = false;
        break;
      }
    }
    if (ok) {
      J.push_back(i);
      in_J[i] = true;
    }
  }
  std::sort(J.begin(), J.end());
  return J;
}

MarginResult dyson_inequality_margin(const TorusGrid& grid,
                                     const RadialPotential& v,
                                     const DysonParams& params, double a_tilde,
                                     bool use_Jj, bool parallel) {
  params.validate(grid);
  v.validate();
  const int N = grid.N;
  const size_t n = static_cast<size_t>(N) * N;

  SpectralOperator op;
  op.grid = grid;
  op.multiplier.resize(n);
  for (int k1 = 0; k1 < N; ++k1) {
    for (int k2 = 0; k2 < N; ++k2) {
      const double p = std::hypot(grid.momentum(k1), grid.momentum(k2));
      const double chi = nu_bump(params.s * p);
      op.multiplier[static_cast<size_t>(k1) * N + k2] = p * p * chi * chi;
    }
  }

  op.diagonal.assign(n, 0.0);
  MarginResult out;
  if (!params.centers.empty()) {
    const TorusFields fields = torus_fields(grid, params, parallel);
    const double first_moment =
        soft_potential_first_moment(params.R, params.R0, a_tilde);
    out.condition_integral =
        soft_potential_condition_integral(params.R, params.R0, a_tilde);

    std::vector<int> active;
    if (use_Jj) {
      active = select_Jj(params.centers, /*excluded=*/-1, params.R, grid);
    } else {
      for (int i = 0; i < static_cast<int>(params.centers.size()); ++i) {
        active.push_back(i);
      }
    }

    const double v_max = 1e6 / (grid.L * grid.L);  // hard-core penalty
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp parallel for if (parallel) schedule(static)
#endif
    for (int i1 = 0; i1 < N; ++i1) {
      for (int i2 = 0; i2 < N; ++i2) {
        const double x1 = grid.coord(i1);
        const double x2 = grid.coord(i2);
        double diag = 0.0;
        // (1/2) sum over all centers of the hard potential
        for (const auto& y : params.centers) {
          const double d = grid.dist(x1, x2, y[0], y[1]);
          double vv = v.value(d);
          if (!std::isfinite(vv)) vv = v_max;
          diag += 0.5 * vv;
        }
        // -(1-eps) U_R at the nearest active neighbor
        double dmin = std::numeric_limits<double>::infinity();
        for (int i : active) {
          dmin = std::min(dmin, grid.dist(x1, x2, params.centers[i][0],
                                          params.centers[i][1]));
        }
        if (std::isfinite(dmin)) {
          diag -= (1.0 - params.epsilon) *
                  soft_potential(params.R, params.R0, a_tilde, dmin);
        }
        // +(1/eps) (int U_R t dt) sum over active centers of w_R
        double wsum = 0.0;
        for (int i : active) {
          // w_R(x - y_i) via the nearest grid node of the displacement
          const double d1 = grid.wrap(x1 - params.centers[i][0]);
          const double d2 = grid.wrap(x2 - params.centers[i][1]);
          int j1 = static_cast<int>(std::llround(d1 / grid.dx())) % N;
          int j2 = static_cast<int>(std::llround(d2 / grid.dx())) % N;
          j1 = (j1 + N) % N;
          j2 = (j2 + N) % N;
          wsum += fields.w_R[static_cast<size_t>(j1) * N + j2];
        }
        diag += wsum * first_moment / params.epsilon;
        op.diagonal[static_cast<size_t>(i1) * N + i2] = diag;
      }
    }
  }

  const LanczosResult lr = lanczos_extreme(op, 400, 1e-10, parallel);
  out.margin = lr.lambda_min;
  out.op_norm = std::max(std::abs(lr.lambda_min), std::abs(lr.lambda_max));
  out.iterations = lr.iterations;
  return out;
}

// ----------------------------------------------------------- m / c / J

double m_kernel(const std::function<double(double)>& gppp, double r) {
  if (!(r > 0.0)) throw std::domain_error("m_kernel: r must be > 0");
  // substitute s = sqrt(r^2 + w^2):  m(r) = -(r/16) int_0^inf g'''(sqrt(r^2+w^2)) dw
  auto f = [&gppp, r](double w) { return gppp(std::sqrt(r * r + w * w)); };
  const double head = integrate(f, 0.0, 10.0 + r, 1e-13, 1e-11).value;
  const double tail = integrate_to_inf(f, 10.0 + r, 1e-14, 1e-11).value;
  return -(r / 16.0) * (head + tail);
}

double m_reconstruct(const std::function<double(double)>& gppp, double t) {
  // int_0^inf m(r) j(t/r) dr; j(t/r) = 0 for r < t
  auto f = [&gppp, t](double r) { return m_kernel(gppp, r) * j_overlap(t / r); };
  const double lo = std::max(t, 1e-12);
  const double head = integrate(f, lo, lo + 12.0, 1e-12, 1e-9).value;
  const double tail = integrate_to_inf(f, lo + 12.0, 1e-13, 1e-9).value;
  return head + tail;
}

double m_constant_c(const std::function<double(double)>& gppp) {
  auto f1 = [&gppp](double r) { return std::abs(m_kernel(gppp, r)); };
  auto f2 = [&gppp](double r) {
    return std::abs(m_kernel(gppp, r)) * r * r * r * r;
  };
  const double head = integrate(f1, 1e-12, 1.0, 1e-12, 1e-9).value;
  const double mid = integrate(f2, 1.0, 12.0, 1e-12, 1e-9).value;
  const double tail = integrate_to_inf(f2, 12.0, 1e-13, 1e-9).value;
  return head + mid + tail;
}

double m_tail_J(const std::function<double(double)>& gppp, double x) {
  if (!(x >= 0.0)) throw std::domain_error("m_tail_J: x must be >= 0");
  auto f = [&gppp](double r) { return std::abs(m_kernel(gppp, r)) * r * r; };
  const double lo = std::max(x, 1e-12);
  const double head = integrate(f, lo, lo + 12.0, 1e-12, 1e-9).value;
  const double tail = integrate_to_inf(f, lo + 12.0, 1e-13, 1e-9).value;
  return head + tail;
}

double gaussian_gppp(double t) {
  // g(t) = exp(-t^2):  g''' = (12 t - 8 t^3) exp(-t^2)
  return (12.0 * t - 8.0 * t * t * t) * std::exp(-t * t);
}

}  // namespace bose2d
