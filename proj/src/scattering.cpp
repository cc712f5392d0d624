#include "bose2d/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bose2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// State for the zero-energy radial equation in t = ln r:
//   g_tt = (v(e^t)/2) e^{2t} g,
// augmented with the energy-functional quadrature
//   q_t  = g_t^2 + (v/2) g^2 e^{2t}    ( = (|g'|^2 + (v/2) g^2) r dr / dt ).
struct State {
  double g;
  double gt;
  double q;
};

State rhs(const RadialPotential& v, double t, const State& y) {
  const double r = std::exp(t);
  double vv = v.value(r);
  if (!std::isfinite(vv)) vv = 0.0;  // never stepped into; guard only
  const double k = 0.5 * vv * r * r;
  return {y.gt, k * y.g, y.gt * y.gt + k * y.g * y.g};
}

State axpy(const State& y, double h, const State& d) {
  return {y.g + h * d.g, y.gt + h * d.gt, y.q + h * d.q};
}

// One Dormand-Prince 5(4) step; returns the embedded error estimate.
State dopri_step(const RadialPotential& v, double t, const State& y, double h,
                 double* err) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const State k1 = rhs(v, t, y);
  const State k2 = rhs(v, t + h / 5, axpy(y, h * a21, k1));
  State tmp = y;
  tmp = axpy(tmp, h * a31, k1);
  tmp = axpy(tmp, h * a32, k2);
  const State k3 = rhs(v, t + 3 * h / 10, tmp);
  tmp = y;
  tmp = axpy(tmp, h * a41, k1);
  tmp = axpy(tmp, h * a42, k2);
  tmp = axpy(tmp, h * a43, k3);
  const State k4 = rhs(v, t + 4 * h / 5, tmp);
  tmp = y;
  tmp = axpy(tmp, h * a51, k1);
  tmp = axpy(tmp, h * a52, k2);
  tmp = axpy(tmp, h * a53, k3);
  tmp = axpy(tmp, h * a54, k4);
  const State k5 = rhs(v, t + 8 * h / 9, tmp);
  tmp = y;
  tmp = axpy(tmp, h * a61, k1);
  tmp = axpy(tmp, h * a62, k2);
  tmp = axpy(tmp, h * a63, k3);
  tmp = axpy(tmp, h * a64, k4);
  tmp = axpy(tmp, h * a65, k5);
  const State k6 = rhs(v, t + h, tmp);

  State y5 = y;
  y5 = axpy(y5, h * b1, k1);
  y5 = axpy(y5, h * b3, k3);
  y5 = axpy(y5, h * b4, k4);
  y5 = axpy(y5, h * b5, k5);
  y5 = axpy(y5, h * b6, k6);
  const State k7 = rhs(v, t + h, y5);

  const double eg = h * (e1 * k1.g + e3 * k3.g + e4 * k4.g + e5 * k5.g +
                         e6 * k6.g + e7 * k7.g);
  const double egt = h * (e1 * k1.gt + e3 * k3.gt + e4 * k4.gt + e5 * k5.gt +
                          e6 * k6.gt + e7 * k7.gt);
  *err = std::max(std::abs(eg), std::abs(egt));
  return y5;
}

struct TraceEntry {
  double t;
  State y;
};

// Adaptive integration from t0 to t1 (t1 > t0), appending accepted nodes.
void integrate_piece(const RadialPotential& v, double t0, double t1, State* y,
                     std::vector<TraceEntry>* trace) {
  constexpr double kRelTol = 1e-10;
  constexpr double kAbsTol = 1e-14;
  constexpr double kMaxStep = 0.05;  // dense profile for later quadrature
  double t = t0;
  double h = std::min(kMaxStep, t1 - t0);
  int rejects_in_a_row = 0;
  while (t < t1 - 1e-14 * std::max(1.0, std::abs(t1))) {
    h = std::min(h, t1 - t);
    double err = 0.0;
    const State ynew = dopri_step(v, t, *y, h, &err);
    const double scale =
        kAbsTol + kRelTol * std::max({std::abs(y->g), std::abs(y->gt),
                                      std::abs(ynew.g), std::abs(ynew.gt)});
    if (err <= scale) {
      t += h;
      *y = ynew;
      trace->push_back({t, *y});
      const double grow = 0.9 * std::pow(scale / std::max(err, 1e-300), 0.2);
      h = std::min({h * std::min(grow, 5.0), kMaxStep});
      rejects_in_a_row = 0;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(scale / err, 0.25));
      if (++rejects_in_a_row > 200) {
        throw std::runtime_error(
            "scattering_length: step control failed to meet tolerance");
      }
    }
    if (h < 1e-14) {
      throw std::runtime_error("scattering_length: step size underflow");
    }
  }
}

// Smoothness breakpoints of v in (lo, hi): segment edges and tabulated nodes.
std::vector<double> breakpoints(const RadialPotential& v, double lo,
                                double hi) {
  std::vector<double> b;
  for (const auto& seg : v.segments) {
    b.push_back(seg.r_lo);
    b.push_back(seg.r_hi);
    for (const auto& s : seg.samples) b.push_back(s.first);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<double> out;
  for (double r : b) {
    if (r > lo * (1 + 1e-14) && r < hi * (1 - 1e-14)) out.push_back(r);
  }
  return out;
}

}  // namespace

ScatteringResult scattering_length(const RadialPotential& v, double R) {
  v.validate();
  const double R0 = v.range_R0();
  if (!(R > R0)) {
    throw std::invalid_argument("scattering_length: need R > range of v");
  }

  ScatteringResult res;
  res.R_used = R;

  if (v.is_zero()) {
    res.degenerate = true;
    res.a = 0.0;
    res.g_samples = {{R0 > 0 ? R0 : R * 1e-6, 1.0}, {R, 1.0}};
    res.rgprime_samples = {{R0 > 0 ? R0 : R * 1e-6, 0.0}, {R, 0.0}};
    res.functional_value = 0.0;
    return res;
  }

  const double rc = v.hardcore_radius();
  double t0;
  State y;
  if (rc > 0.0) {
    // hard core: g(rc) = 0, g'(rc) = 1  ->  g_t = r g' = rc
    t0 = std::log(rc);
    y = {0.0, rc, 0.0};
  } else {
    // regular solution at the origin: g -> 1, g' -> 0
    const double r_start = std::min(R0, R) * 1e-9;
    t0 = std::log(r_start);
    y = {1.0, 0.0, 0.0};
  }

  std::vector<TraceEntry> trace;
  trace.push_back({t0, y});

  // integrate piecewise up to R0, pausing at every kink of v
  std::vector<double> stops = breakpoints(v, std::exp(t0), R0);
  stops.push_back(R0);
  double t = t0;
  for (double rstop : stops) {
    const double tstop = std::log(rstop);
    if (tstop <= t) continue;
    integrate_piece(v, t, tstop, &y, &trace);
    t = tstop;
  }

  // exterior region: v = 0, so g is exactly linear in t = ln r
  const double g_edge = y.g;
  const double gt_edge = y.gt;
  const double t_edge = t;
  if (!(gt_edge > 1e-12 * std::max(1.0, std::abs(g_edge)))) {
    res.degenerate = true;
    res.a = 0.0;
    return res;
  }

  // a = r exp(-g/(r g')) averaged over 5 exterior log-spaced radii
  double a_acc = 0.0;
  const double tR = std::log(R);
  for (int k = 1; k <= 5; ++k) {
    const double tk = t_edge + (tR - t_edge) * k / 5.0;
    const double gk = g_edge + gt_edge * (tk - t_edge);
    a_acc += std::exp(tk - gk / gt_edge);
    trace.push_back({tk, {gk, gt_edge,
                          y.q + gt_edge * gt_edge * (tk - t_edge)}});
  }
  res.a = a_acc / 5.0;

  // normalize g(R) = 1
  const State& last = trace.back().y;
  const double gR = last.g;
  res.functional_value = kTwoPi * last.q / (gR * gR);
  res.g_samples.reserve(trace.size());
  res.rgprime_samples.reserve(trace.size());
  for (const auto& e : trace) {
    const double r = std::exp(e.t);
    res.g_samples.emplace_back(r, e.y.g / gR);
    res.rgprime_samples.emplace_back(r, e.y.gt / gR);
  }
  return res;
}

double functional_energy(const RadialPotential& v,
                         const ScatteringResult& result) {
  if (result.degenerate) return 0.0;
  if (result.g_samples.size() < 2 ||
      result.g_samples.size() != result.rgprime_samples.size()) {
    throw std::invalid_argument("functional_energy: result lacks a profile");
  }
  // Hermite-Simpson in t = ln r over the stored (g, r g') nodes:
  //   integrand f(t) = (r g')^2 + (v/2) g^2 r^2.
  auto f_of = [&v](double t, double g, double gt) {
    const double r = std::exp(t);
    double vv = v.value(r);
    if (!std::isfinite(vv)) vv = 0.0;  // nodes never lie inside the core
    return gt * gt + 0.5 * vv * g * g * r * r;
  };
  double sum = 0.0;
  for (size_t i = 0; i + 1 < result.g_samples.size(); ++i) {
    const double t0 = std::log(result.g_samples[i].first);
    const double t1 = std::log(result.g_samples[i + 1].first);
    const double h = t1 - t0;
    if (!(h > 0.0)) continue;
    const double g0 = result.g_samples[i].second;
    const double g1 = result.g_samples[i + 1].second;
    const double d0 = result.rgprime_samples[i].second;
    const double d1 = result.rgprime_samples[i + 1].second;
    // cubic Hermite midpoint value and slope
    const double gm = 0.5 * (g0 + g1) + 0.125 * h * (d0 - d1);
    const double dm = 1.5 * (g1 - g0) / h - 0.25 * (d0 + d1);
    const double f0 = f_of(t0, g0, d0);
    const double f1 = f_of(t1, g1, d1);
    const double fm = f_of(0.5 * (t0 + t1), gm, dm);
    sum += h / 6.0 * (f0 + 4.0 * fm + f1);
  }
  return kTwoPi * sum;
}

double finiteness_integral(const RadialPotential& v, double b) {
  return finiteness_integral(v, b, b);
}

double finiteness_integral(const RadialPotential& v, double b, double a_ref) {
  if (!(b > 0.0)) {
    throw std::domain_error("finiteness_integral: b must be > 0");
  }
  if (!(a_ref > 0.0)) {
    throw std::domain_error("finiteness_integral: a_ref must be > 0");
  }
  const double R0 = v.range_R0();
  if (b >= R0) return 0.0;
  auto w = [a_ref](double r) {
    const double l = std::log(r / a_ref);
    return l * l * r;
  };
  return kTwoPi * v.integrate_weighted(b, R0, w);
}

}  // namespace bose2d
