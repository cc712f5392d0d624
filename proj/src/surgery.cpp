#include "bose2d/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bose2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Clip a potential to radii >= lo (drop everything below, pad with zero) .
RadialPotential clip_below(const RadialPotential& v, double lo) {
  RadialPotential out;
  if (lo > 0.0) {
    out.segments.push_back(
        {0.0, lo, PotentialSegment::Kind::kConstant, 0.0, {}});
  }
  for (const auto& seg : v.segments) {
    if (seg.r_hi <= lo * (1 + 1e-15)) continue;
    PotentialSegment s = seg;
    if (s.r_lo < lo) {
      s.r_lo = lo;
      if (s.kind == PotentialSegment::Kind::kTabulated) {
        // re-anchor the sample list at the clip radius
        std::vector<std::pair<double, double>> trimmed;
        trimmed.emplace_back(lo, [&] {
          // linear interpolation at lo
          const auto& sm = seg.samples;
          for (size_t i = 0; i + 1 < sm.size(); ++i) {
            if (lo >= sm[i].first && lo <= sm[i + 1].first) {
              const double t =
                  (lo - sm[i].first) / (sm[i + 1].first - sm[i].first);
              return sm[i].second + t * (sm[i + 1].second - sm[i].second);
            }
          }
          return sm.front().second;
        }());
        for (const auto& p : seg.samples) {
          if (p.first > lo) trimmed.push_back(p);
        }
        s.samples = std::move(trimmed);
      }
    }
    out.segments.push_back(std::move(s));
  }
  return out;
}

// Clip a potential to radii < hi.
RadialPotential clip_above(const RadialPotential& v, double hi) {
  RadialPotential out;
  for (const auto& seg : v.segments) {
    if (seg.r_lo >= hi * (1 - 1e-15)) break;
    PotentialSegment s = seg;
    if (s.r_hi > hi) {
      s.r_hi = hi;
      if (s.kind == PotentialSegment::Kind::kTabulated) {
        std::vector<std::pair<double, double>> trimmed;
        for (const auto& p : seg.samples) {
          if (p.first < hi) trimmed.push_back(p);
        }
        const auto& sm = seg.samples;
        for (size_t i = 0; i + 1 < sm.size(); ++i) {
          if (hi >= sm[i].first && hi <= sm[i + 1].first) {
            const double t =
                (hi - sm[i].first) / (sm[i + 1].first - sm[i].first);
            trimmed.emplace_back(
                hi, sm[i].second + t * (sm[i + 1].second - sm[i].second));
            break;
          }
        }
        s.samples = std::move(trimmed);
      }
    }
    out.segments.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::pair<RadialPotential, SurgeryReport> cutoff_range(const RadialPotential& v,
                                                       double R0_new,
                                                       double R) {
  v.validate();
  const double R0 = v.range_R0();
  if (!(R0_new > 0.0)) {
    throw std::invalid_argument("cutoff_range: R0_new must be > 0");
  }
  if (!(R > R0)) {
    throw std::invalid_argument("cutoff_range: need R > range of v");
  }
  const RadialPotential cut =
      R0_new >= R0 ? v : clip_above(v, R0_new);
  if (cut.is_zero()) {
    throw std::runtime_error(
        "cutoff_range: truncated potential vanishes (degenerate)");
  }

  SurgeryReport rep;
  rep.construction_case = SurgeryCase::kRangeCutoff;
  rep.R = R;
  rep.s_or_t = std::min(R0_new, R0);
  rep.original_a = scattering_length(v, R).a;
  rep.modified_a = scattering_length(cut, R).a;
  rep.bound_lhs = 1.0 / std::log(R / rep.modified_a);
  const double tail =
      R0_new >= R0 ? 0.0
                   : finiteness_integral(v, R0_new, rep.modified_a);
  rep.bound_rhs =
      1.0 / (std::log(R / rep.original_a) + tail / (4.0 * std::numbers::pi));
  return {cut, rep};
}

std::pair<RadialPotential, SurgeryReport> cap_integral(const RadialPotential& v,
                                                       double phi, double delta,
                                                       double R) {
  v.validate();
  if (!(phi > 0.0)) throw std::invalid_argument("cap_integral: phi must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("cap_integral: delta must be in (0,1)");
  }
  const double R0 = v.range_R0();
  if (!(R > R0)) {
    throw std::invalid_argument("cap_integral: need R > range of v");
  }

  SurgeryReport rep;
  rep.phi = phi;
  rep.delta = delta;
  rep.R = R;
  rep.original_a = scattering_length(v, R).a;

  // t = inf{ s : int_s^infty r v dr < infty }: nonzero only for the hardcore
  // prefix in this representation (tabulated interpolants are always locally
  // integrable).
  const double t = v.hardcore_radius();
  const double tail_from_t = v.integral_rv(t, R0);

  RadialPotential tilde;
  if (tail_from_t >= 2.0 * phi) {
    // Case 1: keep only the tail beyond s, where int_s^{R0} r v dr = 2 phi.
    double lo = t, hi = R0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (v.integral_rv(mid, R0) >= 2.0 * phi) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
    }
    const double s = 0.5 * (lo + hi);
    rep.construction_case = SurgeryCase::kCapCase1Tail;
    rep.s_or_t = s;
    tilde = clip_below(v, s);
  } else if (t == 0.0) {
    // Budget already satisfied: int v = 2 pi int r v dr <= 4 pi phi.
    rep.construction_case = SurgeryCase::kCapNoop;
    rep.s_or_t = 0.0;
    tilde = v;
  } else {
    // Case 2: shave the divergence down to a capped shell on [(1-delta)t, t)
    // holding the remaining budget T = 2 phi - int_t^{R0} r v dr.
    const double T = 2.0 * phi - tail_from_t;
    auto shell_integral = [&](double tau) {
      // int_{(1-delta)t}^{t} r min{v, tau} dr; the window lies inside the
      // hard core, where min{v, tau} = tau.
      double total = 0.0;
      const double lo = (1.0 - delta) * t;
      // hardcore part (analytic) plus any finite part (clipped at tau)
      const double core_hi = std::min(t, v.hardcore_radius());
      if (core_hi > lo) {
        total += 0.5 * tau * (core_hi * core_hi - lo * lo);
      }
      total += v.integrate_weighted(std::max(lo, core_hi), t,
                                    [](double r) { return r; });
      return total;
    };
    double tau_hi = 1.0;
    int guard = 0;
    while (shell_integral(tau_hi) < T) {
      tau_hi *= 2.0;
      if (++guard > 400) {
        throw std::runtime_error(
            "cap_integral: cannot bracket the shaving cap tau");
      }
    }
    double tau_lo = 0.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (tau_lo + tau_hi);
      if (shell_integral(mid) < T) {
        tau_lo = mid;
      } else {
        tau_hi = mid;
      }
      if (tau_hi - tau_lo <= 1e-13 * std::max(1.0, tau_hi)) break;
    }
    const double tau = 0.5 * (tau_lo + tau_hi);
    rep.construction_case = SurgeryCase::kCapCase2Shave;
    rep.s_or_t = t;
    rep.tau = tau;

    tilde.segments.push_back({0.0, (1.0 - delta) * t,
                              PotentialSegment::Kind::kConstant, 0.0, {}});
    tilde.segments.push_back({(1.0 - delta) * t, t,
                              PotentialSegment::Kind::kConstant, tau, {}});
    for (const auto& seg : v.segments) {
      if (seg.r_lo >= t * (1 - 1e-15)) tilde.segments.push_back(seg);
    }
  }
  tilde.validate();

  rep.integral_2d = kTwoPi * tilde.integral_rv(0.0, tilde.range_R0());
  rep.modified_a = scattering_length(tilde, R).a;

  const double lna = std::log(R / rep.original_a);
  rep.bound_lhs = rep.modified_a > 0.0
                      ? 1.0 / std::log(R / rep.modified_a)
                      : 0.0;
  rep.bound_rhs = (1.0 / lna) * (1.0 - 1.0 / std::sqrt(phi * lna) +
                                 std::log1p(-delta) / lna);
  return {tilde, rep};
}

double optimal_delta(double phi, double log_R_over_a) {
  const double d = std::sqrt(log_R_over_a / phi);
  return std::clamp(d, 1e-6, 1.0 - 1e-6);
}

}  // namespace bose2d
