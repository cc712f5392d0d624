#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "bose2d/surgery.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

using bose2d::PotentialSegment;
using bose2d::RadialPotential;

// The fixture zoo: six qualitatively different potentials.
std::vector<RadialPotential> potential_zoo() {
  std::vector<RadialPotential> zoo;
  zoo.push_back(RadialPotential::hard_disk(1.0));  // pure hard disk

  RadialPotential hd_shell = RadialPotential::hard_disk(1.0);
  hd_shell.segments.push_back(
      {1.0, 2.0, PotentialSegment::Kind::kConstant, 1.0, {}});
  zoo.push_back(hd_shell);  // hard disk plus constant shell

  zoo.push_back(RadialPotential::soft_disk(4.0, 1.0));  // soft disk

  RadialPotential two_step;
  two_step.segments.push_back(
      {0.0, 0.5, PotentialSegment::Kind::kConstant, 6.0, {}});
  two_step.segments.push_back(
      {0.5, 1.0, PotentialSegment::Kind::kConstant, 2.0, {}});
  zoo.push_back(two_step);  // two-step profile

  RadialPotential ramp;
  ramp.segments.push_back({0.0, 1.0, PotentialSegment::Kind::kTabulated, 0.0,
                           {{0.0, 5.0}, {0.5, 2.5}, {1.0, 0.0}}});
  zoo.push_back(ramp);  // linear ramp

  RadialPotential inv_r;  // ~ 8/r sampled on [0.5, 1], zero inside
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i <= 16; ++i) {
    const double r = 0.5 + 0.5 * i / 16.0;
    samples.emplace_back(r, 8.0 / r);
  }
  inv_r.segments.push_back(
      {0.0, 0.5, PotentialSegment::Kind::kConstant, 0.0, {}});
  inv_r.segments.push_back(
      {0.5, 1.0, PotentialSegment::Kind::kTabulated, 0.0, samples});
  zoo.push_back(inv_r);
  return zoo;
}

// 0 <= v_tilde <= v on a dense radial grid (hard core counts as +inf).
void check_dominated(const RadialPotential& tilde, const RadialPotential& v) {
  const double R0 = v.range_R0();
  for (int i = 0; i < 2000; ++i) {
    const double r = R0 * (i + 0.5) / 2000.0;
    const double vt = tilde.value(r);
    CHECK(vt >= 0.0);
    CHECK(vt <= v.value(r) * (1 + 1e-12) + 1e-12);
  }
}

double profile_at(const bose2d::ScatteringResult& res, double r) {
  const auto& gs = res.g_samples;
  for (size_t i = 0; i + 1 < gs.size(); ++i) {
    if (r >= gs[i].first && r <= gs[i + 1].first) {
      const double t = (r - gs[i].first) / (gs[i + 1].first - gs[i].first);
      return gs[i].second + t * (gs[i + 1].second - gs[i].second);
    }
  }
  return r < gs.front().first ? gs.front().second : gs.back().second;
}

}  // namespace

TEST_CASE("cutoff beyond the support is the identity with equality") {
  const auto v = bose2d::RadialPotential::soft_disk(3.0, 1.0);
  const auto [cut, rep] = bose2d::cutoff_range(v, 2.0, 40.0);
  CHECK(rep.original_a == doctest::Approx(rep.modified_a).epsilon(1e-12));
  CHECK(rep.bound_lhs == doctest::Approx(rep.bound_rhs).epsilon(1e-12));
  CHECK(rep.holds(1e-12));
}

TEST_CASE("hard disk + shell cut at 1.5 certifies with positive slack") {
  RadialPotential v = RadialPotential::hard_disk(1.0);
  v.segments.push_back({1.0, 2.0, PotentialSegment::Kind::kConstant, 1.0, {}});
  const auto [cut, rep] = bose2d::cutoff_range(v, 1.5, 100.0);
  CHECK(rep.modified_a <= rep.original_a * (1 + 1e-12));
  CHECK(rep.bound_lhs > rep.bound_rhs);
  CHECK(cut.range_R0() == doctest::Approx(1.5));
}

TEST_CASE("monotonicity under nested cut radii") {
  RadialPotential v = RadialPotential::hard_disk(1.0);
  v.segments.push_back({1.0, 2.0, PotentialSegment::Kind::kConstant, 1.0, {}});
  const double a12 = bose2d::cutoff_range(v, 1.2, 100.0).second.modified_a;
  const double a18 = bose2d::cutoff_range(v, 1.8, 100.0).second.modified_a;
  const double a = bose2d::scattering_length(v, 100.0).a;
  CHECK(a12 <= a18 * (1 + 1e-12));
  CHECK(a18 <= a * (1 + 1e-12));
}

TEST_CASE("cutoff degenerate guard") {
  RadialPotential v;
  v.segments.push_back({0.0, 1.0, PotentialSegment::Kind::kConstant, 0.0, {}});
  v.segments.push_back({1.0, 2.0, PotentialSegment::Kind::kConstant, 3.0, {}});
  CHECK_THROWS_AS(bose2d::cutoff_range(v, 0.5, 10.0), std::runtime_error);
}

TEST_CASE("cap no-op when the budget already holds (exactly saturated)") {
  // soft disk v0 on [0,d]: int r v dr = v0 d^2/2; pick phi = v0 d^2/4
  const double v0 = 4.0, d = 1.0;
  const auto v = bose2d::RadialPotential::soft_disk(v0, d);
  const double phi = v0 * d * d / 4.0;
  const auto [tilde, rep] = bose2d::cap_integral(v, phi, 0.5, 50.0);
  // saturated budget is classified as case 1 with s at the origin (the tail
  // is the whole potential): v_tilde == v either way
  CHECK(rep.integral_2d <= 4.0 * kPi * phi * (1 + 1e-10));
  CHECK(rep.integral_2d == doctest::Approx(4.0 * kPi * phi).epsilon(1e-8));
  CHECK(rep.modified_a == doctest::Approx(rep.original_a).epsilon(1e-6));
  check_dominated(tilde, v);
}

TEST_CASE("integrable 1/r tail with generous budget: v_tilde = v") {
  auto zoo = potential_zoo();
  const auto& inv_r = zoo.back();
  const double I = inv_r.integral_rv(0.0, 1.0);  // = int 8 dr = 4 (approx)
  const auto [tilde, rep] =
      bose2d::cap_integral(inv_r, 0.75 * I, 0.5, 50.0);  // 2 phi = 1.5 I > I
  CHECK(rep.construction_case == bose2d::SurgeryCase::kCapNoop);
  CHECK(rep.modified_a == doctest::Approx(rep.original_a).epsilon(1e-12));
  CHECK(rep.holds(1e-12));
}

TEST_CASE("case 1 tail construction on a strong shell") {
  RadialPotential v;
  v.segments.push_back({0.0, 0.1, PotentialSegment::Kind::kConstant, 0.0, {}});
  v.segments.push_back({0.1, 1.0, PotentialSegment::Kind::kConstant, 100.0, {}});
  const double phi = 2.0;  // 2 phi = 4 << int r v dr = 49.5
  const auto [tilde, rep] = bose2d::cap_integral(v, phi, 0.5, 100.0);
  CHECK(rep.construction_case == bose2d::SurgeryCase::kCapCase1Tail);
  CHECK(rep.integral_2d <= 4.0 * kPi * phi * (1 + 1e-10));
  CHECK(rep.integral_2d == doctest::Approx(4.0 * kPi * phi).epsilon(1e-8));
  CHECK(rep.holds(0.0));
  check_dominated(tilde, v);

  // proof-side bound on the minimizer of the capped potential at s
  const auto res = bose2d::scattering_length(tilde, 100.0);
  const double lna = std::log(100.0 / rep.original_a);
  CHECK(profile_at(res, rep.s_or_t) <= 1.0 / std::sqrt(phi * lna) + 1e-10);
}

TEST_CASE("case 2 shaving of a hard core") {
  const auto v = bose2d::RadialPotential::hard_disk(1.0);
  const double phi = 1.0, delta = 0.5;
  const auto [tilde, rep] = bose2d::cap_integral(v, phi, delta, 100.0);
  CHECK(rep.construction_case == bose2d::SurgeryCase::kCapCase2Shave);
  CHECK(rep.tau.has_value());
  // shell integral: tau * t^2 delta (2 - delta) / 2 = T = 2 phi
  const double expect_tau = 2.0 * 2.0 * phi / (delta * (2.0 - delta));
  CHECK(*rep.tau == doctest::Approx(expect_tau).epsilon(1e-10));
  CHECK(rep.integral_2d <= 4.0 * kPi * phi * (1 + 1e-10));
  CHECK(rep.holds(0.0));
  CHECK(rep.modified_a <= rep.original_a);
  check_dominated(tilde, v);
}

TEST_CASE("zoo x 20 randomized draws: both certificates hold, zero failures") {
  auto zoo = potential_zoo();
  std::mt19937_64 rng(20260824ull);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const auto& v : zoo) {
    const double R0 = v.range_R0();
    for (int draw = 0; draw < 20; ++draw) {
      const double phi = 0.3 + 2.7 * u01(rng);
      const double delta = 0.1 + 0.8 * u01(rng);
      const double R = 50.0 + 150.0 * u01(rng);

      // integral capping certificate
      const auto [tilde, rep] = bose2d::cap_integral(v, phi, delta, R);
      CHECK(rep.integral_2d <= 4.0 * kPi * phi * (1 + 1e-10));
      CHECK(rep.holds(1e-12));
      check_dominated(tilde, v);

      // range-cutoff certificate; skip draws where the truncated
      // potential vanishes identically (degenerate logarithms)
      const double R0_new = R0 * (0.2 + 0.75 * u01(rng));
      try {
        const auto [cut, crep] = bose2d::cutoff_range(v, R0_new, R);
        CHECK(crep.holds(1e-12));
        CHECK(crep.modified_a <= crep.original_a * (1 + 1e-12));
        check_dominated(cut, v);
      } catch (const std::runtime_error&) {
        // degenerate truncation — allowed outcome for zero-inner potentials
      }
    }
  }
}

TEST_CASE("budget-optimal delta preset") {
  const double d = bose2d::optimal_delta(25.0, 4.0);
  CHECK(d == doctest::Approx(0.4));
  CHECK(bose2d::optimal_delta(1.0, 9.0) < 1.0);  // clamped
}
