#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bose2d/scattering.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Modified Bessel functions by power series (small arguments only; fine for
// the oracle's x <= ~10).
double bessel_i0(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= (x * x / 4.0) / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}
double bessel_i1(double x) {
  double term = x / 2.0, sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= (x * x / 4.0) / (static_cast<double>(k) * (k + 1.0));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// Closed-form scattering length of the soft disk v = v0 on [0, d]:
// interior solution I0(k r) with k = sqrt(v0/2), matched at d.
double soft_disk_a_closed_form(double v0, double d) {
  const double k = std::sqrt(v0 / 2.0);
  return d * std::exp(-bessel_i0(k * d) / (k * d * bessel_i1(k * d)));
}

// Independent relaxation oracle: second-order finite differences for
// g'' + g'/r - (v/2) g = 0 on a staggered uniform grid, g(R) = 1, reflecting
// (Neumann) inner boundary; Thomas solve; a from the log-derivative at the
// support edge.
double relaxation_oracle_a(const bose2d::RadialPotential& v, double R,
                           int n = 400000) {
  const double h = R / n;
  // nodes r_i = (i + 1/2) h, i = 0..n-1; unknowns g_0..g_{n-1}, g_n = 1 at R
  std::vector<double> lower(n), diag(n), upper(n), rhsv(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * h;
    double vv = v.value(r);
    if (!std::isfinite(vv)) vv = 0.0;  // oracle never used with hard cores
    const double cm = 1.0 / (h * h) - 1.0 / (2.0 * r * h);
    const double cp = 1.0 / (h * h) + 1.0 / (2.0 * r * h);
    lower[i] = cm;
    upper[i] = cp;
    diag[i] = -2.0 / (h * h) - 0.5 * vv;
    if (i == 0) {
      // reflection g_{-1} = g_0 across r = 0
      diag[i] += cm;
      lower[i] = 0.0;
    }
    if (i == n - 1) {
      rhsv[i] = -cp * 1.0;  // boundary value g(R) = 1
      upper[i] = 0.0;
    }
  }
  // Thomas algorithm
  for (int i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhsv[i] -= m * rhsv[i - 1];
  }
  std::vector<double> g(n);
  g[n - 1] = rhsv[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    g[i] = (rhsv[i] - upper[i] * g[i + 1]) / diag[i];
  }
  // extract a at r ~ 2 R0 (well inside the free region) by central difference
  const double r_ext = std::min(2.0 * v.range_R0(), 0.5 * (v.range_R0() + R));
  const int i = static_cast<int>(r_ext / h - 0.5);
  const double r = (i + 0.5) * h;
  const double gp = (g[i + 1] - g[i - 1]) / (2.0 * h);
  return r * std::exp(-g[i] / (r * gp));
}

}  // namespace

TEST_CASE("hard disk: a equals the core radius to 1e-10") {
  for (double d : {0.3, 1.0, 2.5}) {
    const auto v = bose2d::RadialPotential::hard_disk(d);
    const auto res = bose2d::scattering_length(v, 20.0 * d);
    CHECK(std::abs(res.a - d) <= 1e-10 * d);
    CHECK(!res.degenerate);
  }
}

TEST_CASE("v == 0 is degenerate with a = 0") {
  bose2d::RadialPotential v = bose2d::RadialPotential::soft_disk(0.0, 1.0);
  const auto res = bose2d::scattering_length(v, 10.0);
  CHECK(res.degenerate);
  CHECK(res.a == 0.0);
}

TEST_CASE("soft disk vs closed form and relaxation oracle") {
  const double v0 = 4.0, d = 1.0, R = 50.0;
  const auto v = bose2d::RadialPotential::soft_disk(v0, d);
  const auto res = bose2d::scattering_length(v, R);
  const double closed = soft_disk_a_closed_form(v0, d);
  CHECK(std::abs(res.a - closed) <= 1e-8 * closed);
  const double relax = relaxation_oracle_a(v, R);
  CHECK(std::abs(res.a - relax) <= 1e-6 * relax);  // oracle is O(h^2)
}

TEST_CASE("functional energy equals 2 pi / ln(R/a)") {
  // hard disk d=1, R=e: ln(R/a) = 1, so the functional is exactly 2 pi
  const auto hd = bose2d::RadialPotential::hard_disk(1.0);
  const auto res_hd = bose2d::scattering_length(hd, std::exp(1.0));
  CHECK(std::abs(bose2d::functional_energy(hd, res_hd) - 2.0 * kPi) <
        1e-6 * 2.0 * kPi);

  // soft disk: quadrature vs solver cross-check to 1e-6 relative
  const auto sd = bose2d::RadialPotential::soft_disk(4.0, 1.0);
  const auto res_sd = bose2d::scattering_length(sd, 50.0);
  const double expect = 2.0 * kPi / std::log(50.0 / res_sd.a);
  CHECK(std::abs(bose2d::functional_energy(sd, res_sd) - expect) <
        1e-6 * expect);
  CHECK(std::abs(res_sd.functional_value - expect) < 1e-6 * expect);

  // v == 0 with g == 1: zero integrand
  const auto z = bose2d::RadialPotential::soft_disk(0.0, 1.0);
  CHECK(bose2d::functional_energy(z, bose2d::scattering_length(z, 10.0)) ==
        0.0);
}

TEST_CASE("finiteness integral") {
  // zero beyond b
  const auto sd = bose2d::RadialPotential::soft_disk(2.0, 1.0);
  CHECK(bose2d::finiteness_integral(sd, 1.0) == 0.0);
  CHECK(bose2d::finiteness_integral(sd, 2.0) == 0.0);
  // constant v = c on [b, 2b]: closed form
  // 2 pi c int_b^{2b} ln^2(r/b) r dr, u = r/b:
  //   = 2 pi c b^2 int_1^2 ln^2(u) u du
  const double c = 3.0, b = 0.7;
  bose2d::RadialPotential shell;
  shell.segments.push_back({0.0, b, bose2d::PotentialSegment::Kind::kConstant,
                            0.0, {}});
  shell.segments.push_back({b, 2 * b,
                            bose2d::PotentialSegment::Kind::kConstant, c, {}});
  // int_1^2 u ln^2 u du = [u^2/2 ln^2 u - u^2/2 ln u + u^2/4]_1^2
  const double l2 = std::log(2.0);
  const double exact = 2.0 * l2 * l2 - 2.0 * l2 + 1.0 - 0.25;
  const double expect = 2.0 * kPi * c * b * b * exact;
  CHECK(std::abs(bose2d::finiteness_integral(shell, b) - expect) <
        1e-10 * expect);
  // hard-core-only potential with b beyond the core
  const auto hd = bose2d::RadialPotential::hard_disk(0.5);
  CHECK(bose2d::finiteness_integral(hd, 0.6) == 0.0);
  CHECK_THROWS_AS(bose2d::finiteness_integral(hd, 0.0), std::domain_error);
}

TEST_CASE("monotonicity: nested soft disks give nested scattering lengths") {
  double prev = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const auto v = bose2d::RadialPotential::soft_disk(0.5 * k, 1.0);
    const auto res = bose2d::scattering_length(v, 30.0);
    CHECK(res.a >= prev);
    prev = res.a;
  }
}

TEST_CASE("R-independence of the extracted a") {
  const auto v = bose2d::RadialPotential::soft_disk(3.0, 1.0);
  const double R = 3.0;  // = 3 R0
  const double a1 = bose2d::scattering_length(v, R).a;
  const double a2 = bose2d::scattering_length(v, 2.0 * R).a;
  CHECK(std::abs(a1 - a2) <= 1e-9 * a1);
}

TEST_CASE("profile nonnegative and nondecreasing outside the core") {
  const auto v = bose2d::RadialPotential::hard_disk(0.5);
  const auto res = bose2d::scattering_length(v, 10.0);
  double prev = -1.0;
  for (const auto& [r, g] : res.g_samples) {
    CHECK(g >= 0.0);
    CHECK(g >= prev - 1e-12);
    prev = g;
  }
  // normalized boundary value
  CHECK(res.g_samples.back().second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mixed potential: hardcore plus tail, solver vs relaxation on tail "
          "monotonicity") {
  bose2d::RadialPotential v;
  v.segments.push_back({0.0, 0.4, bose2d::PotentialSegment::Kind::kHardcore,
                        0.0, {}});
  v.segments.push_back({0.4, 1.0, bose2d::PotentialSegment::Kind::kConstant,
                        2.0, {}});
  const auto res = bose2d::scattering_length(v, 20.0);
  // a must exceed the bare core radius and stay below the range
  CHECK(res.a > 0.4);
  CHECK(res.a < 1.0);
  // functional consistency
  const double expect = 2.0 * kPi / std::log(20.0 / res.a);
  CHECK(std::abs(bose2d::functional_energy(v, res) - expect) < 1e-6 * expect);
}

TEST_CASE("tabulated potential JSON round trip and solve") {
  const std::string text = R"({"segments":[
    {"r_lo":0.0,"r_hi":0.5,"kind":"const","value":0.0},
    {"r_lo":0.5,"r_hi":1.0,"kind":"tabulated",
     "samples":[[0.5,16.0],[0.75,10.666666666666666],[1.0,8.0]]}]})";
  const auto v = bose2d::RadialPotential::from_json_text(text);
  const auto v2 = bose2d::RadialPotential::from_json_text(v.to_json_text());
  CHECK(v2.range_R0() == doctest::Approx(1.0));
  const auto res = bose2d::scattering_length(v, 30.0);
  CHECK(res.a > 0.0);
  CHECK(res.a < 1.0);
  // The finite-difference oracle is only first-order accurate at the
  // interpolation kinks, so the comparison is looser here.
  const double relax = relaxation_oracle_a(v, 30.0);
  CHECK(std::abs(res.a - relax) <= 5e-4 * relax);
}
