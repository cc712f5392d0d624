#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "bose2d/kernels.hpp"
#include "bose2d/lanczos.hpp"
#include "bose2d/torus.hpp"

namespace {

std::vector<std::complex<double>> random_field(int N, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> v(static_cast<size_t>(N) * N);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_CASE("fft2d: forward matches the direct DFT on a small grid") {
  const int N = 16;
  auto data = random_field(N, 7u);
  auto ref = data;
  bose2d::kernels::fft2d_serial(data.data(), N, false);
  const double w = -2.0 * std::numbers::pi / N;
  for (int k1 = 0; k1 < N; ++k1) {
    for (int k2 = 0; k2 < N; ++k2) {
      std::complex<double> acc = 0.0;
      for (int x1 = 0; x1 < N; ++x1) {
        for (int x2 = 0; x2 < N; ++x2) {
          acc += ref[x1 * N + x2] *
                 std::polar(1.0, w * (k1 * x1 + k2 * x2));
        }
      }
      CHECK(std::abs(data[k1 * N + k2] - acc) < 1e-10);
    }
  }
}

TEST_CASE("fft2d: roundtrip identity") {
  for (int N : {16, 64, 128}) {
    auto data = random_field(N, 100u + N);
    const auto ref = data;
    bose2d::kernels::fft2d_serial(data.data(), N, false);
    bose2d::kernels::fft2d_serial(data.data(), N, true);
    double worst = 0.0;
    for (size_t i = 0; i < data.size(); ++i) {
      worst = std::max(worst, std::abs(data[i] - ref[i]));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("fft2d: serial and parallel agree to machine precision") {
  for (int N : {64, 128, 256}) {
    auto a = random_field(N, 33u + N);
    auto b = a;
    bose2d::kernels::fft2d_serial(a.data(), N, false);
    bose2d::kernels::fft2d_parallel(b.data(), N, false);
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    // identical butterfly schedule: results should agree bitwise, allow 1e-15
    CHECK(worst <= 1e-15);
  }
}

TEST_CASE("sup_in_ball: serial vs parallel, and hand-checked values") {
  bose2d::TorusGrid grid{8.0, 64};
  std::mt19937_64 rng(5u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> h(grid.size());
  for (auto& v : h) v = u(rng);
  for (double R : {0.5, 1.5, 3.0}) {
    const auto s = bose2d::kernels::sup_in_ball_serial(grid, h, R);
    const auto p = bose2d::kernels::sup_in_ball_parallel(grid, h, R);
    REQUIRE(s.size() == p.size());
    for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
  }
  // single spike: sup is |spike - h(x)| wherever the spike is in reach
  std::fill(h.begin(), h.end(), 0.0);
  h[0] = 1.0;
  const double R = 1.0;
  const auto s = bose2d::kernels::sup_in_ball_serial(grid, h, R);
  CHECK(s[0] == 1.0);  // sees its own drop to a neighbor
  const int far = (grid.N / 2) * grid.N + grid.N / 2;  // distance ~ 5.6 > R
  CHECK(s[far] == 0.0);
  const int near = 2;  // distance 0.25 <= R from the spike
  CHECK(s[near] == 1.0);
}

TEST_CASE("spectral operator: symmetry and known eigenvalues") {
  bose2d::TorusGrid grid{4.0, 16};
  bose2d::SpectralOperator op;
  op.grid = grid;
  op.multiplier.assign(grid.size(), 0.0);
  op.diagonal.assign(grid.size(), 0.0);
  for (int k1 = 0; k1 < grid.N; ++k1) {
    for (int k2 = 0; k2 < grid.N; ++k2) {
      const double p1 = grid.momentum(k1), p2 = grid.momentum(k2);
      op.multiplier[k1 * grid.N + k2] = p1 * p1 + p2 * p2;
    }
  }
  // pure Laplacian: lambda_min = 0, lambda_max = 2 (pi N / L)^2
  const auto res = bose2d::lanczos_extreme(op, 400, 1e-11, false);
  CHECK(res.converged);
  CHECK(std::abs(res.lambda_min) < 1e-9);
  const double pmax = std::numbers::pi * grid.N / grid.L;
  CHECK(res.lambda_max == doctest::Approx(2 * pmax * pmax).epsilon(1e-8));

  // symmetry check <u, A w> = <A u, w> on random vectors
  std::mt19937_64 rng(11u);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  std::vector<double> uvec(grid.size()), wvec(grid.size());
  for (auto& v : op.diagonal) v = un(rng);
  for (auto& v : uvec) v = un(rng);
  for (auto& v : wvec) v = un(rng);
  std::vector<double> Au, Aw;
  op.apply(uvec, &Au, false);
  op.apply(wvec, &Aw, false);
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    lhs += uvec[i] * Aw[i];
    rhs += Au[i] * wvec[i];
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("spectral operator: diagonal-only spectrum is exact") {
  bose2d::TorusGrid grid{2.0, 16};
  bose2d::SpectralOperator op;
  op.grid = grid;
  op.multiplier.assign(grid.size(), 0.0);
  op.diagonal.assign(grid.size(), 0.0);
  std::mt19937_64 rng(3u);
  std::uniform_real_distribution<double> u(-2.0, 5.0);
  double lo = 1e300, hi = -1e300;
  for (auto& v : op.diagonal) {
    v = u(rng);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const auto res = bose2d::lanczos_extreme(op, 400, 1e-11, true);
  CHECK(res.converged);
  CHECK(res.lambda_min == doctest::Approx(lo).epsilon(1e-9));
  CHECK(res.lambda_max == doctest::Approx(hi).epsilon(1e-9));
}
