// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Verifies agreement before timing; reports the median of
// repeated runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "bose2d/kernels.hpp"
#include "bose2d/torus.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double median_time(const std::function<void()>& fn, int reps) {
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void bench_fft(int N, int reps) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> base(static_cast<size_t>(N) * N);
  for (auto& z : base) z = {u(rng), u(rng)};

  // correctness gate: both variants must agree to near machine precision
  auto serial = base, parallel = base;
  bose2d::kernels::fft2d_serial(serial.data(), N, false);
  bose2d::kernels::fft2d_parallel(parallel.data(), N, false);
  double dev = 0.0, scale = 0.0;
  for (size_t i = 0; i < serial.size(); ++i) {
    dev = std::max(dev, std::abs(serial[i] - parallel[i]));
    scale = std::max(scale, std::abs(serial[i]));
  }
  if (dev > 1e-12 * scale) {
    std::printf("fft2d N=%d: MISMATCH (%.3e rel)\n", N, dev / scale);
    return;
  }

  std::vector<std::complex<double>> work(base.size());
  const double ts = median_time(
      [&] {
        work = base;
        bose2d::kernels::fft2d_serial(work.data(), N, false);
      },
      reps);
  const double tp = median_time(
      [&] {
        work = base;
        bose2d::kernels::fft2d_parallel(work.data(), N, false);
      },
      reps);
  std::printf("fft2d         N=%5d  serial %8.3f ms  parallel %8.3f ms  "
              "speedup %.2fx\n",
              N, 1e3 * ts, 1e3 * tp, ts / tp);
}

void bench_sup(int N, double R, int reps) {
  bose2d::TorusGrid grid{16.0, N};
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> h(grid.size());
  for (auto& v : h) v = u(rng);

  const auto serial = bose2d::kernels::sup_in_ball_serial(grid, h, R);
  const auto parallel = bose2d::kernels::sup_in_ball_parallel(grid, h, R);
  if (serial != parallel) {
    std::printf("sup_in_ball N=%d: MISMATCH\n", N);
    return;
  }

  const double ts = median_time(
      [&] { bose2d::kernels::sup_in_ball_serial(grid, h, R); }, reps);
  const double tp = median_time(
      [&] { bose2d::kernels::sup_in_ball_parallel(grid, h, R); }, reps);
  std::printf("sup_in_ball   N=%5d  serial %8.3f ms  parallel %8.3f ms  "
              "speedup %.2fx   (R = %.2f)\n",
              N, 1e3 * ts, 1e3 * tp, ts / tp, R);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", bose2d::kernels::thread_count());
  for (int N : {256, 512, 1024}) bench_fft(N, 9);
  for (int N : {128, 256, 512}) bench_sup(N, 2.0, 5);
  return 0;
}
