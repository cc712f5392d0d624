#include "bose2d/kernels.hpp"

#include <cmath>
#include <numbers>

#ifdef BOSE2D_HAVE_OPENMP
#include <omp.h>
#endif

namespace bose2d::kernels {

namespace {

// Iterative radix-2 Cooley-Tukey on a stride-1 array of length N.
void fft1d(std::complex<double>* a, int N, bool inverse) {
  // bit reversal
  for (int i = 1, j = 0; i < N; ++i) {
    int bit = N >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= N; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / len;
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < N; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (int k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

template <bool Parallel>
void fft2d_impl(std::complex<double>* data, int N, bool inverse) {
  // rows
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp parallel for if (Parallel && N >= 64) schedule(static)
#endif
  for (int r = 0; r < N; ++r) {
    fft1d(data + static_cast<size_t>(r) * N, N, inverse);
  }
  // columns, via a per-thread gather/scatter buffer
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp parallel if (Parallel && N >= 64)
#endif
  {
    std::vector<std::complex<double>> col(N);
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp for schedule(static)
#endif
    for (int c = 0; c < N; ++c) {
      for (int r = 0; r < N; ++r) col[r] = data[static_cast<size_t>(r) * N + c];
      fft1d(col.data(), N, inverse);
      for (int r = 0; r < N; ++r) data[static_cast<size_t>(r) * N + c] = col[r];
    }
  }
  if (inverse) {
    const double scale = 1.0 / (static_cast<double>(N) * N);
    const size_t n2 = static_cast<size_t>(N) * N;
    for (size_t i = 0; i < n2; ++i) data[i] *= scale;
  }
}

template <bool Parallel>
std::vector<double> sup_in_ball_impl(const TorusGrid& grid,
                                     const std::vector<double>& h, double R) {
  const int N = grid.N;
  const double dx = grid.dx();
  // offsets within the ball of radius R plus one-cell padding
  const int reach = static_cast<int>(std::ceil(R / dx)) + 1;
  std::vector<std::pair<int, int>> offsets;
  for (int o1 = -reach; o1 <= reach; ++o1) {
    for (int o2 = -reach; o2 <= reach; ++o2) {
      if (std::hypot(o1 * dx, o2 * dx) <= R + dx) offsets.emplace_back(o1, o2);
    }
  }
  std::vector<double> out(static_cast<size_t>(N) * N, 0.0);
#ifdef BOSE2D_HAVE_OPENMP
#pragma omp parallel for if (Parallel) schedule(static)
#endif
  for (int i1 = 0; i1 < N; ++i1) {
    for (int i2 = 0; i2 < N; ++i2) {
      const double hx = h[static_cast<size_t>(i1) * N + i2];
      double best = 0.0;
      for (const auto& [o1, o2] : offsets) {
        const int j1 = (i1 - o1 + 4 * N) % N;
        const int j2 = (i2 - o2 + 4 * N) % N;
        best = std::max(best,
                        std::abs(h[static_cast<size_t>(j1) * N + j2] - hx));
      }
      out[static_cast<size_t>(i1) * N + i2] = best;
    }
  }
  return out;
}

}  // namespace

void fft2d_serial(std::complex<double>* data, int N, bool inverse) {
  fft2d_impl<false>(data, N, inverse);
}
void fft2d_parallel(std::complex<double>* data, int N, bool inverse) {
  fft2d_impl<true>(data, N, inverse);
}
void fft2d(std::complex<double>* data, int N, bool inverse, bool parallel) {
  if (parallel) {
    fft2d_parallel(data, N, inverse);
  } else {
    fft2d_serial(data, N, inverse);
  }
}

std::vector<double> sup_in_ball_serial(const TorusGrid& grid,
                                       const std::vector<double>& h,
                                       double R) {
  return sup_in_ball_impl<false>(grid, h, R);
}
std::vector<double> sup_in_ball_parallel(const TorusGrid& grid,
                                         const std::vector<double>& h,
                                         double R) {
  return sup_in_ball_impl<true>(grid, h, R);
}
std::vector<double> sup_in_ball(const TorusGrid& grid,
                                const std::vector<double>& h, double R,
                                bool parallel) {
  return parallel ? sup_in_ball_parallel(grid, h, R)
                  : sup_in_ball_serial(grid, h, R);
}

int thread_count() {
#ifdef BOSE2D_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace bose2d::kernels
