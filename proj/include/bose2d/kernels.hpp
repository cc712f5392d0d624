#pragma once

#include <complex>
#include <vector>

#include "bose2d/torus.hpp"

namespace bose2d::kernels {

// In-place 2D complex FFT on an N x N row-major array, N a power of two.
// inverse = true applies the unnormalized inverse transform scaled by 1/N^2.
// The parallel variant distributes row/column transforms over OpenMP threads;
// the serial variant is the reference implementation kept for testing.
void fft2d_serial(std::complex<double>* data, int N, bool inverse);
void fft2d_parallel(std::complex<double>* data, int N, bool inverse);
void fft2d(std::complex<double>* data, int N, bool inverse, bool parallel);

// out(x) = max over grid offsets y with |y| <= R (+ one-cell padding) of
// |h(x-y) - h(x)|; the discrete sup behind the field f_R.
std::vector<double> sup_in_ball_serial(const TorusGrid& grid,
                                       const std::vector<double>& h, double R);
std::vector<double> sup_in_ball_parallel(const TorusGrid& grid,
                                         const std::vector<double>& h,
                                         double R);
std::vector<double> sup_in_ball(const TorusGrid& grid,
                                const std::vector<double>& h, double R,
                                bool parallel);

// Number of threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace bose2d::kernels
