#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bose2d/quantum_toy.hpp"

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd G(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::MatrixXcd rho = G * G.adjoint();
  rho /= rho.trace().real();
  return rho;
}

double trace_norm(const Eigen::MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  return es.eigenvalues().cwiseAbs().sum();
}

// int_0^X e^{-x} x^n / n! dx by the standard recurrence
double poisson_mass(int n, double X) {
  // P_n = P_{n-1} - e^{-X} X^n / n!
  double p = 1.0 - std::exp(-X);
  double term = std::exp(-X);
  for (int k = 1; k <= n; ++k) {
    term *= X / k;
    p -= term;
  }
  return p;
}

}  // namespace

TEST_CASE("canonical commutator holds below the truncation edge") {
  for (int modes : {1, 2}) {
    bose2d::FockSpace space{modes, 6};
    for (int m = 0; m < modes; ++m) {
      const Eigen::MatrixXd a = space.annihilation(m);
      const Eigen::MatrixXd comm = a * a.transpose() - a.transpose() * a;
      // on states with occupation < nmax in mode m the commutator is 1
      for (int i = 0; i < space.dim(); ++i) {
        const int occ = modes == 1 ? i : (m == 0 ? i / 7 : i % 7);
        if (occ >= space.nmax) continue;
        CHECK(comm(i, i) == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("coherent states: vacuum, eigenproperty, overlap") {
  bose2d::FockSpace space{1, 12};
  // z = 0 is the vacuum projector
  const auto vac = bose2d::coherent_state(space, {Complex(0.0, 0.0)});
  CHECK(std::abs(vac(0, 0) - 1.0) < 1e-14);
  CHECK(vac.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // <z| a^dag a |z> = |z|^2 at |z|^2 = 1
  const Complex z(0.6, 0.8);
  const auto rho = bose2d::coherent_state(space, {z});
  const Eigen::MatrixXcd n = space.number(0).cast<Complex>();
  CHECK(std::abs((rho * n).trace().real() - 1.0) < 1e-8);

  // a|z> = z|z> to truncation tolerance
  const Eigen::MatrixXcd a = space.annihilation(0).cast<Complex>();
  const Eigen::MatrixXcd residual = a * rho * a.adjoint() - std::norm(z) * rho;
  CHECK(residual.norm() < 1e-4);  // edge effects are first-order in a rho a^dag

  // |<z|w>|^2 = e^{-|z-w|^2}
  for (const Complex w : {Complex(0.2, -0.5), Complex(-1.0, 0.3)}) {
    const auto rho_w = bose2d::coherent_state(space, {w});
    const double overlap = (rho * rho_w).trace().real();
    CHECK(std::abs(overlap - std::exp(-std::norm(z - w))) < 1e-8);
  }

  // leakage guard
  CHECK_THROWS_AS(bose2d::coherent_state(space, {Complex(3.0, 0.0)}),
                  std::runtime_error);
}

TEST_CASE("coherent family resolves the identity radially") {
  bose2d::FockSpace space{1, 12};
  const double X = 1.2;  // radial window keeping the Poisson tail below 1e-8
  const int nr = 120, nphi = 32;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int i = 0; i < nr; ++i) {
    const double x = X * (i + 0.5) / nr;  // midpoint rule in x = |z|^2
    for (int k = 0; k < nphi; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / nphi;
      const Complex z = std::sqrt(x) * std::polar(1.0, phi);
      acc += bose2d::coherent_state(space, {z}) * (X / nr / nphi);
    }
  }
  // diagonal entries match int_0^X e^{-x} x^n/n! dx; off-diagonals vanish
  for (int n = 0; n <= 4; ++n) {
    CHECK(std::abs(acc(n, n).real() - poisson_mass(n, X)) < 1e-4);
  }
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      if (i != j) CHECK(std::abs(acc(i, j)) < 1e-10);
    }
  }
}

TEST_CASE("symbol identities for the quartic Hamiltonian") {
  bose2d::FockSpace space{1, 12};
  const double omega = 1.3, g = 0.7;
  const Eigen::MatrixXcd a = space.annihilation(0).cast<Complex>();
  const Eigen::MatrixXcd H =
      omega * (a.adjoint() * a) +
      0.5 * g * (a.adjoint() * a.adjoint() * a * a);
  // lower symbol <z|H|z> = omega |z|^2 + (g/2)|z|^4
  for (const Complex z : {Complex(0.4, 0.1), Complex(-0.9, 0.7)}) {
    const auto rho = bose2d::coherent_state(space, {z});
    const double x = std::norm(z);
    CHECK(std::abs((rho * H).trace().real() -
                   bose2d::lower_symbol(omega, g, x)) < 1e-8);
  }
  // symbol gap: lower - upper = omega + 2 g x - g exactly
  for (double x : {0.0, 0.5, 1.7, 3.0}) {
    const double gap = bose2d::lower_symbol(omega, g, x) -
                       bose2d::upper_symbol(omega, g, x);
    CHECK(gap == doctest::Approx(omega + 2.0 * g * x - g).epsilon(1e-12));
  }
}

TEST_CASE("Berezin-Lieb margin nonnegative on the parameter grid") {
  bose2d::FockSpace space{1, 12};
  for (double omega : {0.5, 1.0, 2.0}) {
    for (double g : {0.5, 1.0, 2.0}) {
      for (double beta : {0.5, 1.0, 2.0}) {
        const double margin = bose2d::berezin_lieb_margin(space, omega, g, beta);
        CHECK(margin >= -1e-8);
      }
    }
  }
}

TEST_CASE("Berezin-Lieb against the free geometric-series oracle") {
  bose2d::FockSpace space{1, 12};
  const double omega = 1.0, beta = 3.0;
  double lhs = 0.0;
  for (int n = 0; n <= space.nmax; ++n) lhs += std::exp(-beta * omega * n);
  // RHS for g = 0: int_0^inf e^{-beta omega (x-1)} dx = e^{beta omega}/(beta omega)
  const double rhs = std::exp(beta * omega) / (beta * omega);
  const double margin = bose2d::berezin_lieb_margin(space, omega, 0.0, beta);
  CHECK(margin == doctest::Approx(rhs - lhs).epsilon(1e-8));
  CHECK(margin >= 0.0);
}

TEST_CASE("relative entropy: identity, classical KL, support violation") {
  std::mt19937_64 rng(20260824ull);
  const auto rho = random_density(5, rng);
  CHECK(std::abs(bose2d::relative_entropy(rho, rho)) < 1e-10);

  // commuting diagonal pair reduces to the classical KL divergence
  Eigen::VectorXd p(4), q(4);
  p << 0.1, 0.2, 0.3, 0.4;
  q << 0.4, 0.3, 0.2, 0.1;
  Eigen::MatrixXcd P = p.cast<Complex>().asDiagonal();
  Eigen::MatrixXcd Q = q.cast<Complex>().asDiagonal();
  double kl = 0.0;
  for (int i = 0; i < 4; ++i) kl += p(i) * std::log(p(i) / q(i));
  CHECK(bose2d::relative_entropy(P, Q) == doctest::Approx(kl).epsilon(1e-12));

  // weight outside the support of omega
  Eigen::MatrixXcd sing = Eigen::MatrixXcd::Zero(4, 4);
  sing(0, 0) = 1.0;
  Eigen::MatrixXcd wide = Eigen::MatrixXcd::Identity(4, 4) / 4.0;
  CHECK(std::isinf(bose2d::relative_entropy(wide, sing)));
}

TEST_CASE("Pinsker inequality on 500 seeded pairs") {
  std::mt19937_64 rng(91ull);
  std::uniform_int_distribution<int> dim_pick(2, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = dim_pick(rng);
    const auto gamma = random_density(dim, rng);
    const auto omega = random_density(dim, rng);
    const double s = bose2d::relative_entropy(gamma, omega);
    const double t1 = trace_norm(gamma - omega);
    CHECK(s >= 0.5 * t1 * t1 - 1e-10);
  }
}

TEST_CASE("relative-entropy superadditivity under restriction") {
  std::mt19937_64 rng(7ull);
  // product state: equality
  const auto om1 = random_density(3, rng);
  const auto om2 = random_density(4, rng);
  const auto g1 = random_density(3, rng);
  const auto g2 = random_density(4, rng);
  Eigen::MatrixXcd product(12, 12);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      product.block(i * 4, j * 4, 4, 4) = g1(i, j) * g2;
    }
  }
  auto [lhs_p, rhs_p] = bose2d::superadditivity_check(product, om1, om2);
  CHECK(lhs_p == doctest::Approx(rhs_p).epsilon(1e-10));

  // maximally entangled state vs a full-rank product: strict inequality
  Eigen::MatrixXcd bell = Eigen::MatrixXcd::Zero(4, 4);
  for (int i : {0, 3}) {
    for (int j : {0, 3}) bell(i, j) = 0.5;
  }
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  auto [lhs_b, rhs_b] = bose2d::superadditivity_check(bell, mixed, mixed);
  CHECK(lhs_b > rhs_b + 0.1);

  // 50 random bipartite draws
  for (int trial = 0; trial < 50; ++trial) {
    const auto gamma = random_density(6, rng);
    const auto o1 = random_density(2, rng);
    const auto o2 = random_density(3, rng);
    auto [lhs, rhs] = bose2d::superadditivity_check(gamma, o1, o2);
    CHECK(lhs >= rhs - 1e-10);
  }
}
