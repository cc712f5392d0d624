#include "bose2d/quantum_toy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bose2d/quadrature.hpp"

namespace bose2d {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXd single_mode_annihilation(int nmax) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nmax + 1, nmax + 1);
  for (int n = 1; n <= nmax; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  Eigen::MatrixXd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return out;
}

}  // namespace

void FockSpace::validate() const {
  if (modes < 1 || modes > 2) {
    throw std::invalid_argument("FockSpace: modes must be 1 or 2");
  }
  if (nmax < 1 || nmax > 12) {
    throw std::invalid_argument("FockSpace: nmax must be in [1, 12]");
  }
}

int FockSpace::dim() const {
  int d = 1;
  for (int m = 0; m < modes; ++m) d *= nmax + 1;
  return d;
}

Eigen::MatrixXd FockSpace::annihilation(int mode) const {
  validate();
  if (mode < 0 || mode >= modes) {
    throw std::invalid_argument("FockSpace: mode out of range");
  }
  const Eigen::MatrixXd a = single_mode_annihilation(nmax);
  if (modes == 1) return a;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(nmax + 1, nmax + 1);
  return mode == 0 ? kron(a, id) : kron(id, a);
}

Eigen::MatrixXd FockSpace::number(int mode) const {
  const Eigen::MatrixXd a = annihilation(mode);
  return a.transpose() * a;
}

Eigen::MatrixXcd coherent_state(const FockSpace& space,
                                const std::vector<Complex>& z) {
  space.validate();
  if (static_cast<int>(z.size()) != space.modes) {
    throw std::invalid_argument("coherent_state: one amplitude per mode");
  }
  double z2 = 0.0;
  for (const auto& zp : z) z2 += std::norm(zp);
  // Poisson tail beyond the per-mode cutoff bounds the truncation leakage
  double tail = 1.0;
  double term = std::exp(-z2);
  for (int n = 0; n <= space.nmax; ++n) {
    tail -= term;
    term *= z2 / (n + 1);
  }
  if (tail > 1e-8) {
    throw std::runtime_error("coherent_state: truncation leakage above 1e-8");
  }

  const int d = space.dim();
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < space.modes; ++m) {
    const Eigen::MatrixXd a = space.annihilation(m);
    K += z[m] * a.transpose().cast<Complex>() - std::conj(z[m]) * a.cast<Complex>();
  }
  // K is anti-Hermitian: exp(K) = exp(-iH) with H = iK Hermitian
  const Eigen::MatrixXcd H = Complex(0.0, 1.0) * K;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  Eigen::VectorXcd phases(d);
  for (int i = 0; i < d; ++i) {
    phases(i) = std::polar(1.0, -es.eigenvalues()(i));
  }
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(d);
  vac(0) = 1.0;
  const Eigen::VectorXcd psi =
      es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * vac));
  return psi * psi.adjoint();
}

double upper_symbol(double omega, double g, double x) {
  return omega * (x - 1.0) + 0.5 * g * (x * x - 4.0 * x + 2.0);
}

double lower_symbol(double omega, double g, double x) {
  return omega * x + 0.5 * g * x * x;
}

double berezin_lieb_margin(const FockSpace& space, double omega, double g,
                           double beta, int quad_nodes) {
  space.validate();
  if (space.modes != 1) {
    throw std::invalid_argument("berezin_lieb_margin: single mode only");
  }
  if (!(beta > 0.0) || g < 0.0 || omega < 0.0) {
    throw std::invalid_argument("berezin_lieb_margin: bad parameters");
  }
  // LHS exactly: H is diagonal in the number basis
  double lhs = 0.0;
  for (int n = 0; n <= space.nmax; ++n) {
    lhs += std::exp(-beta * (omega * n + 0.5 * g * n * (n - 1)));
  }
  // RHS: radial integral of e^{-beta H^s}, d^2z/pi = dx (x = |z|^2).  The
  // adaptive rule controls the absolute truncation mass directly; the fixed
  // Gauss-Laguerre grid cross-checks it to its own (coarser) accuracy.
  auto integrand = [&](double x) {
    return std::exp(-beta * upper_symbol(omega, g, x));
  };
  const QuadResult rhs_q = integrate_to_inf(integrand, 0.0, 1e-14, 1e-12);
  if (!(rhs_q.error <= 1e-8 * std::abs(rhs_q.value))) {
    throw std::runtime_error(
        "berezin_lieb_margin: radial quadrature not converged");
  }
  std::vector<double> xs(quad_nodes), ws(quad_nodes);
  gauss_laguerre(quad_nodes, xs.data(), ws.data());
  double gl = 0.0;
  for (int i = 0; i < quad_nodes; ++i) {
    gl += ws[i] * std::exp(xs[i]) * integrand(xs[i]);
  }
  if (std::abs(gl - rhs_q.value) > 1e-4 * std::abs(rhs_q.value)) {
    throw std::runtime_error(
        "berezin_lieb_margin: quadrature grids disagree");
  }
  return rhs_q.value - lhs;
}

double relative_entropy(const Eigen::MatrixXcd& gamma,
                        const Eigen::MatrixXcd& omega) {
  const double tol = 1e-12;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eg(gamma), eo(omega);
  // S = sum_i lam_i ln lam_i - sum_{ij} lam_i |<g_i|o_j>|^2 ln mu_j
  double s = 0.0;
  for (int i = 0; i < gamma.rows(); ++i) {
    const double lam = eg.eigenvalues()(i);
    if (lam <= tol) continue;
    s += lam * std::log(lam);
    for (int j = 0; j < omega.rows(); ++j) {
      const double mu = eo.eigenvalues()(j);
      const double overlap =
          std::norm(eg.eigenvectors().col(i).dot(eo.eigenvectors().col(j)));
      if (overlap <= tol) continue;
      if (mu <= tol) {
        return std::numeric_limits<double>::infinity();  // support violation
      }
      s -= lam * overlap * std::log(mu);
    }
  }
  return s;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& gamma, int d1, int d2,
                               int part) {
  if (gamma.rows() != d1 * d2 || gamma.cols() != d1 * d2) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (part == 0) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d1, d1);
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d1; ++j) {
        for (int k = 0; k < d2; ++k) out(i, j) += gamma(i * d2 + k, j * d2 + k);
      }
    }
    return out;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d2, d2);
  for (int i = 0; i < d2; ++i) {
    for (int j = 0; j < d2; ++j) {
      for (int k = 0; k < d1; ++k) out(i, j) += gamma(k * d2 + i, k * d2 + j);
    }
  }
  return out;
}

std::pair<double, double> superadditivity_check(const Eigen::MatrixXcd& gamma,
                                                const Eigen::MatrixXcd& omega1,
                                                const Eigen::MatrixXcd& omega2) {
  const int d1 = static_cast<int>(omega1.rows());
  const int d2 = static_cast<int>(omega2.rows());
  Eigen::MatrixXcd product(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) {
      product.block(i * d2, j * d2, d2, d2) = omega1(i, j) * omega2;
    }
  }
  const double lhs = relative_entropy(gamma, product);
  const double rhs = relative_entropy(partial_trace(gamma, d1, d2, 0), omega1) +
                     relative_entropy(partial_trace(gamma, d1, d2, 1), omega2);
  return {lhs, rhs};
}

}  // namespace bose2d
