#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bose2d {

// Truncated bosonic Fock space: `modes` modes (<= 2), occupations 0..nmax
// (<= 12) per mode, dense operators of dimension (nmax+1)^modes.
struct FockSpace {
  int modes = 1;
  int nmax = 12;

  void validate() const;  // throws std::invalid_argument
  int dim() const;

  // annihilation operator of the given mode (kron ordering: mode 0 leftmost)
  Eigen::MatrixXd annihilation(int mode) const;
  Eigen::MatrixXd number(int mode) const;
};

// Weyl-displaced vacuum projector |z><z| built from the unitary
// exp(sum_p z_p a_p^dag - conj(z_p) a_p).  Requires the truncation leakage
// (Poisson tail beyond nmax) to stay below 1e-8; |z|^2 <= nmax/4 suffices.
Eigen::MatrixXcd coherent_state(const FockSpace& space,
                                const std::vector<std::complex<double>>& z);

// Upper (anti-normal) and lower (normal) symbols of the single-mode
// Hamiltonian H = omega a^dag a + (g/2) a^dag a^dag a a at x = |z|^2.
double upper_symbol(double omega, double g, double x);
double lower_symbol(double omega, double g, double x);

// Berezin-Lieb gap Tr e^{-beta H} <= int e^{-beta H^s(z)} d^2z/pi for the
// single-mode quartic Hamiltonian: returns RHS - LHS (>= 0 up to quadrature).
// The radial integral uses Gauss-Laguerre with `quad_nodes` points; throws
// std::runtime_error if the quadrature has not converged to 1e-8 relative.
double berezin_lieb_margin(const FockSpace& space, double omega, double g,
                           double beta, int quad_nodes = 64);

// Tr gamma (ln gamma - ln omega); returns +infinity if gamma has weight
// outside the support of omega.  Inputs must be density matrices.
double relative_entropy(const Eigen::MatrixXcd& gamma,
                        const Eigen::MatrixXcd& omega);

// Partial trace of a (d1 x d2)-partite density matrix; part = 0 keeps the
// first factor, part = 1 the second.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& gamma, int d1, int d2,
                               int part);

// (S(Gamma, Omega1 x Omega2), S(Gamma_1, Omega1) + S(Gamma_2, Omega2)):
// relative-entropy superadditivity under restriction, lhs >= rhs.
std::pair<double, double> superadditivity_check(const Eigen::MatrixXcd& gamma,
                                                const Eigen::MatrixXcd& omega1,
                                                const Eigen::MatrixXcd& omega2);

}  // namespace bose2d
