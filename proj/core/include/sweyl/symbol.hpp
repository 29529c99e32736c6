#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sweyl/phase_space.hpp"

namespace sweyl {

/// Coefficients of the linear change of integration variables
///   Q'' = Q + alpha v,  Q' = Q + beta v,
///   K'' = K + gamma u,  K' = K + delta u   (per axis).
/// Canonicity (unit Jacobian) leaves one free parameter per axis, the origin
/// of the ordering parameter s.
struct CanonicalShift {
  std::vector<double> alpha, beta, gamma, delta;

  static CanonicalShift uniform(double a, double b, double g, double d, int dims = 1);
  int dims() const { return static_cast<int>(alpha.size()); }
};

/// prod_i (alpha_i - beta_i)(gamma_i - delta_i); canonical iff == 1.
double canonicity_jacobian(const CanonicalShift& shift);
bool is_canonical(const CanonicalShift& shift, double tol = 1e-12);

/// r_i = gamma_i (beta_i - alpha_i) / (gamma_i - delta_i)
std::vector<double> r_parameter(const CanonicalShift& shift);
/// s_i = -(1 + 2 r_i), the inverse of r = -(1+s)/2
std::vector<double> s_from_r(const std::vector<double>& r);

/// Complex N x N matrix acting on position-representation sample vectors:
/// (A psi)_j = sum_l entries(j,l) psi_l. The continuum kernel is entries/dq.
struct OperatorMatrix {
  Grid grid;
  Eigen::MatrixXcd entries;
  bool hermitian_hint = false;

  int n() const { return grid.n; }
  void check_hermitian(double tol = 1e-12) const;
};

OperatorMatrix identity_operator(const Grid& grid);
OperatorMatrix position_operator(const Grid& grid);
/// Fourier-diagonal multiplication by p (exactly U* diag(p) U).
OperatorMatrix momentum_operator(const Grid& grid);
/// |psi><psi| with the dq inner product.
OperatorMatrix projector(const WavefunctionGrid& psi);

std::vector<Complex> apply_operator(const OperatorMatrix& a, const WavefunctionGrid& psi);

/// The s-parameterized symbol of an operator,
///   A_w(q, p; s) = int dtau e^{-i tau p/hbar} < q + tau(1+s)/2 | A | q - tau(1-s)/2 >,
/// realized by fractional shifts of the kernel's circular diagonals. Normalized
/// so the identity has symbol 1 and trace(A) = (1/2 pi hbar) sum A_w dq dp.
/// For a projector |psi><psi| this equals 2 pi hbar * s_wigner(psi, s).
PhaseSpaceFunction operator_to_symbol(const OperatorMatrix& a, SParameter s);

/// Exact inverse of operator_to_symbol at the same s.
OperatorMatrix symbol_to_operator(const PhaseSpaceFunction& a_w, SParameter s);

}  // namespace sweyl
