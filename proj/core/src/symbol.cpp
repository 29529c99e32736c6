#include "sweyl/symbol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sweyl/fft.hpp"

namespace sweyl {

namespace {

void check_shift_s(const Grid& g, SParameter s, const char* who) {
  // Diagonal shifts go up to |a| tau_max with a = (1+s)/2; only Im(a tau)
  // matters for the ramp guard, i.e. |Im s| tau_max / 2.
  const double lim = 4.0 * kDefaultRampGuard / (std::numbers::pi * g.n);
  if (std::abs(s.value.imag()) > lim) {
    std::ostringstream os;
    os << who << ": |Im s| exceeds the shift guard on this grid (max admissible |Im s| = " << lim
       << ")";
    throw NumericalGuardError(os.str());
  }
}
}  // namespace

CanonicalShift CanonicalShift::uniform(double a, double b, double g, double d, int dims) {
  if (dims < 1) throw ValidationError("CanonicalShift: dims must be >= 1");
  CanonicalShift s;
  s.alpha.assign(dims, a);
  s.beta.assign(dims, b);
  s.gamma.assign(dims, g);
  s.delta.assign(dims, d);
  return s;
}

double canonicity_jacobian(const CanonicalShift& shift) {
  const int d = shift.dims();
  if (static_cast<int>(shift.beta.size()) != d || static_cast<int>(shift.gamma.size()) != d ||
      static_cast<int>(shift.delta.size()) != d)
    throw ValidationError("CanonicalShift: component vectors must share one length");
  double prod = 1.0;
  for (int i = 0; i < d; ++i)
    prod *= (shift.alpha[i] - shift.beta[i]) * (shift.gamma[i] - shift.delta[i]);
  return prod;
}

bool is_canonical(const CanonicalShift& shift, double tol) {
  return std::abs(canonicity_jacobian(shift) - 1.0) < tol;
}

std::vector<double> r_parameter(const CanonicalShift& shift) {
  std::vector<double> r(shift.dims());
  for (int i = 0; i < shift.dims(); ++i) {
    const double gd = shift.gamma[i] - shift.delta[i];
    if (gd == 0.0) throw ValidationError("r_parameter: gamma_i - delta_i = 0");
    r[i] = shift.gamma[i] * (shift.beta[i] - shift.alpha[i]) / gd;
  }
  return r;
}

std::vector<double> s_from_r(const std::vector<double>& r) {
  std::vector<double> s(r.size());
  for (size_t i = 0; i < r.size(); ++i) s[i] = s_from_r_scalar(r[i]);
  return s;
}

void OperatorMatrix::check_hermitian(double tol) const {
  if (!hermitian_hint) return;
  const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (dev >= tol) {
    std::ostringstream os;
    os << "OperatorMatrix: hermitian_hint set but max |A - A^dagger| = " << dev;
    throw ValidationError(os.str());
  }
}

OperatorMatrix identity_operator(const Grid& grid) {
  return OperatorMatrix{grid, Eigen::MatrixXcd::Identity(grid.n, grid.n), true};
}

OperatorMatrix position_operator(const Grid& grid) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) m(j, j) = grid.q[j];
  return OperatorMatrix{grid, std::move(m), true};
}

OperatorMatrix momentum_operator(const Grid& grid) {
  const int n = grid.n;
  // (1/n) sum_k p_k exp(+i p_k (q_j - q_l) / hbar): circulant in (j - l) mod n.
  std::vector<Complex> first_col(n);
  for (int d = 0; d < n; ++d) {
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k)
      sum += grid.p[k] * std::polar(1.0, grid.p[k] * d * grid.dq / grid.hbar);
    first_col[d] = sum / static_cast<double>(n);
  }
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) m(j, l) = first_col[((j - l) % n + n) % n];
  return OperatorMatrix{grid, std::move(m), true};
}

OperatorMatrix projector(const WavefunctionGrid& psi) {
  if (psi.rep != Representation::position)
    throw ValidationError("projector: expects a position-representation state");
  const int n = psi.grid.n;
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) m(j, l) = psi.samples[j] * std::conj(psi.samples[l]) * psi.grid.dq;
  return OperatorMatrix{psi.grid, std::move(m), true};
}

std::vector<Complex> apply_operator(const OperatorMatrix& a, const WavefunctionGrid& psi) {
  if (!same_grid(a.grid, psi.grid)) throw ValidationError("apply_operator: grid mismatch");
  Eigen::VectorXcd v(a.n());
  for (int j = 0; j < a.n(); ++j) v(j) = psi.samples[j];
  Eigen::VectorXcd w = a.entries * v;
  return std::vector<Complex>(w.data(), w.data() + a.n());
}

PhaseSpaceFunction operator_to_symbol(const OperatorMatrix& a, SParameter s) {
  const Grid& g = a.grid;
  const int n = g.n;
  check_shift_s(g, s, "operator_to_symbol");
  a.check_hermitian();
  const Complex coef_a = (1.0 + s.value) / 2.0;

  // m-th circular diagonal D_m(q_j) = <q_j| A |q_j - tau_m> (matrix entries;
  // the 1/dq kernel measure cancels against dtau = dq in the tau sum).
  // The sheared kernel S(q, tau) = <q + a tau| A |q + a tau - tau> is the
  // diagonal shifted by -a tau.
  std::vector<Complex> S(static_cast<size_t>(n) * n);
  std::vector<Complex> diag(n);
  for (int m = 0; m < n; ++m) {
    const int off = m - n / 2;
    const double tau = off * g.dq;
    for (int j = 0; j < n; ++j) diag[j] = a.entries(j, ((j - off) % n + n) % n);
    auto shifted = (off == 0) ? diag : fractional_shift(diag, -coef_a * tau, g.dq);
    for (int j = 0; j < n; ++j) S[static_cast<size_t>(m) * n + j] = shifted[j];
  }
  // A_w[j*n + k] = sum_m S[m][j] exp(-i tau_m p_k / hbar)
  std::vector<Complex> A(static_cast<size_t>(n) * n);
  std::vector<Complex> col(n), out(n);
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) col[m] = S[static_cast<size_t>(m) * n + j];
    fft::centered_dft(col, out, fft::kForward);
    for (int k = 0; k < n; ++k) A[static_cast<size_t>(j) * n + k] = out[k];
  }
  return make_symbol(g, s, SymbolKind::operator_symbol, std::move(A));
}

OperatorMatrix symbol_to_operator(const PhaseSpaceFunction& a_w, SParameter s) {
  const Grid& g = a_w.grid;
  const int n = g.n;
  if (!same_s(a_w.s, s)) throw ValidationError("symbol_to_operator: s mismatch with symbol tag");
  check_shift_s(g, s, "symbol_to_operator");
  const Complex coef_a = (1.0 + s.value) / 2.0;
  auto dense = a_w.dense();

  // S(q_j, tau_m) = (1/n) sum_k A_w[j][k] exp(+i tau_m p_k / hbar): one
  // centered DFT per row inverts the tau -> p sum of operator_to_symbol.
  std::vector<Complex> T(static_cast<size_t>(n) * n);  // [j*n + m]
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) {
    std::span<const Complex> arow(dense.data() + static_cast<size_t>(j) * n, n);
    fft::centered_dft(arow, out, fft::kBackward);
    for (int m = 0; m < n; ++m) T[static_cast<size_t>(j) * n + m] = out[m] / static_cast<double>(n);
  }

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Complex> S(n);
  for (int mm = 0; mm < n; ++mm) {
    const int off = mm - n / 2;
    const double tau = off * g.dq;
    for (int j = 0; j < n; ++j) S[j] = T[static_cast<size_t>(j) * n + mm];
    auto diag = (off == 0) ? S : fractional_shift(S, coef_a * tau, g.dq);
    for (int j = 0; j < n; ++j) mat(j, ((j - off) % n + n) % n) = diag[j];
  }
  return OperatorMatrix{g, std::move(mat), false};
}

}  // namespace sweyl
