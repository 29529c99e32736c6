#include "sweyl/transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sweyl/fft.hpp"

#include "lattice_transforms.hpp"

namespace sweyl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Spectrum helper: decompose once, evaluate many shifts. Mode kappa = k - n/2
// carries dual frequency 2*pi*kappa/(n*step).
struct ShiftFamily {
  std::vector<Complex> modes;  // plain FFT order
  double step;
  int n;

  explicit ShiftFamily(std::span<const Complex> f, double step_in)
      : modes(f.size()), step(step_in), n(static_cast<int>(f.size())) {
    std::vector<Complex> tmp(f.begin(), f.end());
    fft::dft(tmp, modes, fft::kForward);
  }

  std::vector<Complex> shifted(Complex delta) const {
    std::vector<Complex> m(modes);
    const Complex base = Complex(0.0, -1.0) * (kTwoPi * delta / (n * step));
    for (int k = 0; k < n; ++k) {
      const int kappa = (k < n / 2) ? k : k - n;
      m[k] *= std::exp(base * static_cast<double>(kappa));
    }
    std::vector<Complex> out(n);
    fft::dft(m, out, fft::kBackward);
    const double inv_n = 1.0 / n;
    for (auto& v : out) v *= inv_n;
    return out;
  }
};

std::vector<Complex> theta_sum_forward(std::span<const Complex> in, const Grid& g) {
  return detail::q_to_theta(in, g, +1);
}

std::vector<Complex> theta_sum_inverse(std::span<const Complex> in, const Grid& g) {
  return detail::theta_to_q(in, g, -1);
}

std::vector<Complex> nu_to_q_sum(std::span<const Complex> in, const Grid& g) {
  return detail::theta_to_q(in, g, +1);
}

void require_position(const WavefunctionGrid& psi, const char* who) {
  if (psi.rep != Representation::position)
    throw ValidationError(std::string(who) + ": expects a position-representation state");
}

void require_momentum(const WavefunctionGrid& phi, const char* who) {
  if (phi.rep != Representation::momentum)
    throw ValidationError(std::string(who) + ": expects a momentum-representation state");
}

double shift_route_max_im_s(const Grid& g) {
  // |Im delta| = tau_max |Im s| / 2 <= guard*step/pi with tau_max = n*dq/2.
  return 4.0 * kDefaultRampGuard / (std::numbers::pi * g.n);
}

void check_shift_route_s(const Grid& g, SParameter s, const char* who) {
  const double lim = shift_route_max_im_s(g);
  if (std::abs(s.value.imag()) > lim) {
    std::ostringstream os;
    os << who << ": |Im s| = " << std::abs(s.value.imag())
       << " exceeds the shift-route guard on this grid (max admissible |Im s| = " << lim << ")";
    throw NumericalGuardError(os.str());
  }
}

void check_multiplier_s(const Grid& g, SParameter s, const char* who) {
  const double exponent = multiplier_guard_exponent(g, s);
  const double lim = 2.0 * kDefaultRampGuard;
  if (exponent > lim) {
    std::ostringstream os;
    os << who << ": multiplier exponent " << exponent << " exceeds guard " << lim
       << " (max admissible |Im s| = " << 8.0 * kDefaultRampGuard / (std::numbers::pi * g.n)
       << " on this grid)";
    throw NumericalGuardError(os.str());
  }
}

// G[m*n + j] = Psi*[q_j - tau_m (1-s)/2] * Psi[q_j + tau_m (1+s)/2]
std::vector<Complex> shifted_pair_products(const WavefunctionGrid& psi, SParameter s) {
  const Grid& g = psi.grid;
  const int n = g.n;
  std::vector<Complex> conj_samples(n);
  for (int j = 0; j < n; ++j) conj_samples[j] = std::conj(psi.samples[j]);
  ShiftFamily left(conj_samples, g.dq);
  ShiftFamily right(psi.samples, g.dq);
  const Complex a = (1.0 + s.value) / 2.0;
  const Complex b = (1.0 - s.value) / 2.0;
  std::vector<Complex> G(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    const double tau = (m - n / 2) * g.dq;
    auto f1 = left.shifted(b * tau);    // Psi*(q - b tau)
    auto f2 = right.shifted(-a * tau);  // Psi(q + a tau)
    for (int j = 0; j < n; ++j) G[static_cast<size_t>(m) * n + j] = f1[j] * f2[j];
  }
  return G;
}

// G_K[m*n + j] = conj(Psi_j) * Psi_{j + (m - n/2) mod n}: exact lattice
// rotations, so the entries inherit the samples' pointwise relative accuracy.
std::vector<Complex> rotation_pair_products(const WavefunctionGrid& psi) {
  const int n = psi.grid.n;
  std::vector<Complex> G(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    const int off = m - n / 2;
    for (int j = 0; j < n; ++j) {
      const int jj = ((j + off) % n + n) % n;
      G[static_cast<size_t>(m) * n + j] = std::conj(psi.samples[j]) * psi.samples[jj];
    }
  }
  return G;
}

// A[j*n + k] = scale * sum_m G[m*n + j] exp(-i tau_m p_k / hbar)
std::vector<Complex> assemble_from_tau(const std::vector<Complex>& G, const Grid& g,
                                       double scale) {
  const int n = g.n;
  std::vector<Complex> A(static_cast<size_t>(n) * n);
  std::vector<Complex> col(n), out(n);
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) col[m] = G[static_cast<size_t>(m) * n + j];
    fft::centered_dft(col, out, fft::kForward);
    for (int k = 0; k < n; ++k) A[static_cast<size_t>(j) * n + k] = scale * out[k];
  }
  return A;
}

CharacteristicFunction characteristic_from_rotations(const WavefunctionGrid& psi, SParameter s) {
  const Grid& g = psi.grid;
  const int n = g.n;
  auto G = rotation_pair_products(psi);
  CharacteristicFunction M;
  M.grid = g;
  M.s = s;
  M.samples.resize(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    auto row = theta_sum_forward(
        std::span<const Complex>(G.data() + static_cast<size_t>(m) * n, n), g);
    const double tau = (m - n / 2) * g.dq;
    for (int l = 0; l < n; ++l) {
      // ordering multiplier exp(i tau theta (1 - s) / (2 hbar))
      const Complex expo = Complex(0.0, 1.0) * tau * g.p[l] * (1.0 - s.value) / (2.0 * g.hbar);
      M.samples[static_cast<size_t>(m) * n + l] = g.dq * row[l] * std::exp(expo);
    }
  }
  return M;
}

}  // namespace

double multiplier_guard_exponent(const Grid& grid, SParameter s) {
  return std::numbers::pi * grid.n * std::abs(s.value.imag()) / 4.0;
}

PhaseSpaceFunction s_wigner_shift(const WavefunctionGrid& psi, SParameter s) {
  require_position(psi, "s_wigner_shift");
  check_shift_route_s(psi.grid, s, "s_wigner_shift");
  auto G = shifted_pair_products(psi, s);
  const double scale = psi.grid.dq / (kTwoPi * psi.grid.hbar);
  auto A = assemble_from_tau(G, psi.grid, scale);
  return make_symbol(psi.grid, s, SymbolKind::state_symbol, std::move(A));
}

PhaseSpaceFunction s_wigner_kirkwood(const WavefunctionGrid& psi, SParameter s) {
  require_position(psi, "s_wigner_kirkwood");
  check_multiplier_s(psi.grid, s, "s_wigner_kirkwood");
  CharacteristicFunction M = characteristic_from_rotations(psi, s);
  return wigner_from_characteristic(M);
}

PhaseSpaceFunction s_wigner(const WavefunctionGrid& psi, SParameter s) {
  if (s.is_real()) return s_wigner_shift(psi, s);
  return s_wigner_kirkwood(psi, s);
}

PhaseSpaceFunction s_wigner_momentum(const WavefunctionGrid& phi, SParameter s) {
  require_momentum(phi, "s_wigner_momentum");
  const Grid& g = phi.grid;
  const int n = g.n;
  if (s.is_real()) {
    check_shift_route_s(g, s, "s_wigner_momentum");
    std::vector<Complex> conj_samples(n);
    for (int k = 0; k < n; ++k) conj_samples[k] = std::conj(phi.samples[k]);
    ShiftFamily left(conj_samples, g.dp);
    ShiftFamily right(phi.samples, g.dp);
    const Complex a = (1.0 + s.value) / 2.0;
    const Complex b = (1.0 - s.value) / 2.0;
    // Gt[m*n + k] = Phi*[p_k - a nu_m] * Phi[p_k + b nu_m]
    std::vector<Complex> Gt(static_cast<size_t>(n) * n);
    for (int m = 0; m < n; ++m) {
      const double nu = (m - n / 2) * g.dp;
      auto f1 = left.shifted(a * nu);
      auto f2 = right.shifted(-b * nu);
      for (int k = 0; k < n; ++k) Gt[static_cast<size_t>(m) * n + k] = f1[k] * f2[k];
    }
    // A[j*n + k] = dp/(2 pi hbar) sum_m Gt[m][k] exp(+i nu_m q_j / hbar)
    const double scale = g.dp / (kTwoPi * g.hbar);
    std::vector<Complex> A(static_cast<size_t>(n) * n);
    std::vector<Complex> col(n);
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) col[m] = Gt[static_cast<size_t>(m) * n + k];
      auto out = nu_to_q_sum(col, g);
      for (int j = 0; j < n; ++j) A[static_cast<size_t>(j) * n + k] = scale * out[j];
    }
    return make_symbol(g, s, SymbolKind::state_symbol, std::move(A));
  }

  // Complex s: multiplier route in the momentum representation.
  check_multiplier_s(g, s, "s_wigner_momentum");
  std::vector<Complex> GK(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    const int off = m - n / 2;
    for (int k = 0; k < n; ++k) {
      const int kk = ((k + off) % n + n) % n;
      GK[static_cast<size_t>(m) * n + k] = std::conj(phi.samples[k]) * phi.samples[kk];
    }
  }
  // Mt[m*n + l] = dp * sum_k GK[m][k] exp(+i xi_l p_k / hbar) * exp(i xi nu (1+s)/(2 hbar))
  std::vector<Complex> Mt(static_cast<size_t>(n) * n);
  std::vector<Complex> row(n), out(n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) row[k] = GK[static_cast<size_t>(m) * n + k];
    fft::centered_dft(row, out, fft::kBackward);
    const double nu = (m - n / 2) * g.dp;
    for (int l = 0; l < n; ++l) {
      const double xi = (l - n / 2) * g.dq;
      const Complex expo = Complex(0.0, 1.0) * xi * nu * (1.0 + s.value) / (2.0 * g.hbar);
      Mt[static_cast<size_t>(m) * n + l] = g.dp * out[l] * std::exp(expo);
    }
  }
  // A[j*n + k] = dq dp/(2 pi hbar)^2 sum_m [sum_l Mt[m][l] e^{-i xi_l p_k/hbar}] e^{+i nu_m q_j/hbar}
  const double scale = g.dq * g.dp / (kTwoPi * g.hbar * kTwoPi * g.hbar);
  std::vector<Complex> B(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) row[l] = Mt[static_cast<size_t>(m) * n + l];
    fft::centered_dft(row, out, fft::kForward);
    for (int k = 0; k < n; ++k) B[static_cast<size_t>(m) * n + k] = out[k];
  }
  std::vector<Complex> A(static_cast<size_t>(n) * n);
  std::vector<Complex> col(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) col[m] = B[static_cast<size_t>(m) * n + k];
    auto oq = nu_to_q_sum(col, g);
    for (int j = 0; j < n; ++j) A[static_cast<size_t>(j) * n + k] = scale * oq[j];
  }
  return make_symbol(g, s, SymbolKind::state_symbol, std::move(A));
}

CharacteristicFunction characteristic(const WavefunctionGrid& psi, SParameter s) {
  require_position(psi, "characteristic");
  const Grid& g = psi.grid;
  const int n = g.n;
  if (!s.is_real()) {
    check_multiplier_s(g, s, "characteristic");
    return characteristic_from_rotations(psi, s);
  }
  check_shift_route_s(g, s, "characteristic");
  auto G = shifted_pair_products(psi, s);
  CharacteristicFunction M;
  M.grid = g;
  M.s = s;
  M.samples.resize(static_cast<size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    auto row = theta_sum_forward(
        std::span<const Complex>(G.data() + static_cast<size_t>(m) * n, n), g);
    for (int l = 0; l < n; ++l) M.samples[static_cast<size_t>(m) * n + l] = g.dq * row[l];
  }
  return M;
}

PhaseSpaceFunction wigner_from_characteristic(const CharacteristicFunction& m, SymbolKind kind) {
  const Grid& g = m.grid;
  const int n = g.n;
  // B[mm*n + j] = sum_l M[mm][l] exp(-i theta_l q_j / hbar)
  std::vector<Complex> B(static_cast<size_t>(n) * n);
  for (int mm = 0; mm < n; ++mm) {
    auto row = theta_sum_inverse(
        std::span<const Complex>(m.samples.data() + static_cast<size_t>(mm) * n, n), g);
    for (int j = 0; j < n; ++j) B[static_cast<size_t>(mm) * n + j] = row[j];
  }
  const double scale = g.dq * g.dp / (kTwoPi * g.hbar * kTwoPi * g.hbar);
  auto A = assemble_from_tau(B, g, scale);
  return make_symbol(g, m.s, kind, std::move(A));
}

namespace {
Marginal marginal_impl(const PhaseSpaceFunction& a, bool over_p) {
  if (a.kind != SymbolKind::state_symbol)
    throw ValidationError("marginal: requires a state-symbol");
  const Grid& g = a.grid;
  const int n = g.n;
  auto dense = a.dense();
  Marginal out;
  out.axis = over_p ? g.q : g.p;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) {
    Complex sum = 0.0;
    if (over_p) {
      for (int k = 0; k < n; ++k) sum += dense[static_cast<size_t>(i) * n + k];
      sum *= g.dp;
    } else {
      for (int j = 0; j < n; ++j) sum += dense[static_cast<size_t>(j) * n + i];
      sum *= g.dq;
    }
    out.values[i] = sum.real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::abs(sum.imag()));
  }
  return out;
}
}  // namespace

Marginal marginal_position(const PhaseSpaceFunction& a) { return marginal_impl(a, true); }
Marginal marginal_momentum(const PhaseSpaceFunction& a) { return marginal_impl(a, false); }

}  // namespace sweyl
