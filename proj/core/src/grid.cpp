#include "sweyl/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sweyl/fft.hpp"

namespace sweyl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Grid Grid::make(int n_points, double q_min, double q_max, double hbar) {
  if (!(std::isfinite(q_min) && std::isfinite(q_max)))
    throw ValidationError("Grid: non-finite box bounds");
  if (!(q_max > q_min)) throw ValidationError("Grid: q_max must exceed q_min");
  if (n_points < 8) throw ValidationError("Grid: n_points must be >= 8");
  if (n_points % 2 != 0) throw ValidationError("Grid: n_points must be even");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("Grid: hbar must be positive");

  Grid g;
  g.n = n_points;
  g.q_min = q_min;
  g.q_max = q_max;
  g.hbar = hbar;
  g.dq = (q_max - q_min) / n_points;
  g.dp = kTwoPi * hbar / (n_points * g.dq);
  g.q.resize(n_points);
  g.p.resize(n_points);
  for (int j = 0; j < n_points; ++j) g.q[j] = q_min + j * g.dq;
  for (int k = 0; k < n_points; ++k) g.p[k] = (k - n_points / 2) * g.dp;
  return g;
}

bool same_grid(const Grid& a, const Grid& b, double tol) {
  return a.n == b.n && std::abs(a.q_min - b.q_min) <= tol && std::abs(a.q_max - b.q_max) <= tol &&
         std::abs(a.hbar - b.hbar) <= tol;
}

double WavefunctionGrid::norm() const {
  double s = 0.0;
  for (const auto& v : samples) s += std::norm(v);
  return std::sqrt(s * step());
}

void WavefunctionGrid::normalize() {
  double nrm = norm();
  if (nrm == 0.0) throw ValidationError("WavefunctionGrid: cannot normalize the zero state");
  for (auto& v : samples) v /= nrm;
}

std::string support_warning(const WavefunctionGrid& psi) {
  double peak = 0.0;
  for (const auto& v : psi.samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return {};
  const double edge = std::max(std::abs(psi.samples.front()), std::abs(psi.samples.back()));
  if (edge / peak > kSupportTolerance) {
    std::ostringstream os;
    os << "state magnitude at box edge is " << edge / peak
       << " of peak (tolerance 1e-12); box too small";
    return os.str();
  }
  return {};
}

WavefunctionGrid to_momentum(const WavefunctionGrid& psi) {
  if (psi.rep != Representation::momentum && psi.rep != Representation::position)
    throw ValidationError("to_momentum: bad representation tag");
  if (psi.rep == Representation::momentum)
    throw ValidationError("to_momentum: input already in momentum representation");
  const Grid& g = psi.grid;
  const int n = g.n;
  // Phi_k = dq/sqrt(2 pi hbar) * exp(-i p_k q_min/hbar) * FFT[(-1)^j Psi_j]_k
  std::vector<Complex> tmp(n);
  for (int j = 0; j < n; ++j) tmp[j] = (j % 2 == 0) ? psi.samples[j] : -psi.samples[j];
  std::vector<Complex> out(n);
  fft::dft(tmp, out, fft::kForward);
  const double scale = g.dq / std::sqrt(kTwoPi * g.hbar);
  for (int k = 0; k < n; ++k) {
    const double phase = -g.p[k] * g.q_min / g.hbar;
    out[k] *= scale * std::polar(1.0, phase);
  }
  return WavefunctionGrid{g, Representation::momentum, std::move(out)};
}

WavefunctionGrid to_position(const WavefunctionGrid& phi) {
  if (phi.rep != Representation::momentum)
    throw ValidationError("to_position: input not in momentum representation");
  const Grid& g = phi.grid;
  const int n = g.n;
  // Psi_j = dp/sqrt(2 pi hbar) * (-1)^j * IFFT[Phi_k exp(+i p_k q_min/hbar)]_j
  std::vector<Complex> tmp(n);
  for (int k = 0; k < n; ++k) {
    const double phase = g.p[k] * g.q_min / g.hbar;
    tmp[k] = phi.samples[k] * std::polar(1.0, phase);
  }
  std::vector<Complex> out(n);
  fft::dft(tmp, out, fft::kBackward);
  const double scale = g.dp / std::sqrt(kTwoPi * g.hbar);
  for (int j = 0; j < n; ++j) {
    out[j] *= scale;
    if (j % 2 != 0) out[j] = -out[j];
  }
  return WavefunctionGrid{g, Representation::position, std::move(out)};
}

double max_admissible_im_shift(double step, double ramp_guard) {
  return ramp_guard * step / std::numbers::pi;
}

std::vector<Complex> fractional_shift(std::span<const Complex> f, Complex delta, double step,
                                      double ramp_guard) {
  const int n = static_cast<int>(f.size());
  if (n % 2 != 0) throw ValidationError("fractional_shift: n must be even");
  if (!(step > 0.0)) throw ValidationError("fractional_shift: step must be positive");
  // Mode kappa = k - n/2 carries dual frequency 2*pi*kappa/(n*step); shifting
  // by delta multiplies it by exp(-2*pi*i*kappa*delta/(n*step)). The largest
  // |Im| of that exponent over modes is pi*|Im delta|/step.
  const double im_exponent = std::numbers::pi * std::abs(delta.imag()) / step;
  if (im_exponent > ramp_guard) {
    std::ostringstream os;
    os << "fractional_shift: ramp exponent " << im_exponent << " exceeds guard " << ramp_guard
       << " (max admissible |Im delta| = " << max_admissible_im_shift(step, ramp_guard) << ")";
    throw NumericalGuardError(os.str());
  }

  // Centered-mode decomposition: f_j = sum_kappa c_kappa exp(2 pi i kappa j/n).
  std::vector<Complex> modes(n);
  {
    std::vector<Complex> tmp(f.begin(), f.end());
    fft::dft(tmp, modes, fft::kForward);  // modes[k] = sum_j f_j exp(-2 pi i jk/n)
  }
  // modes index k corresponds to kappa = k for k < n/2, kappa = k - n for k >= n/2.
  const Complex ramp_base = Complex(0.0, -1.0) * (kTwoPi * delta / (n * step));
  for (int k = 0; k < n; ++k) {
    const int kappa = (k < n / 2) ? k : k - n;
    modes[k] *= std::exp(ramp_base * static_cast<double>(kappa));
  }
  std::vector<Complex> out(n);
  fft::dft(modes, out, fft::kBackward);
  const double inv_n = 1.0 / n;
  for (auto& v : out) v *= inv_n;
  return out;
}

std::vector<Complex> spectral_derivative(std::span<const Complex> f, int order, double step) {
  const int n = static_cast<int>(f.size());
  if (n % 2 != 0) throw ValidationError("spectral_derivative: n must be even");
  if (order < 0) throw ValidationError("spectral_derivative: negative order");
  std::vector<Complex> modes(n);
  {
    std::vector<Complex> tmp(f.begin(), f.end());
    fft::dft(tmp, modes, fft::kForward);
  }
  const double base = kTwoPi / (n * step);
  for (int k = 0; k < n; ++k) {
    int kappa = (k < n / 2) ? k : k - n;
    // Odd derivatives of the unpaired Nyquist mode are set to zero (the
    // symmetric interpolant of that mode has no odd derivative at lattice points).
    if (kappa == -n / 2 && order % 2 == 1) {
      modes[k] = 0.0;
      continue;
    }
    Complex ik(0.0, kappa * base);
    Complex mult = 1.0;
    for (int o = 0; o < order; ++o) mult *= ik;
    modes[k] *= mult;
  }
  std::vector<Complex> out(n);
  fft::dft(modes, out, fft::kBackward);
  const double inv_n = 1.0 / n;
  for (auto& v : out) v *= inv_n;
  return out;
}

}  // namespace sweyl
