#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "sweyl/errors.hpp"

namespace sweyl {

using Complex = std::complex<double>;

/// Default cap on |Im(shift exponent)| in spectral phase ramps. Beyond this the
/// ramp amplifies double-precision noise past any useful tolerance.
inline constexpr double kDefaultRampGuard = 50.0;

/// Relative edge magnitude above which a state is considered unsupported by
/// its box (periodic wrap-around would contaminate spectral shifts).
inline constexpr double kSupportTolerance = 1e-12;

/// Uniform periodic position lattice with its Fourier-dual momentum lattice.
///
/// q_j = q_min + j*dq (j = 0..n-1), p_k = (k - n/2)*dp with
/// dq*dp*n = 2*pi*hbar exactly. n must be even so the Nyquist mode has an
/// unambiguous frequency assignment (-n/2*dp).
struct Grid {
  int n = 0;
  double q_min = 0.0;
  double q_max = 0.0;
  double dq = 0.0;
  double dp = 0.0;
  double hbar = 1.0;
  std::vector<double> q;  // position lattice
  std::vector<double> p;  // momentum lattice, centered on zero

  static Grid make(int n_points, double q_min, double q_max, double hbar = 1.0);

  double q_at(int j) const { return q[j]; }
  double p_at(int k) const { return p[k]; }
  double p_max_abs() const { return 0.5 * n * dp; }
};

bool same_grid(const Grid& a, const Grid& b, double tol = 1e-12);

enum class Representation { position, momentum };

/// Complex samples of a wavefunction on one representation's lattice.
struct WavefunctionGrid {
  Grid grid;
  Representation rep = Representation::position;
  std::vector<Complex> samples;

  double norm() const;                     // sqrt(sum |psi|^2 * step)
  double step() const { return rep == Representation::position ? grid.dq : grid.dp; }
  void normalize();
};

/// Checks decay at the box edges; returns a warning message if the state does
/// not fall below kSupportTolerance (relative to its peak) there.
std::string support_warning(const WavefunctionGrid& psi);

/// Phi(p) = (2*pi*hbar)^(-1/2) * integral exp(-i p q / hbar) Psi(q) dq,
/// realized as the exactly unitary discrete map between the two lattices.
WavefunctionGrid to_momentum(const WavefunctionGrid& psi);
WavefunctionGrid to_position(const WavefunctionGrid& phi);

/// Samples of x -> f(x - delta) in the band-limited periodic sense (exact for
/// lattice functions whose spectrum the lattice resolves). `step` is the
/// lattice spacing of f's axis. Complex delta evaluates the analytic
/// continuation of the interpolant; |Im delta| is limited by `ramp_guard`:
/// pi*|Im delta|/step <= ramp_guard, else NumericalGuardError.
std::vector<Complex> fractional_shift(std::span<const Complex> f, Complex delta,
                                      double step, double ramp_guard = kDefaultRampGuard);

/// d^order/dx^order of the band-limited interpolant, sampled on the lattice.
std::vector<Complex> spectral_derivative(std::span<const Complex> f, int order, double step);

/// Largest |Im delta| fractional_shift accepts for this spacing and guard.
double max_admissible_im_shift(double step, double ramp_guard = kDefaultRampGuard);

}  // namespace sweyl
