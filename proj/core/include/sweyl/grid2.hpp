#pragma once

#include <array>

#include "sweyl/phase_space.hpp"

namespace sweyl {

/// Two-axis tensor grid for the 2-D transform path. Axes may differ in size
/// and box but share hbar.
struct Grid2 {
  Grid x, y;

  static Grid2 make(const Grid& x, const Grid& y);
  size_t points() const { return static_cast<size_t>(x.n) * y.n; }
};

/// Psi(q1, q2) samples, row-major [j1 * y.n + j2].
struct Wavefunction2 {
  Grid2 grid;
  std::vector<Complex> samples;

  double norm() const;
  void normalize();
};

Wavefunction2 product_state(const WavefunctionGrid& a, const WavefunctionGrid& b);

/// A(q1, q2, p1, p2) samples indexed [( j1 * n2 + j2 ) * n1*n2 + (k1 * n2 + k2)].
struct PhaseSpace2 {
  Grid2 grid;
  std::array<SParameter, 2> s;
  std::vector<Complex> samples;

  Complex at(int j1, int j2, int k1, int k2) const;
};

/// Per-axis s-parameterized transform: each axis carries its own shift weights
/// (1 +/- s_i)/2; evaluated by separable fractional shifts per tau pair and a
/// 2-D Fourier sum over (tau1, tau2).
PhaseSpace2 s_wigner_2d(const Wavefunction2& psi, SParameter s1, SParameter s2);

/// int A dp1 dp2 -> |Psi(q1,q2)|^2; values plus the largest imaginary residue.
struct Marginal2 {
  std::vector<double> values;  // [j1 * n2 + j2]
  double max_imag_residue = 0.0;
};
Marginal2 marginal_position_2d(const PhaseSpace2& a);

}  // namespace sweyl
