// Internal helpers shared by transform.cpp and star.cpp: unnormalized discrete
// sums between the position lattice q_j = q_min + j dq (affine) and its dual
// centered lattice theta_l = (l - n/2) dp. The p <-> tau sums are plain
// centered DFTs (both lattices centered) and use fft::centered_dft directly.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sweyl/fft.hpp"
#include "sweyl/grid.hpp"

namespace sweyl::detail {

/// out[l] = sum_j in[j] exp(sign * i * theta_l q_j / hbar)
inline std::vector<Complex> q_to_theta(std::span<const Complex> in, const Grid& g, int sign) {
  const int n = g.n;
  std::vector<Complex> tmp(n);
  for (int j = 0; j < n; ++j) tmp[j] = (j % 2 == 0) ? in[j] : -in[j];
  std::vector<Complex> out(n);
  fft::dft(tmp, out, sign > 0 ? fft::kBackward : fft::kForward);
  for (int l = 0; l < n; ++l) out[l] *= std::polar(1.0, sign * g.p[l] * g.q_min / g.hbar);
  return out;
}

/// out[j] = sum_l in[l] exp(sign * i * theta_l q_j / hbar)
inline std::vector<Complex> theta_to_q(std::span<const Complex> in, const Grid& g, int sign) {
  const int n = g.n;
  std::vector<Complex> tmp(n);
  for (int l = 0; l < n; ++l) tmp[l] = in[l] * std::polar(1.0, sign * g.p[l] * g.q_min / g.hbar);
  std::vector<Complex> out(n);
  fft::dft(tmp, out, sign > 0 ? fft::kBackward : fft::kForward);
  for (int j = 1; j < n; j += 2) out[j] = -out[j];
  return out;
}

}  // namespace sweyl::detail
