#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sweyl::fft {

using Complex = std::complex<double>;

inline constexpr int kForward = -1;   // sum f_j exp(-2*pi*i*j*k/n)
inline constexpr int kBackward = +1;  // sum f_j exp(+2*pi*i*j*k/n), unnormalized

/// Unnormalized 1-D complex DFT, out-of-place. Plans are cached per (n, sign);
/// plan creation is serialized internally, execution is thread-safe.
void dft(std::span<const Complex> in, std::span<Complex> out, int sign);

/// In-place variant.
void dft_inplace(std::span<Complex> data, int sign);

/// Centered DFT on an even-n lattice:
///   out[k] = sum_m in[m] * exp(sign * 2*pi*i * (m - n/2)(k - n/2) / n).
/// This is the lattice realization of integrals like
/// sum_tau f(tau) exp(-i tau p / hbar) with tau, p both centered on zero.
void centered_dft(std::span<const Complex> in, std::span<Complex> out, int sign);

std::vector<Complex> centered_dft(std::span<const Complex> in, int sign);

}  // namespace sweyl::fft
