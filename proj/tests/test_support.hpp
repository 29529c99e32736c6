// Shared test-data generators. "Band-limited" is meant in the phase-space
// sense: the SYMBOL's (theta, tau) modes sit in the central third of the
// band, i.e. the operator kernel also decays away from the main diagonal.
// (A kernel band-limited only in its two arguments keeps O(1) weight on the
// far circular diagonal, which no sheared route can represent.)
#pragma once

#include <random>

#include "sweyl/fft.hpp"
#include "sweyl/phase_space.hpp"
#include "sweyl/symbol.hpp"

namespace test_support {

using sweyl::Complex;

inline sweyl::PhaseSpaceFunction random_band_limited_symbol(const sweyl::Grid& g,
                                                            sweyl::SParameter s,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int n = g.n;
  std::vector<Complex> modes(static_cast<size_t>(n) * n, Complex(0.0));
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      const int lk = l - n / 2, mk = m - n / 2;
      if (std::abs(lk) > n / 6 || std::abs(mk) > n / 6) continue;
      modes[static_cast<size_t>(l) * n + m] =
          Complex(dist(rng), dist(rng)) *
          std::exp(-2.0 * (std::abs(lk) + std::abs(mk)) / (n / 6.0));
    }
  // samples = sum modes exp(i(theta_l q_j + tau_m p_k)/hbar)
  std::vector<Complex> half(static_cast<size_t>(n) * n);
  std::vector<Complex> buf(n), out(n);
  for (int l = 0; l < n; ++l) {
    std::span<const Complex> row(modes.data() + static_cast<size_t>(l) * n, n);
    sweyl::fft::centered_dft(row, out, sweyl::fft::kBackward);
    for (int k = 0; k < n; ++k) half[static_cast<size_t>(l) * n + k] = out[k];
  }
  std::vector<Complex> samples(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    std::vector<Complex> tmp(n);
    for (int l = 0; l < n; ++l)
      tmp[l] = half[static_cast<size_t>(l) * n + k] *
               std::polar(1.0, g.p[l] * g.q_min / g.hbar);
    sweyl::fft::dft(tmp, out, sweyl::fft::kBackward);
    for (int j = 0; j < n; ++j) {
      Complex v = out[j];
      if (j % 2 != 0) v = -v;
      samples[static_cast<size_t>(j) * n + k] = v / double(n);
    }
  }
  return sweyl::make_symbol(g, s, sweyl::SymbolKind::operator_symbol, std::move(samples));
}

/// Operator whose s-symbol is band-limited; hermitized when requested.
inline sweyl::OperatorMatrix random_band_limited_operator(const sweyl::Grid& g,
                                                          sweyl::SParameter s, std::uint64_t seed,
                                                          bool hermitian) {
  auto sym = random_band_limited_symbol(g, s, seed);
  auto op = sweyl::symbol_to_operator(sym, s);
  if (hermitian) {
    Eigen::MatrixXcd h = 0.5 * (op.entries + op.entries.adjoint());
    h /= h.cwiseAbs().maxCoeff();
    return sweyl::OperatorMatrix{g, std::move(h), true};
  }
  op.entries /= op.entries.cwiseAbs().maxCoeff();
  return op;
}

}  // namespace test_support
