#pragma once

#include <vector>

#include "sweyl/phase_space.hpp"

namespace sweyl {

/// The s-parameterized Wigner function of a pure state,
///
///   A(q, p; s) = (1/2 pi hbar) int dtau  Psi*[q - tau(1-s)/2]
///                                e^{-i tau p / hbar}  Psi[q + tau(1+s)/2],
///
/// normalized so the lattice sum A dq dp = 1. This position-kernel form is the
/// normative definition; every other route must reproduce it.
///
/// Real s is evaluated by per-tau spectral shifts (cost O(n^2 log n)). Complex
/// s dispatches to the multiplier route of s_wigner_kirkwood, which applies
/// the growth factor where the data is exact instead of ramping shifted
/// spectra; the guard still rejects growth beyond ~2x kDefaultRampGuard.
PhaseSpaceFunction s_wigner(const WavefunctionGrid& psi, SParameter s);

/// Force the per-tau shift evaluation (any s within the shift guard).
PhaseSpaceFunction s_wigner_shift(const WavefunctionGrid& psi, SParameter s);

/// Same distribution from the momentum wave function:
///   A(q, p; s) = (1/2 pi hbar) int dnu  Phi*[p - nu(1+s)/2]
///                               e^{+i nu q / hbar}  Phi[p + nu(1-s)/2].
/// The (1 +/- s) weight assignment is fixed by equivalence with s_wigner.
PhaseSpaceFunction s_wigner_momentum(const WavefunctionGrid& phi, SParameter s);

/// Exponential-multiplier route: the ordering operator acts as the phase
/// exp(i tau theta (1-s) / (2 hbar)) on the double-Fourier transform of the
/// Kirkwood product Psi*(q) Phi(p) e^{i p q/hbar} / sqrt(2 pi hbar).
/// At s = +1 the multiplier is identity and the raw product comes back exactly.
PhaseSpaceFunction s_wigner_kirkwood(const WavefunctionGrid& psi, SParameter s);

/// M(tau, theta; s) = int dq Psi*[q - tau(1-s)/2] e^{i theta q/hbar} Psi[q + tau(1+s)/2].
/// Its inverse double Fourier transform reproduces s_wigner exactly.
CharacteristicFunction characteristic(const WavefunctionGrid& psi, SParameter s);

/// A(q,p) = (2 pi hbar)^{-2} sum M(tau, theta) e^{-i(tau p + theta q)/hbar} dtau dtheta.
PhaseSpaceFunction wigner_from_characteristic(const CharacteristicFunction& m,
                                              SymbolKind kind = SymbolKind::state_symbol);

/// A marginal of a state-symbol: real values plus the largest imaginary
/// residue encountered (reported, not discarded silently).
struct Marginal {
  std::vector<double> axis;    // q or p lattice
  std::vector<double> values;  // Re of the integral
  double max_imag_residue = 0.0;
};

/// int A dp -> |Psi(q)|^2 (s-independent). Requires a state-symbol.
Marginal marginal_position(const PhaseSpaceFunction& a);
/// int A dq -> |Phi(p)|^2.
Marginal marginal_momentum(const PhaseSpaceFunction& a);

/// Guard bound used by the multiplier routes: the largest |Re| exponent of
/// exp(i tau theta (1-s)/(2 hbar)) over the lattice is pi n |Im s| / 4.
double multiplier_guard_exponent(const Grid& grid, SParameter s);

}  // namespace sweyl
