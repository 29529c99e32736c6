#pragma once

#include "sweyl/phase_space.hpp"

namespace sweyl {

/// The s-parameterized star product: the symbol of the operator product,
///
///   A * B = A exp[ (i hbar/2) ( (1+s) dq_left dp_right - (1-s) dp_left dq_right ) ] B.
///
/// Evaluation is split by structure, each part exact:
///   poly * poly      -> symbolic bidifferential series (terminates),
///   poly * residual  -> terminating series with spectral derivatives,
///   residual * residual -> twisted convolution over Fourier-mode pairs,
///     phase exp(-(i/2 hbar)[(1+s) theta1 tau2 - (1-s) theta2 tau1]),
///     out-of-band mode sums dropped (projection onto the lattice band).
/// Fixed summation order; no truncated derivative series anywhere.
PhaseSpaceFunction star_product(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b,
                                SParameter s);

/// Symbol of [A, B], computed directly with the sine-kernel twist
/// -2i exp(...) sin(...) (one twisted-convolution pass). Agrees with
/// star_product(a,b) - star_product(b,a) to roundoff; both are exposed so the
/// agreement stays testable.
PhaseSpaceFunction commutator_symbol(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b,
                                     SParameter s);

/// [H, rho]/(i hbar): the right-hand side of the phase-space equation of
/// motion d rho/dt. H must be an operator-symbol, rho a state-symbol on the
/// same grid with the same s.
PhaseSpaceFunction moyal_bracket(const PhaseSpaceFunction& h_w, const PhaseSpaceFunction& rho_w,
                                 SParameter s, double hbar);

}  // namespace sweyl
