#pragma once

#include <cstdint>
#include <vector>

#include "sweyl/phase_space.hpp"
#include "sweyl/states.hpp"

namespace sweyl {

/// Space-conditional moment profile <p^n>(q). Entries where the position
/// density falls below the floor are marked undefined (value 0, defined 0).
struct MomentProfile {
  std::vector<double> q_values;
  std::vector<Complex> values;
  std::vector<std::uint8_t> defined;
  int order = 0;
  SParameter s;
  double density_floor = 1e-12;
};

inline constexpr double kDefaultDensityFloor = 1e-12;

/// <p^n>(q) = int A p^n dp / int A dp, with the p-integrals evaluated in
/// closed form on the trigonometric interpolant over one period (exact; no
/// endpoint bias from the unpaired Nyquist point). Checks that the integrand
/// decays at the p boundary (contribution < 1e-10 of total).
MomentProfile conditional_moment(const PhaseSpaceFunction& a, int order,
                                 double density_floor = kDefaultDensityFloor);

/// <p>(q) = -i hbar [ (1+s)/2 * Psi'/Psi - (1-s)/2 * conj(Psi'/Psi) ],
/// derivatives spectral. Undefined at nodes of Psi.
MomentProfile analytic_first_moment(const WavefunctionGrid& psi, SParameter s,
                                    double density_floor = kDefaultDensityFloor);

/// <p^2>(q) = -hbar^2 [ a^2 Psi''/Psi + b^2 conj(Psi''/Psi)
///                      - 2 a b |Psi'/Psi|^2 ],  a = (1+s)/2, b = (1-s)/2.
MomentProfile analytic_second_moment(const WavefunctionGrid& psi, SParameter s,
                                     double density_floor = kDefaultDensityFloor);

/// R(q) = dS/dt + (S')^2/(2m) + V. S' is differentiated from the analytic
/// callable with a 4th-order central stencil (exact for the polynomial actions
/// used in practice; a periodic spectral derivative would corrupt non-periodic
/// actions with box-edge artifacts).
std::vector<double> hj_residual(const WkbFields& fields, const Grid& grid);

/// One hbar point of the classical-limit scan: fitted s-polynomial
/// coefficients of the two moments, and the Hamilton-Jacobi combination
///   hj_bracket = -m dS/dt - m V - (Re B0 - Re B2)/2,
/// which equals the sigma^2 bracket of the substituted second moment and
/// converges to -m R(q) as hbar -> 0.
struct ScanEntry {
  double hbar = 0.0;
  std::vector<double> q_values;
  std::vector<Complex> p1_c0, p1_c1;          // <p>   = c0 + c1 s
  std::vector<Complex> p2_c0, p2_c1, p2_c2;   // <p^2> = c0 + c1 s + c2 s^2
  std::vector<double> hj_bracket;
  std::vector<std::uint8_t> defined;
};

struct ScanRatio {
  double hbar_from = 0.0, hbar_to = 0.0;
  double median_b2_ratio = 0.0;  // |c2(hbar_from)| / |c2(hbar_to)| over the support window
  double median_hj_ratio = 0.0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::vector<ScanRatio> ratios;
};

/// Builds the WKB state per hbar, measures both moments over the s samples,
/// fits the s-coefficients pointwise (exact interpolation for 3 samples,
/// least squares beyond), and reports convergence ratios between consecutive
/// hbar values. Requires >= 3 distinct s samples and a phase-resolved grid
/// (max |S'| dq / hbar <= pi/4).
ScanReport classical_limit_scan(const WkbFields& fields, const Grid& grid_template,
                                const std::vector<double>& s_samples,
                                const std::vector<double>& hbar_samples,
                                double density_floor = kDefaultDensityFloor);

}  // namespace sweyl
