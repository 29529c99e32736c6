#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sweyl/grid.hpp"
#include "sweyl/s_parameter.hpp"

namespace sweyl {

enum class SymbolKind { state_symbol, operator_symbol };

/// Exact polynomial in (q, p): (deg_q, deg_p) -> coefficient.
using PolyMap = std::map<std::pair<int, int>, Complex>;

Complex poly_eval(const PolyMap& poly, double q, double p);
PolyMap poly_derivative(const PolyMap& poly, int dq_order, int dp_order);
PolyMap poly_multiply(const PolyMap& a, const PolyMap& b);
PolyMap poly_add(const PolyMap& a, const PolyMap& b, Complex scale_b = 1.0);
std::vector<Complex> poly_on_grid(const PolyMap& poly, const Grid& grid);
int poly_total_degree(const PolyMap& poly);

/// A symbol A(q, p) on the phase-space lattice, stored as a periodic residual
/// sampled on the grid plus an exact polynomial part.
///
/// The polynomial part exists because unbounded symbols (q, p, p^2/2m + V...)
/// are not periodic: feeding their sawtooth samples through spectral machinery
/// would poison every derivative. Coordinate and Hamiltonian symbols carry
/// their polynomial coefficients exactly; transforms of normalizable states
/// and bounded operators are purely periodic (empty polynomial).
struct PhaseSpaceFunction {
  Grid grid;
  SParameter s;
  SymbolKind kind = SymbolKind::state_symbol;
  std::vector<Complex> samples;  // residual, [j*n + k] = A(q_j, p_k)
  PolyMap poly;

  int n() const { return grid.n; }
  bool has_poly() const { return !poly.empty(); }

  Complex poly_at(double q, double p) const;
  Complex value_at(int j, int k) const;
  /// samples + polynomial evaluated on the lattice
  std::vector<Complex> dense() const;

  /// sum A dq dp over the lattice (includes the polynomial part)
  Complex total_mass() const;
};

PhaseSpaceFunction unit_symbol(const Grid& grid, SParameter s);
PhaseSpaceFunction coordinate_q_symbol(const Grid& grid, SParameter s);
PhaseSpaceFunction coordinate_p_symbol(const Grid& grid, SParameter s);

/// Wraps raw samples (no polynomial part).
PhaseSpaceFunction make_symbol(const Grid& grid, SParameter s, SymbolKind kind,
                               std::vector<Complex> samples);

PhaseSpaceFunction operator+(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b);
PhaseSpaceFunction operator-(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b);
PhaseSpaceFunction operator*(Complex c, const PhaseSpaceFunction& a);

/// max |a - b| over the lattice (dense values)
double max_abs_difference(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b);

/// Characteristic function M(tau, theta): the double Fourier transform of the
/// symbol, M(tau, theta) = sum A(q,p) exp(+i(tau p + theta q)/hbar) dq dp.
/// tau runs on the dq-spaced centered lattice, theta on the dp-spaced one.
/// samples layout: [m*n + l] = M(tau_m, theta_l).
struct CharacteristicFunction {
  Grid grid;
  SParameter s;
  std::vector<Complex> samples;

  int n() const { return grid.n; }
  double tau_at(int m) const { return (m - grid.n / 2) * grid.dq; }
  double theta_at(int l) const { return (l - grid.n / 2) * grid.dp; }
  Complex at(int m, int l) const { return samples[static_cast<size_t>(m) * grid.n + l]; }
};

}  // namespace sweyl
