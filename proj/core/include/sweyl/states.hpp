#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sweyl/grid.hpp"

namespace sweyl {

/// Gaussian packet (pi w^2)^(-1/4) exp(-(q-q0)^2/(2 w^2)) exp(i p0 q / hbar),
/// renormalized on the grid. A support violation is appended to `warnings`
/// when provided, otherwise silently tolerated (the CLI escalates under --strict).
WavefunctionGrid gaussian_state(const Grid& grid, double q0, double p0, double width,
                                std::vector<std::string>* warnings = nullptr);

/// Gaussian constructed directly in the momentum representation (the Fourier
/// image of gaussian_state): centered at p0 with momentum-space width hbar/w.
WavefunctionGrid gaussian_state_momentum(const Grid& grid, double q0, double p0, double width);

/// n-th eigenstate of H = (p^2 + q^2)/2 in units m = omega = 1 with the grid's
/// hbar. Built from the normalized Hermite-function three-term recurrence.
/// Throws ValidationError if the state does not fit the box.
WavefunctionGrid ho_eigenstate(const Grid& grid, int n);

/// Analytic inputs for a semiclassical state sqrt(rho) exp(i S / hbar):
/// density rho(q), action S(q) at a fixed time, its analytic time derivative,
/// mass, and the external potential.
struct WkbFields {
  std::function<double(double)> rho;
  std::function<double(double)> action;        // S(q)
  std::function<double(double)> action_dot;    // dS/dt(q) at the same time
  std::function<double(double)> potential;     // V(q)
  double mass = 1.0;
};

/// sqrt(rho) exp(i S / hbar) sampled and renormalized on a grid that shares
/// the template's box and size but carries the given hbar.
/// rho must be nonnegative and unit-normalized on the grid (1e-8).
WavefunctionGrid wkb_state(const Grid& grid_template, const WkbFields& fields, double hbar,
                           std::vector<std::string>* warnings = nullptr);

}  // namespace sweyl
