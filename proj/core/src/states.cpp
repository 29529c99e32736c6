#include "sweyl/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sweyl {

WavefunctionGrid gaussian_state(const Grid& grid, double q0, double p0, double width,
                                std::vector<std::string>* warnings) {
  if (!(width > 0.0)) throw ValidationError("gaussian_state: width must be positive");
  WavefunctionGrid psi{grid, Representation::position, std::vector<Complex>(grid.n)};
  const double amp = std::pow(std::numbers::pi * width * width, -0.25);
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.q[j] - q0;
    const double mag = amp * std::exp(-x * x / (2.0 * width * width));
    psi.samples[j] = mag * std::polar(1.0, p0 * grid.q[j] / grid.hbar);
  }
  psi.normalize();
  if (warnings) {
    std::string w = support_warning(psi);
    if (!w.empty()) warnings->push_back("gaussian_state: " + w);
  }
  return psi;
}

WavefunctionGrid gaussian_state_momentum(const Grid& grid, double q0, double p0, double width) {
  if (!(width > 0.0)) throw ValidationError("gaussian_state_momentum: width must be positive");
  // Fourier image of the position-space packet under
  // Phi(p) = (2 pi hbar)^(-1/2) int exp(-i p q/hbar) Psi(q) dq:
  // Phi(p) = (pi wp^2)^(-1/4) exp(-(p-p0)^2/(2 wp^2)) exp(-i q0 (p - p0)/hbar)
  // with wp = hbar / w.
  const double wp = grid.hbar / width;
  WavefunctionGrid phi{grid, Representation::momentum, std::vector<Complex>(grid.n)};
  const double amp = std::pow(std::numbers::pi * wp * wp, -0.25);
  for (int k = 0; k < grid.n; ++k) {
    const double y = grid.p[k] - p0;
    const double mag = amp * std::exp(-y * y / (2.0 * wp * wp));
    phi.samples[k] = mag * std::polar(1.0, -q0 * y / grid.hbar);
  }
  phi.normalize();
  return phi;
}

WavefunctionGrid ho_eigenstate(const Grid& grid, int n) {
  if (n < 0) throw ValidationError("ho_eigenstate: n must be nonnegative");
  const double sh = std::sqrt(grid.hbar);
  // Normalized Hermite functions phi_n(x) on the scaled coordinate x = q/sqrt(hbar),
  // with the 1/sqrt(hbar) measure factor so that sum |psi|^2 dq = 1:
  //   phi_0 = pi^(-1/4) exp(-x^2/2)
  //   phi_n = sqrt(2/n) x phi_{n-1} - sqrt((n-1)/n) phi_{n-2}
  WavefunctionGrid psi{grid, Representation::position, std::vector<Complex>(grid.n)};
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.q[j] / sh;
    double prev2 = 0.0;
    double prev1 = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2.0);
    double cur = prev1;
    for (int m = 1; m <= n; ++m) {
      cur = std::sqrt(2.0 / m) * x * prev1 - std::sqrt((m - 1.0) / m) * prev2;
      prev2 = prev1;
      prev1 = cur;
    }
    psi.samples[j] = cur / std::sqrt(sh);  // phi_n(x) / hbar^(1/4)
  }
  std::string w = support_warning(psi);
  if (!w.empty()) {
    std::ostringstream os;
    os << "ho_eigenstate: n = " << n << " does not fit the box: " << w;
    throw ValidationError(os.str());
  }
  psi.normalize();
  return psi;
}

WavefunctionGrid wkb_state(const Grid& grid_template, const WkbFields& fields, double hbar,
                           std::vector<std::string>* warnings) {
  if (!(hbar > 0.0)) throw ValidationError("wkb_state: hbar must be positive");
  if (!fields.rho || !fields.action) throw ValidationError("wkb_state: rho and action required");
  Grid grid = Grid::make(grid_template.n, grid_template.q_min, grid_template.q_max, hbar);
  double mass_check = 0.0;
  WavefunctionGrid psi{grid, Representation::position, std::vector<Complex>(grid.n)};
  for (int j = 0; j < grid.n; ++j) {
    const double rho = fields.rho(grid.q[j]);
    if (rho < 0.0) throw ValidationError("wkb_state: negative density sample");
    mass_check += rho * grid.dq;
    psi.samples[j] = std::sqrt(rho) * std::polar(1.0, fields.action(grid.q[j]) / hbar);
  }
  if (std::abs(mass_check - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "wkb_state: density integrates to " << mass_check << ", expected 1 within 1e-8";
    throw ValidationError(os.str());
  }
  psi.normalize();
  if (warnings) {
    std::string w = support_warning(psi);
    if (!w.empty()) warnings->push_back("wkb_state: " + w);
  }
  return psi;
}

}  // namespace sweyl
