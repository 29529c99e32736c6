#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sweyl/dynamics.hpp"
#include "sweyl/moments.hpp"
#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;
namespace {
constexpr double kPi = std::numbers::pi;

std::pair<double, double> phase_space_center(const PhaseSpaceFunction& rho) {
  const Grid& g = rho.grid;
  Complex qc = 0.0, pc = 0.0, mass = 0.0;
  auto dense = rho.dense();
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k) {
      const Complex v = dense[static_cast<size_t>(j) * g.n + k];
      mass += v;
      qc += v * g.q[j];
      pc += v * g.p[k];
    }
  return {(qc / mass).real(), (pc / mass).real()};
}
}  // namespace

TEST_CASE("evolve_schrodinger: free gaussian spreading") {
  Grid g = Grid::make(256, -16.0, 16.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto ev = evolve_schrodinger(psi, HamiltonianSpec::free_particle(1.0), 1e-3, 1000);
  double var = 0.0;
  for (int j = 0; j < g.n; ++j)
    var += std::norm(ev.snapshots.back().samples[j]) * g.q[j] * g.q[j] * g.dq;
  CHECK(std::abs(var - 1.0) < 1e-6);  // (1 + t^2)/2 at t = 1
}

TEST_CASE("evolve_schrodinger: eigenstate density is stationary") {
  Grid g = Grid::make(128, -10.0, 10.0, 1.0);
  auto psi = ho_eigenstate(g, 2);
  auto ev = evolve_schrodinger(psi, HamiltonianSpec::harmonic(1.0, 1.0), 2.5e-4, 1400);
  double m = 0.0;
  for (int j = 0; j < g.n; ++j)
    m = std::max(m,
                 std::abs(std::norm(ev.snapshots.back().samples[j]) - std::norm(psi.samples[j])));
  CHECK(m < 1e-8);
}

TEST_CASE("evolve_schrodinger: unitary over 1000 steps") {
  Grid g = Grid::make(128, -10.0, 10.0, 1.0);
  auto psi = gaussian_state(g, 1.0, -0.5, 0.9);
  auto ev = evolve_schrodinger(psi, HamiltonianSpec::harmonic(1.0, 1.0), 1e-3, 1000);
  CHECK(std::abs(ev.norms.back() - 1.0) < 1e-10);
}

TEST_CASE("evolve_moyal: zero steps returns the initial distribution") {
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);
  auto rho0 = s_wigner(gaussian_state(g, 1.0, 0.0, 1.0), SParameter(0.3));
  auto ev = evolve_moyal(rho0, HamiltonianSpec::free_particle(1.0), SParameter(0.3), 1e-3, 0);
  REQUIRE(ev.snapshots.size() == 1);
  REQUIRE(ev.times.size() == 1);
  CHECK(max_abs_difference(ev.snapshots.front(), rho0) == 0.0);
}

TEST_CASE("evolve_moyal: coherent state rotates rigidly under the harmonic flow") {
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);
  auto rho0 = s_wigner(gaussian_state(g, 1.0, 0.0, 1.0), SParameter(0.0));
  const double t = kPi / 2.0;
  const int steps = 1571;  // ~1e-3 step
  auto ev = evolve_moyal(rho0, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0), t / steps,
                         steps);
  auto [qc, pc] = phase_space_center(ev.snapshots.back());
  CHECK(std::abs(qc - 0.0) < 1e-6);
  CHECK(std::abs(pc - (-1.0)) < 1e-6);
  CHECK(std::abs(std::hypot(qc, pc) - 1.0) < 1e-6);
}

TEST_CASE("evolve_moyal: mass and position marginal conserved over a period") {
  // the tau-bandwidth of e^{-q^2-p^2} needs tau_max = n dq / 2 >= 9
  Grid g = Grid::make(96, -9.0, 9.0, 1.0);
  auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
  auto rho0 = s_wigner(psi, SParameter(0.0));
  const int steps = 6284;  // t = 2 pi at dt ~ 1e-3
  auto ev = evolve_moyal(rho0, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0),
                         2.0 * kPi / steps, steps);
  CHECK(std::abs(ev.masses.back() - ev.masses.front()) < 1e-8);
  auto m0 = marginal_position(ev.snapshots.front());
  auto m1 = marginal_position(ev.snapshots.back());
  double m = 0.0;
  for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(m1.values[j] - m0.values[j]));
  CHECK(m < 1e-8);
}

TEST_CASE("evolve_moyal: time reversal returns the initial distribution") {
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);
  auto rho0 = s_wigner(gaussian_state(g, 1.0, 0.0, 1.0), SParameter(0.0));
  auto h = HamiltonianSpec::harmonic(1.0, 1.0);
  auto fwd = evolve_moyal(rho0, h, SParameter(0.0), 1e-3, 200);
  auto back = evolve_moyal(fwd.snapshots.back(), h, SParameter(0.0), -1e-3, 200);
  CHECK(max_abs_difference(back.snapshots.back(), rho0) < 1e-8);
}

TEST_CASE("evolve_moyal: stability guard rejects oversized steps") {
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);
  auto rho0 = s_wigner(gaussian_state(g, 0.0, 0.0, 1.0), SParameter(0.0));
  CHECK_THROWS_AS(evolve_moyal(rho0, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0), 0.1, 5),
                  NumericalGuardError);
}

TEST_CASE("evolve_moyal: fast quadratic path matches the generic bracket") {
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);
  SParameter s(0.3);
  auto rho0 = s_wigner(gaussian_state(g, 0.5, -0.5, 1.0), s);
  auto h = HamiltonianSpec::harmonic(1.0, 1.3);
  // one RK4 step through evolve_moyal (uses the precomputed quadratic path)
  auto ev = evolve_moyal(rho0, h, s, 1e-3, 1);
  // the same step assembled from moyal_bracket directly
  auto h_w = hamiltonian_symbol(h, g, s);
  auto rhs = [&](const PhaseSpaceFunction& r) { return moyal_bracket(h_w, r, s, g.hbar); };
  PhaseSpaceFunction rho = rho0;
  const double dt = 1e-3;
  auto k1 = rhs(rho);
  PhaseSpaceFunction y2 = rho;
  for (size_t i = 0; i < y2.samples.size(); ++i) y2.samples[i] += 0.5 * dt * k1.samples[i];
  auto k2 = rhs(y2);
  PhaseSpaceFunction y3 = rho;
  for (size_t i = 0; i < y3.samples.size(); ++i) y3.samples[i] += 0.5 * dt * k2.samples[i];
  auto k3 = rhs(y3);
  PhaseSpaceFunction y4 = rho;
  for (size_t i = 0; i < y4.samples.size(); ++i) y4.samples[i] += dt * k3.samples[i];
  auto k4 = rhs(y4);
  for (size_t i = 0; i < rho.samples.size(); ++i)
    rho.samples[i] += dt / 6.0 * k1.samples[i] + dt / 3.0 * k2.samples[i] +
                      dt / 3.0 * k3.samples[i] + dt / 6.0 * k4.samples[i];
  CHECK(max_abs_difference(ev.snapshots.back(), rho) < 1e-13);
}

TEST_CASE("cross_validate: harmonic hamiltonian at s = 0") {
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
  auto cv = cross_validate(psi, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0), kPi / 8.0,
                           2e-3);
  CHECK(cv.pass);
  CHECK(cv.max_deviation < 1e-5);
}

TEST_CASE("cross_validate: free hamiltonian at s = 0.3 (complex-valued evolution)") {
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto cv = cross_validate(psi, HamiltonianSpec::free_particle(1.0), SParameter(0.3), 0.25, 2e-3);
  CHECK(cv.pass);
  CHECK(cv.max_deviation < 1e-5);
}

TEST_CASE("cross_validate: t = 0 has no deviation") {
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 0.5, 0.5, 1.0);
  auto cv = cross_validate(psi, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0), 0.0, 1e-3);
  CHECK(cv.max_deviation < 1e-10);
}

TEST_CASE("moyal marginal tracks the schrodinger density for s != 0") {
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  SParameter s(0.3);
  const double t = 0.25;
  const int steps = 125;
  auto rho = evolve_moyal(s_wigner(psi, s), HamiltonianSpec::free_particle(1.0), s, t / steps,
                          steps);
  auto schro = evolve_schrodinger(psi, HamiltonianSpec::free_particle(1.0), t / steps, steps);
  auto mq = marginal_position(rho.snapshots.back());
  double m = 0.0;
  for (int j = 0; j < g.n; ++j)
    m = std::max(m, std::abs(mq.values[j] - std::norm(schro.snapshots.back().samples[j])));
  CHECK(m < 1e-5);
}

TEST_CASE("hamiltonian_symbol: custom potential enters as sampled residual") {
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);
  auto h = HamiltonianSpec::custom(2.0, [](double q) { return 0.3 * std::exp(-q * q); });
  auto w = hamiltonian_symbol(h, g, SParameter(0.0));
  CHECK(w.poly.count({0, 2}) == 1);
  CHECK(std::abs(w.poly.at({0, 2}) - Complex(0.25)) < 1e-15);
  CHECK(std::abs(w.value_at(g.n / 2, 5) - Complex(0.3 + g.p[5] * g.p[5] / 4.0)) < 1e-12);
}
