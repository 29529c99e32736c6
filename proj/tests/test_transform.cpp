#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;
namespace {
constexpr double kPi = std::numbers::pi;

Grid default_grid() { return Grid::make(256, -12.0, 12.0, 1.0); }

/// Grid + state matched so the multiplier route stays conditioned for the
/// given imaginary ordering parameter (state width sqrt(dq/dp)).
std::pair<Grid, WavefunctionGrid> matched_setup(int n, double half_box) {
  Grid g = Grid::make(n, -half_box, half_box, 1.0);
  const double width = std::sqrt(g.dq / g.dp);
  return {g, gaussian_state(g, 0.0, 0.0, width)};
}

int index_of(const Grid& g, const std::vector<double>& axis, double value) {
  (void)g;
  for (int i = 0; i < static_cast<int>(axis.size()); ++i)
    if (std::abs(axis[i] - value) < 1e-9) return i;
  REQUIRE(false);
  return -1;
}
}  // namespace

TEST_CASE("s_wigner: ground gaussian at the origin, s in {0, 0.5, 0.5i}") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  const int j0 = index_of(g, g.q, 0.0);
  const int k0 = index_of(g, g.p, 0.0);

  // 1/pi = 0.31830988618379067
  auto w0 = s_wigner(psi, SParameter(0.0));
  CHECK(std::abs(w0.value_at(j0, k0) - Complex(1.0 / kPi)) < 1e-10);

  // (1/pi)(1 + 0.25)^(-1/2) = 0.28470501736687082
  auto w5 = s_wigner(psi, SParameter(0.5));
  CHECK(std::abs(w5.value_at(j0, k0) - oracle::ground_gaussian_origin(0.5)) < 1e-10);
  CHECK(std::abs(w5.value_at(j0, k0).real() - 0.2847050173668708) < 1e-9);

  // (1/pi)(1 - 0.25)^(-1/2) = 0.36755259694786137, imaginary part ~ 0.
  // The origin value is width-independent, so evaluate on the conditioning-
  // matched grid (|Im s| = 0.5 sits beyond the multiplier guard at n = 256).
  auto [gm, psim] = matched_setup(128, 9.0);
  auto wi = s_wigner(psim, SParameter(Complex(0.0, 0.5)));
  const int jm = gm.n / 2, km = gm.n / 2;
  REQUIRE(gm.q[jm] == 0.0);
  CHECK(std::abs(wi.value_at(jm, km) - oracle::ground_gaussian_origin(Complex(0.0, 0.5))) < 1e-9);
  CHECK(std::abs(wi.value_at(jm, km).real() - 0.3675525969478614) < 1e-9);
  CHECK(std::abs(wi.value_at(jm, km).imag()) < 1e-10);
}

TEST_CASE("s_wigner: quadrature oracle at off-center points") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.3, 1.0, 1.1);
  auto fn = oracle::gaussian(0.3, 1.0, 1.1);
  auto fn_conj = [&](Complex z) { return std::conj(fn(std::conj(z))); };

  for (double sv : {0.0, 0.4, -0.25}) {
    auto w = s_wigner(psi, SParameter(sv));
    for (auto [q, p] : {std::pair{0.0, 0.0}, {0.7, -0.4}, {-1.2, 1.5}}) {
      const int j = static_cast<int>(std::round((q - g.q_min) / g.dq));
      const int k = static_cast<int>(std::round(p / g.dp)) + g.n / 2;
      const Complex ref = oracle::s_wigner_point(fn, fn_conj, g.q[j], g.p[k], sv, 1.0, 14.0, 4000);
      CHECK(std::abs(w.value_at(j, k) - ref) < 1e-9);
    }
  }
}

TEST_CASE("s_wigner: wigner reduction at s = 0") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto w = s_wigner(psi, SParameter(0.0));
  double m = 0.0;
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k) {
      const double ref = std::exp(-g.q[j] * g.q[j] - g.p[k] * g.p[k]) / kPi;
      m = std::max(m, std::abs(w.value_at(j, k) - ref));
    }
  CHECK(m < 1e-9);
}

TEST_CASE("s_wigner: normalization and kind") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 1.0, -1.0, 0.8);
  for (auto s : {SParameter(0.0), SParameter(0.5), SParameter(Complex(0.0, 0.3))}) {
    auto w = s_wigner(psi, s);
    CHECK(w.kind == SymbolKind::state_symbol);
    CHECK(std::abs(w.total_mass() - Complex(1.0)) < 1e-8);
  }
  CHECK_THROWS_AS(s_wigner(to_momentum(psi), SParameter(0.0)), ValidationError);
}

TEST_CASE("s_wigner_momentum: equals the position route") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto phi = to_momentum(psi);
  for (double sv : {0.0, 0.5}) {
    auto wq = s_wigner(psi, SParameter(sv));
    auto wp = s_wigner_momentum(phi, SParameter(sv));
    CHECK(max_abs_difference(wq, wp) < 1e-9);
  }
  // complex s on a matched grid, momentum state built analytically
  auto [gm, psim] = matched_setup(128, 9.0);
  const double width = std::sqrt(gm.dq / gm.dp);
  auto phim = gaussian_state_momentum(gm, 0.0, 0.0, width);
  auto wq = s_wigner(psim, SParameter(Complex(0.0, 0.5)));
  auto wp = s_wigner_momentum(phim, SParameter(Complex(0.0, 0.5)));
  CHECK(max_abs_difference(wq, wp) < 1e-9);
  CHECK_THROWS_AS(s_wigner_momentum(psim, SParameter(0.0)), ValidationError);
}

TEST_CASE("s_wigner_momentum: narrow momentum state concentrates on its ridge") {
  Grid g = Grid::make(256, -30.0, 30.0, 1.0);  // wide box: the packet is broad in q
  auto phi = gaussian_state_momentum(g, 0.0, 2.0, 4.0);  // width 1/4 in p
  auto w = s_wigner_momentum(phi, SParameter(0.0));
  // far from p = 2 the distribution is negligible
  double off_ridge = 0.0;
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k)
      if (std::abs(g.p[k] - 2.0) > 1.5) off_ridge = std::max(off_ridge, std::abs(w.value_at(j, k)));
  CHECK(off_ridge < 1e-6);
}

TEST_CASE("s_wigner_kirkwood: raw product at s = +1, routes agree elsewhere") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.4, 0.7, 1.0);
  auto phi = to_momentum(psi);

  // the ordering multiplier is the identity at s = +1, leaving the bare
  // Kirkwood product psi*(q) Phi(p) e^{i p q / hbar} / sqrt(2 pi hbar)
  auto w1 = s_wigner_kirkwood(psi, SParameter(1.0));
  double m = 0.0;
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k) {
      const Complex ref = std::conj(psi.samples[j]) * phi.samples[k] *
                          std::polar(1.0, g.p[k] * g.q[j] / g.hbar) /
                          std::sqrt(2.0 * kPi * g.hbar);
      m = std::max(m, std::abs(w1.value_at(j, k) - ref));
    }
  CHECK(m < 1e-12);

  // r = -1/2 (s = 0) reproduces the symmetric distribution
  CHECK(max_abs_difference(s_wigner_kirkwood(psi, SParameter(0.0)),
                           s_wigner_shift(psi, SParameter(0.0))) < 1e-9);
  CHECK(max_abs_difference(s_wigner_kirkwood(psi, SParameter(0.5)),
                           s_wigner_shift(psi, SParameter(0.5))) < 1e-9);
}

TEST_CASE("three-route equivalence on gaussian and oscillator states") {
  Grid g = default_grid();
  auto ho3 = ho_eigenstate(g, 3);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  for (const auto& st : {psi, ho3}) {
    auto phi = to_momentum(st);
    for (double sv : {0.0, 0.3, -0.3, 0.5}) {
      SParameter s(sv);
      auto a = s_wigner_shift(st, s);
      auto b = s_wigner_momentum(phi, s);
      auto c = s_wigner_kirkwood(st, s);
      CHECK(max_abs_difference(a, b) < 1e-9);
      CHECK(max_abs_difference(a, c) < 1e-9);
      CHECK(max_abs_difference(b, c) < 1e-9);
    }
  }
}

TEST_CASE("marginals: position and momentum densities for every s") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.0, 2.0, 1.0);
  auto phi = to_momentum(psi);
  for (auto s : {SParameter(0.0), SParameter(0.7), SParameter(Complex(0.0, 0.4))}) {
    auto w = s_wigner(psi, s);
    auto mq = marginal_position(w);
    auto mp = marginal_momentum(w);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(mq.values[j] - std::norm(psi.samples[j])));
    CHECK(m < 1e-9);
    m = 0.0;
    for (int k = 0; k < g.n; ++k) m = std::max(m, std::abs(mp.values[k] - std::norm(phi.samples[k])));
    CHECK(m < 1e-9);
    CHECK(mq.max_imag_residue < 1e-9);
  }
  // frozen closed-form spot values (hbar = 1, unit-width gaussian):
  // |Psi(0)|^2 = pi^(-1/2) = 0.56418958354775628
  auto w = s_wigner(psi, SParameter(0.7));
  auto mq = marginal_position(w);
  CHECK(std::abs(mq.values[index_of(g, g.q, 0.0)] - 0.5641895835477563) < 1e-9);
  auto wi = s_wigner(psi, SParameter(Complex(0.0, 0.4)));
  auto mp = marginal_momentum(wi);
  for (int k = 0; k < g.n; ++k) {
    const double ref = std::exp(-(g.p[k] - 2.0) * (g.p[k] - 2.0)) / std::sqrt(kPi);
    CHECK(std::abs(mp.values[k] - ref) < 1e-9);
  }
  CHECK_THROWS_AS(marginal_position(unit_symbol(g, SParameter(0.0))), ValidationError);
}

TEST_CASE("conjugation symmetry: conj(A(s)) = A(-conj(s))") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.5, 1.5, 1.0);
  for (auto s : {Complex(0.3, 0.0), Complex(0.3, 0.2)}) {
    auto a = s_wigner(psi, SParameter(s));
    auto b = s_wigner(psi, SParameter(-std::conj(s)));
    double m = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i)
      m = std::max(m, std::abs(std::conj(a.samples[i]) - b.samples[i]));
    CHECK(m < 1e-10);
  }
}

TEST_CASE("imaginary s: the distribution becomes real again") {
  auto [g, psi] = matched_setup(128, 9.0);
  for (double im : {0.2, 0.4}) {
    auto w = s_wigner(psi, SParameter(Complex(0.0, im)));
    double m = 0.0;
    for (const auto& v : w.samples) m = std::max(m, std::abs(v.imag()));
    CHECK(m < 1e-10);
  }
}

TEST_CASE("characteristic: normalization and frozen gaussian value") {
  // box chosen so tau = 1 lies on the lattice (dq = 1/16)
  Grid g = Grid::make(256, -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto M = characteristic(psi, SParameter(0.0));
  const int m0 = g.n / 2, l0 = g.n / 2;
  CHECK(std::abs(M.at(m0, l0) - Complex(1.0)) < 1e-10);
  // M(tau=1, theta=0) = exp(-1/4) = 0.77880078307140487
  const int m1 = m0 + 16;
  REQUIRE(std::abs(M.tau_at(m1) - 1.0) < 1e-12);
  CHECK(std::abs(M.at(m1, l0) - Complex(0.7788007830714049)) < 1e-9);

  // quadrature-oracle spot checks at general lattice points
  auto fn = oracle::gaussian(0.0, 0.0, 1.0);
  auto fn_conj = [&](Complex z) { return std::conj(fn(std::conj(z))); };
  auto M3 = characteristic(psi, SParameter(0.3));
  for (auto [mm, ll] : {std::pair{m0 + 10, l0 - 6}, {m0 - 20, l0 + 12}}) {
    const Complex ref = oracle::characteristic_point(fn, fn_conj, M3.tau_at(mm), M3.theta_at(ll),
                                                     0.3, 1.0, 10.0, 4000);
    CHECK(std::abs(M3.at(mm, ll) - ref) < 1e-9);
  }
}

TEST_CASE("characteristic: fourier transform reproduces the distribution") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.2, -0.8, 1.0);
  for (auto s : {SParameter(0.0), SParameter(0.3), SParameter(Complex(0.0, 0.4))}) {
    auto M = characteristic(psi, s);
    auto w = wigner_from_characteristic(M);
    CHECK(max_abs_difference(w, s_wigner(psi, s)) < 1e-9);
  }
}

TEST_CASE("overflow guard: large |Im s| is a hard error with the admissible bound") {
  Grid g = default_grid();
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  try {
    (void)s_wigner(psi, SParameter(Complex(0.0, 3.0)));
    FAIL("expected NumericalGuardError");
  } catch (const NumericalGuardError& e) {
    CHECK(std::string(e.what()).find("max admissible |Im s|") != std::string::npos);
  }
  CHECK_THROWS_AS((void)s_wigner_shift(psi, SParameter(Complex(0.0, 0.5))), NumericalGuardError);
}
