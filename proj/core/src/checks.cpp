#include "sweyl/checks.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "sweyl/dynamics.hpp"
#include "sweyl/fft.hpp"
#include "sweyl/moments.hpp"
#include "sweyl/star.hpp"
#include "sweyl/states.hpp"
#include "sweyl/symbol.hpp"
#include "sweyl/transform.hpp"

namespace sweyl::checks {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void run(const std::string& name, double tolerance, const std::function<double()>& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.tolerance = tolerance;
    try {
      r.max_err = body();
      r.pass = r.max_err < tolerance;
    } catch (const std::exception& e) {
      r.pass = false;
      r.max_err = std::nan("");
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<Complex> random_band_limited(const Grid& g, std::uint64_t seed) {
  // Populate only the central third of the spectrum so products stay in-band.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int n = g.n;
  std::vector<Complex> modes(n, Complex(0.0));
  for (int k = 0; k < n; ++k) {
    const int kappa = (k < n / 2) ? k : k - n;
    if (std::abs(kappa) > n / 6) continue;
    modes[k] = Complex(dist(rng), dist(rng)) * std::exp(-3.0 * std::abs(kappa) / (n / 6.0));
  }
  std::vector<Complex> out(n);
  fft::dft(modes, out, fft::kBackward);
  for (auto& v : out) v /= static_cast<double>(n);
  return out;
}

PhaseSpaceFunction random_band_limited_symbol(const Grid& g, SParameter s, std::uint64_t seed) {
  auto fx = random_band_limited(g, seed);
  auto fy = random_band_limited(g, seed + 1);
  auto gx = random_band_limited(g, seed + 2);
  auto gy = random_band_limited(g, seed + 3);
  std::vector<Complex> samples(static_cast<size_t>(g.n) * g.n);
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k)
      samples[static_cast<size_t>(j) * g.n + k] = fx[j] * fy[k] + gx[j] * gy[k];
  auto out = make_symbol(g, s, SymbolKind::operator_symbol, std::move(samples));
  return out;
}

/// Operator whose s-symbol is band-limited ("band-limited" in the phase-space
/// sense: the kernel also decays away from the main diagonal).
OperatorMatrix random_band_limited_operator(const Grid& g, SParameter s, std::uint64_t seed,
                                            bool hermitian) {
  auto sym = random_band_limited_symbol(g, s, seed);
  auto op = symbol_to_operator(sym, s);
  if (hermitian) {
    Eigen::MatrixXcd h = 0.5 * (op.entries + op.entries.adjoint());
    h /= h.cwiseAbs().maxCoeff();
    return OperatorMatrix{g, std::move(h), true};
  }
  op.entries /= op.entries.cwiseAbs().maxCoeff();
  return op;
}

std::vector<CheckResult> check_grid() {
  Recorder rec("grid");
  Grid g = Grid::make(256, -12.0, 12.0, 1.0);

  rec.run("fourier-duality dq*dp*n = 2*pi*hbar", 1e-14, [&] {
    return std::abs(g.dq * g.dp * g.n - 2.0 * kPi * g.hbar) / (2.0 * kPi);
  });
  rec.run("round trip to_position(to_momentum(psi)) = psi", 1e-12, [&] {
    auto psi = gaussian_state(g, 0.7, -1.3, 1.1);
    auto back = to_position(to_momentum(psi));
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(back.samples[j] - psi.samples[j]));
    return m;
  });
  rec.run("parseval", 1e-12, [&] {
    auto psi = gaussian_state(g, 0.5, 2.0, 0.8);
    auto phi = to_momentum(psi);
    return std::abs(psi.norm() - phi.norm());
  });
  rec.run("integer shift equals index rotation", 1e-13, [&] {
    auto f = random_band_limited(g, 11);
    auto shifted = fractional_shift(f, g.dq, g.dq);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) {
      const int jm = (j - 1 + g.n) % g.n;
      m = std::max(m, std::abs(shifted[j] - f[jm]));
    }
    return m;
  });
  rec.run("shift composition shift(a)+shift(b) = shift(a+b)", 1e-12, [&] {
    auto f = random_band_limited(g, 23);
    auto two = fractional_shift(fractional_shift(f, 0.37, g.dq), -1.21, g.dq);
    auto one = fractional_shift(f, 0.37 - 1.21, g.dq);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(two[j] - one[j]));
    return m;
  });
  rec.run("shifted gaussian matches closed form", 1e-10, [&] {
    auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
    auto shifted = fractional_shift(psi.samples, 0.5, g.dq);
    auto ref = gaussian_state(g, 0.5, 0.0, 1.0);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) m = std::max(m, std::abs(shifted[j] - ref.samples[j]));
    return m;
  });
  return rec.take();
}

std::vector<CheckResult> check_states() {
  Recorder rec("states");
  Grid g = Grid::make(512, -12.0, 12.0, 1.0);

  rec.run("constructors return unit norm", 1e-10, [&] {
    double m = 0.0;
    m = std::max(m, std::abs(gaussian_state(g, 1.0, 2.0, 1.0).norm() - 1.0));
    m = std::max(m, std::abs(ho_eigenstate(g, 5).norm() - 1.0));
    return m;
  });
  rec.run("ho eigenstates pairwise orthonormal (n <= 10)", 1e-8, [&] {
    std::vector<WavefunctionGrid> states;
    for (int n = 0; n <= 10; ++n) states.push_back(ho_eigenstate(g, n));
    double m = 0.0;
    for (size_t i = 0; i < states.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        Complex ip = 0.0;
        for (int x = 0; x < g.n; ++x)
          ip += std::conj(states[i].samples[x]) * states[j].samples[x];
        ip *= g.dq;
        m = std::max(m, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
    return m;
  });
  rec.run("gaussian first moments <q>, <p>", 1e-9, [&] {
    auto psi = gaussian_state(g, 1.0, 2.0, 1.0);
    Complex q_mean = 0.0;
    for (int j = 0; j < g.n; ++j) q_mean += std::norm(psi.samples[j]) * g.q[j] * g.dq;
    auto phi = to_momentum(psi);
    Complex p_mean = 0.0;
    for (int k = 0; k < g.n; ++k) p_mean += std::norm(phi.samples[k]) * g.p[k] * g.dp;
    return std::max(std::abs(q_mean - 1.0), std::abs(p_mean - 2.0));
  });
  rec.run("ho n=3 energy 3.5 hbar", 1e-8, [&] {
    auto psi = ho_eigenstate(g, 3);
    auto e = expectation_energy(HamiltonianSpec::harmonic(1.0, 1.0), psi);
    return std::abs(e - Complex(3.5));
  });
  return rec.take();
}

std::vector<CheckResult> check_transform() {
  Recorder rec("transform");
  Grid g = Grid::make(256, -12.0, 12.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  auto boosted = gaussian_state(g, 0.0, 2.0, 1.0);
  const std::vector<SParameter> s_set = {SParameter(0.0), SParameter(0.3), SParameter(-0.3),
                                         SParameter(0.5), SParameter(Complex(0.0, 0.4))};

  rec.run("marginal invariance over s (position and momentum)", 1e-8, [&] {
    double m = 0.0;
    for (const auto& st : {psi, boosted}) {
      auto phi = to_momentum(st);
      for (const auto& s : s_set) {
        auto w = s_wigner(st, s);
        auto mq = marginal_position(w);
        auto mp = marginal_momentum(w);
        for (int j = 0; j < g.n; ++j)
          m = std::max(m, std::abs(mq.values[j] - std::norm(st.samples[j])));
        for (int k = 0; k < g.n; ++k)
          m = std::max(m, std::abs(mp.values[k] - std::norm(phi.samples[k])));
      }
    }
    return m;
  });
  rec.run("s=0 reduction to the symmetric distribution", 1e-9, [&] {
    auto w = s_wigner(psi, SParameter(0.0));
    double m = 0.0;
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) {
        const double ref = std::exp(-g.q[j] * g.q[j] - g.p[k] * g.p[k]) / kPi;
        m = std::max(m, std::abs(w.value_at(j, k) - ref));
      }
    return m;
  });
  rec.run("imaginary s keeps the distribution real", 1e-10, [&] {
    Grid gm = Grid::make(128, -9.0, 9.0, 1.0);
    const double width = std::sqrt(gm.dq / gm.dp);
    auto matched = gaussian_state(gm, 0.0, 0.0, width);
    auto w = s_wigner(matched, SParameter(Complex(0.0, 0.4)));
    double m = 0.0;
    for (const auto& v : w.samples) m = std::max(m, std::abs(v.imag()));
    return m;
  });
  rec.run("conjugation symmetry conj(A(s)) = A(-conj(s))", 1e-10, [&] {
    auto a = s_wigner(boosted, SParameter(Complex(0.3, 0.2)));
    auto b = s_wigner(boosted, SParameter(Complex(-0.3, 0.2)));
    double m = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i)
      m = std::max(m, std::abs(std::conj(a.samples[i]) - b.samples[i]));
    return m;
  });
  rec.run("three-route equivalence (real s)", 1e-9, [&] {
    double m = 0.0;
    auto ho3 = ho_eigenstate(g, 3);
    for (const auto& st : {psi, ho3}) {
      auto phi = to_momentum(st);
      for (double sv : {0.0, 0.3, -0.3, 0.5}) {
        SParameter s(sv);
        auto w1 = s_wigner_shift(st, s);
        auto w2 = s_wigner_momentum(phi, s);
        auto w3 = s_wigner_kirkwood(st, s);
        m = std::max(m, max_abs_difference(w1, w2));
        m = std::max(m, max_abs_difference(w1, w3));
      }
    }
    return m;
  });
  rec.run("characteristic normalization M(0,0) = 1", 1e-10, [&] {
    auto M = characteristic(boosted, SParameter(0.3));
    return std::abs(M.at(g.n / 2, g.n / 2) - Complex(1.0));
  });
  rec.run("fourier of characteristic reproduces the distribution", 1e-9, [&] {
    double m = 0.0;
    for (const auto& s : {SParameter(0.0), SParameter(0.3), SParameter(Complex(0.0, 0.4))}) {
      auto M = characteristic(boosted, s);
      auto w = wigner_from_characteristic(M);
      m = std::max(m, max_abs_difference(w, s_wigner(boosted, s)));
    }
    return m;
  });
  return rec.take();
}

std::vector<CheckResult> check_symbol() {
  Recorder rec("symbol");
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);

  rec.run("canonicity jacobian on reference coefficients", 1e-12, [&] {
    double m = std::abs(canonicity_jacobian(CanonicalShift::uniform(0.5, -0.5, 0.5, -0.5)) - 1.0);
    m = std::max(m, std::abs(canonicity_jacobian(CanonicalShift::uniform(1, 0, 1, 0)) - 1.0));
    m = std::max(m, std::abs(canonicity_jacobian(CanonicalShift::uniform(1, 0, 2, 0)) - 2.0));
    return m;
  });
  rec.run("r <-> s mapping", 1e-12, [&] {
    auto r = r_parameter(CanonicalShift::uniform(0.5, -0.5, 0.5, -0.5));
    auto s = s_from_r(r);
    double m = std::abs(r[0] + 0.5) + std::abs(s[0]);
    auto r2 = r_parameter(CanonicalShift::uniform(1, 0, 1, 0));
    m = std::max(m, std::abs(r2[0] + 1.0) + std::abs(s_from_r(r2)[0] - 1.0));
    return m;
  });
  rec.run("identity symbol is 1 for every s", 1e-10, [&] {
    double m = 0.0;
    for (double sv : {0.0, 0.5, -0.3}) {
      auto w = operator_to_symbol(identity_operator(g), SParameter(sv));
      for (const auto& v : w.samples) m = std::max(m, std::abs(v - Complex(1.0)));
    }
    return m;
  });
  rec.run("position symbol is q for every s", 1e-9, [&] {
    double m = 0.0;
    for (double sv : {0.0, 0.5}) {
      auto w = operator_to_symbol(position_operator(g), SParameter(sv));
      for (int j = 0; j < g.n; ++j)
        for (int k = 0; k < g.n; ++k)
          m = std::max(m, std::abs(w.value_at(j, k) - Complex(g.q[j])));
    }
    return m;
  });
  rec.run("operator <-> symbol round trip", 1e-9, [&] {
    double m = 0.0;
    for (double sv : {0.0, 0.3}) {
      auto a = random_band_limited_operator(g, SParameter(sv), 101, true);
      auto w = operator_to_symbol(a, SParameter(sv));
      auto back = symbol_to_operator(w, SParameter(sv));
      m = std::max(m, (back.entries - a.entries).cwiseAbs().maxCoeff());
    }
    return m;
  });
  rec.run("trace identity", 1e-8, [&] {
    auto a = random_band_limited_operator(g, SParameter(0.3), 202, true);
    auto w = operator_to_symbol(a, SParameter(0.3));
    Complex mass = 0.0;
    for (const auto& v : w.samples) mass += v;
    mass *= g.dq * g.dp / (2.0 * kPi * g.hbar);
    return std::abs(mass - a.entries.trace());
  });
  rec.run("projector symbol equals 2 pi hbar s_wigner", 1e-9, [&] {
    Grid gw = Grid::make(128, -10.0, 10.0, 1.0);
    auto psi = gaussian_state(gw, 0.0, 0.0, 1.0);
    auto w_op = operator_to_symbol(projector(psi), SParameter(0.0));
    auto w_state = s_wigner(psi, SParameter(0.0));
    double m = 0.0;
    for (size_t i = 0; i < w_op.samples.size(); ++i)
      m = std::max(m,
                   std::abs(w_op.samples[i] / (2.0 * kPi * gw.hbar) - w_state.samples[i]));
    return m;
  });
  rec.run("adjoint covariance symbol(A^dag, s) = conj(symbol(A, -s))", 1e-10, [&] {
    auto a = random_band_limited_operator(g, SParameter(0.0), 7, false);
    OperatorMatrix adag{g, a.entries.adjoint(), false};
    auto w1 = operator_to_symbol(adag, SParameter(0.3));
    auto w2 = operator_to_symbol(a, SParameter(-0.3));
    double m = 0.0;
    for (size_t i = 0; i < w1.samples.size(); ++i)
      m = std::max(m, std::abs(w1.samples[i] - std::conj(w2.samples[i])));
    return m;
  });
  return rec.take();
}

std::vector<CheckResult> check_star() {
  Recorder rec("star");
  Grid g = Grid::make(64, -8.0, 8.0, 1.0);

  rec.run("star(1, B) = B", 1e-12, [&] {
    SParameter s(0.3);
    auto b = random_band_limited_symbol(g, s, 31);
    auto c = star_product(unit_symbol(g, s), b, s);
    return max_abs_difference(c, b);
  });
  rec.run("coordinate commutator q*p - p*q = i hbar (all s)", 1e-12, [&] {
    double m = 0.0;
    for (const auto& s : {SParameter(0.0), SParameter(0.5), SParameter(Complex(0.0, 0.4))}) {
      auto q = coordinate_q_symbol(g, s);
      auto p = coordinate_p_symbol(g, s);
      auto c = star_product(q, p, s) - star_product(p, q, s);
      // expect the constant i hbar and nothing else
      double dev = max_abs(c.samples);
      auto poly = c.poly;
      Complex c00 = poly.count({0, 0}) ? poly[{0, 0}] : Complex(0.0);
      dev = std::max(dev, std::abs(c00 - Complex(0.0, g.hbar)));
      poly.erase({0, 0});
      for (const auto& [deg, coef] : poly) {
        (void)deg;
        dev = std::max(dev, std::abs(coef));
      }
      m = std::max(m, dev);
    }
    return m;
  });
  rec.run("sine-kernel commutator equals star difference", 1e-10, [&] {
    SParameter s(0.3);
    auto a = random_band_limited_symbol(g, s, 41);
    auto b = random_band_limited_symbol(g, s, 51);
    auto direct = commutator_symbol(a, b, s);
    auto via_star = star_product(a, b, s) - star_product(b, a, s);
    return max_abs_difference(direct, via_star);
  });
  rec.run("commutator antisymmetry [A, A] = 0", 1e-12, [&] {
    SParameter s(0.3);
    auto a = random_band_limited_symbol(g, s, 61);
    auto c = commutator_symbol(a, a, s);
    return max_abs(c.samples);
  });
  rec.run("operator-route equivalence symbol(AB) = star(symbols)", 1e-8, [&] {
    double m = 0.0;
    for (double sv : {0.0, 0.3}) {
      SParameter s(sv);
      auto a = random_band_limited_operator(g, s, 71, true);
      auto b = random_band_limited_operator(g, s, 81, true);
      OperatorMatrix ab{g, a.entries * b.entries, false};
      auto direct = operator_to_symbol(ab, s);
      auto starred = star_product(operator_to_symbol(a, s), operator_to_symbol(b, s), s);
      m = std::max(m, max_abs_difference(direct, starred));
    }
    return m;
  });
  rec.run("associativity on band-limited symbols", 1e-8, [&] {
    double m = 0.0;
    for (const auto& s : {SParameter(0.0), SParameter(0.3), SParameter(Complex(0.0, 0.4))}) {
      auto a = random_band_limited_symbol(g, s, 91);
      auto b = random_band_limited_symbol(g, s, 92);
      auto c = random_band_limited_symbol(g, s, 93);
      auto left = star_product(star_product(a, b, s), c, s);
      auto right = star_product(a, star_product(b, c, s), s);
      m = std::max(m, max_abs_difference(left, right));
    }
    return m;
  });
  rec.run("free-particle bracket: poisson + ordering term", 1e-9, [&] {
    Grid gg = Grid::make(128, -10.0, 10.0, 1.0);
    SParameter s(0.3);
    auto psi = gaussian_state(gg, 0.0, 0.0, 1.0);
    auto rho = s_wigner(psi, s);
    auto h = hamiltonian_symbol(HamiltonianSpec::free_particle(1.0), gg, s);
    auto bracket = moyal_bracket(h, rho, s, gg.hbar);
    // reference: -p d rho/dq - (i hbar s / 2) d^2 rho/dq^2, via the s=0
    // closed-form gaussian distribution derivatives
    double m = 0.0;
    auto dense = rho.dense();
    // spectral q-derivatives of rho
    std::vector<Complex> col(gg.n), d1(gg.n), d2(gg.n);
    for (int k = 0; k < gg.n; ++k) {
      for (int j = 0; j < gg.n; ++j) col[j] = dense[static_cast<size_t>(j) * gg.n + k];
      auto c1 = spectral_derivative(col, 1, gg.dq);
      auto c2 = spectral_derivative(col, 2, gg.dq);
      for (int j = 0; j < gg.n; ++j) {
        const Complex ref = -gg.p[k] * c1[j] - Complex(0.0, gg.hbar * 0.3 / 2.0) * c2[j];
        m = std::max(m, std::abs(bracket.value_at(j, k) - ref));
      }
    }
    return m;
  });
  return rec.take();
}

std::vector<CheckResult> check_dynamics() {
  Recorder rec("dynamics");
  Grid g = Grid::make(128, -8.0, 8.0, 1.0);

  rec.run("split-step norm conservation (1000 steps)", 1e-10, [&] {
    auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
    auto ev = evolve_schrodinger(psi, HamiltonianSpec::harmonic(1.0, 1.0), 1e-3, 1000);
    return std::abs(ev.norms.back() - 1.0);
  });
  rec.run("eigenstate density stationary under split-step", 1e-8, [&] {
    Grid gw = Grid::make(128, -10.0, 10.0, 1.0);
    auto psi = ho_eigenstate(gw, 2);
    auto ev = evolve_schrodinger(psi, HamiltonianSpec::harmonic(1.0, 1.0), 2.5e-4, 1400);
    double m = 0.0;
    for (int j = 0; j < gw.n; ++j)
      m = std::max(m, std::abs(std::norm(ev.snapshots.back().samples[j]) -
                               std::norm(psi.samples[j])));
    return m;
  });
  rec.run("free-particle variance spreading", 1e-6, [&] {
    Grid gw = Grid::make(256, -16.0, 16.0, 1.0);
    auto psi = gaussian_state(gw, 0.0, 0.0, 1.0);
    auto ev = evolve_schrodinger(psi, HamiltonianSpec::free_particle(1.0), 1e-3, 1000);
    double var = 0.0;
    for (int j = 0; j < gw.n; ++j)
      var += std::norm(ev.snapshots.back().samples[j]) * gw.q[j] * gw.q[j] * gw.dq;
    return std::abs(var - 1.0);  // (1 + t^2)/2 at t = 1
  });
  rec.run("moyal vs schrodinger cross-validation (harmonic, s=0)", 1e-5, [&] {
    auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
    auto cv = cross_validate(psi, HamiltonianSpec::harmonic(1.0, 1.0), SParameter(0.0),
                             kPi / 8.0, 1e-3);
    return cv.max_deviation;
  });
  rec.run("time reversal returns the initial distribution", 1e-8, [&] {
    auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
    auto rho0 = s_wigner(psi, SParameter(0.0));
    auto h = HamiltonianSpec::harmonic(1.0, 1.0);
    auto fwd = evolve_moyal(rho0, h, SParameter(0.0), 1e-3, 100);
    auto back = evolve_moyal(fwd.snapshots.back(), h, SParameter(0.0), -1e-3, 100);
    return max_abs_difference(back.snapshots.back(), rho0);
  });
  return rec.take();
}

std::vector<CheckResult> check_moments() {
  Recorder rec("moments");
  Grid g = Grid::make(256, -12.0, 12.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);

  rec.run("gaussian <p>(q) = i s q at s = 0.5", 1e-8, [&] {
    auto w = s_wigner(psi, SParameter(0.5));
    auto prof = conditional_moment(w, 1);
    double m = 0.0;
    for (int j = 0; j < g.n; ++j) {
      if (!prof.defined[j] || std::abs(g.q[j]) > 4.0) continue;
      m = std::max(m, std::abs(prof.values[j] - Complex(0.0, 0.5 * g.q[j])));
    }
    return m;
  });
  rec.run("gaussian <p^2>(q) = (1+s^2)/2 - s^2 q^2", 1e-8, [&] {
    double m = 0.0;
    for (double sv : {0.0, 0.5, -0.3}) {
      auto w = s_wigner(psi, SParameter(sv));
      auto prof = conditional_moment(w, 2);
      for (int j = 0; j < g.n; ++j) {
        if (!prof.defined[j] || std::abs(g.q[j]) > 4.0) continue;
        const double ref = (1.0 + sv * sv) / 2.0 - sv * sv * g.q[j] * g.q[j];
        m = std::max(m, std::abs(prof.values[j] - Complex(ref)));
      }
    }
    return m;
  });
  rec.run("analytic vs grid moment agreement", 1e-7, [&] {
    double m = 0.0;
    auto boosted = gaussian_state(g, 0.5, 2.0, 1.2);
    for (const auto& s : {SParameter(0.0), SParameter(0.3), SParameter(-0.3), SParameter(0.5)}) {
      auto w = s_wigner(boosted, s);
      auto grid1 = conditional_moment(w, 1);
      auto grid2 = conditional_moment(w, 2);
      auto an1 = analytic_first_moment(boosted, s);
      auto an2 = analytic_second_moment(boosted, s);
      for (int j = 0; j < g.n; ++j) {
        if (!grid1.defined[j] || !an1.defined[j]) continue;
        // hold the tight bound where the density is healthy; near the floor
        // the ratio of integrals is conditioning-limited
        if (std::norm(boosted.samples[j]) < 1e-6) continue;
        m = std::max(m, std::abs(grid1.values[j] - an1.values[j]));
        m = std::max(m, std::abs(grid2.values[j] - an2.values[j]));
      }
    }
    return m;
  });
  rec.run("s = 0 moments are real", 1e-10, [&] {
    auto boosted = gaussian_state(g, 0.0, 2.0, 1.0);
    auto m1 = analytic_first_moment(boosted, SParameter(0.0));
    double m = 0.0;
    for (int j = 0; j < g.n; ++j)
      if (m1.defined[j]) m = std::max(m, std::abs(m1.values[j].imag()));
    return m;
  });
  rec.run("hj residual closed forms", 1e-10, [&] {
    Grid gw = Grid::make(256, -6.0, 6.0, 1.0);
    WkbFields fields;
    fields.mass = 1.0;
    fields.rho = [](double q) { return std::exp(-q * q) / std::sqrt(kPi); };
    fields.action = [](double q) { return q * q; };
    fields.action_dot = [](double) { return 0.0; };
    fields.potential = [](double) { return 0.0; };
    auto r = hj_residual(fields, gw);
    double m = 0.0;
    for (int j = 0; j < gw.n; ++j) m = std::max(m, std::abs(r[j] - 2.0 * gw.q[j] * gw.q[j]));
    return m;
  });
  return rec.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"grid", "states", "transform", "symbol", "star", "dynamics", "moments"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "grid") return check_grid();
  if (name == "states") return check_states();
  if (name == "transform") return check_transform();
  if (name == "symbol") return check_symbol();
  if (name == "star") return check_star();
  if (name == "dynamics") return check_dynamics();
  if (name == "moments") return check_moments();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& suite : suite_names()) {
      auto part = run_suite(suite);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw ValidationError("unknown check suite: " + name);
}

}  // namespace sweyl::checks
