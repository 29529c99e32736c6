#include "sweyl/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sweyl/fft.hpp"
#include "sweyl/transform.hpp"

namespace sweyl {

HamiltonianSpec HamiltonianSpec::free_particle(double mass) {
  if (!(mass > 0.0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  return HamiltonianSpec{HamiltonianKind::free, mass, 0.0, {}};
}

HamiltonianSpec HamiltonianSpec::harmonic(double mass, double omega) {
  if (!(mass > 0.0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  if (!(omega > 0.0)) throw ValidationError("HamiltonianSpec: omega must be positive");
  return HamiltonianSpec{HamiltonianKind::harmonic, mass, omega, {}};
}

HamiltonianSpec HamiltonianSpec::custom(double mass, std::function<double(double)> potential) {
  if (!(mass > 0.0)) throw ValidationError("HamiltonianSpec: mass must be positive");
  if (!potential) throw ValidationError("HamiltonianSpec: custom requires a potential");
  return HamiltonianSpec{HamiltonianKind::custom, mass, 0.0, std::move(potential)};
}

double HamiltonianSpec::potential_at(double q) const {
  switch (kind) {
    case HamiltonianKind::free:
      return 0.0;
    case HamiltonianKind::harmonic:
      return 0.5 * mass * omega * omega * q * q;
    case HamiltonianKind::custom:
      return potential(q);
  }
  return 0.0;
}

PhaseSpaceFunction hamiltonian_symbol(const HamiltonianSpec& h, const Grid& grid, SParameter s) {
  PhaseSpaceFunction f;
  f.grid = grid;
  f.s = s;
  f.kind = SymbolKind::operator_symbol;
  f.samples.assign(static_cast<size_t>(grid.n) * grid.n, Complex(0.0));
  f.poly[{0, 2}] = 1.0 / (2.0 * h.mass);
  if (h.kind == HamiltonianKind::harmonic) {
    f.poly[{2, 0}] = 0.5 * h.mass * h.omega * h.omega;
  } else if (h.kind == HamiltonianKind::custom) {
    for (int j = 0; j < grid.n; ++j) {
      const Complex v = h.potential(grid.q[j]);
      for (int k = 0; k < grid.n; ++k) f.samples[static_cast<size_t>(j) * grid.n + k] = v;
    }
  }
  return f;
}

std::vector<Complex> apply_hamiltonian(const HamiltonianSpec& h, const WavefunctionGrid& psi) {
  if (psi.rep != Representation::position)
    throw ValidationError("apply_hamiltonian: expects a position-representation state");
  const Grid& g = psi.grid;
  WavefunctionGrid phi = to_momentum(psi);
  for (int k = 0; k < g.n; ++k) phi.samples[k] *= g.p[k] * g.p[k] / (2.0 * h.mass);
  WavefunctionGrid kin = to_position(phi);
  std::vector<Complex> out(g.n);
  for (int j = 0; j < g.n; ++j) out[j] = kin.samples[j] + h.potential_at(g.q[j]) * psi.samples[j];
  return out;
}

Complex expectation_energy(const HamiltonianSpec& h, const WavefunctionGrid& psi) {
  auto hp = apply_hamiltonian(h, psi);
  Complex acc = 0.0;
  for (int j = 0; j < psi.grid.n; ++j) acc += std::conj(psi.samples[j]) * hp[j];
  return acc * psi.grid.dq;
}

namespace {

/// Bracket of a quadratic H with a periodic rho:
///   [H, rho]/(i hbar) = -(p/m) dq rho + V' dp rho
///                        - (i hbar s / 2) [ (1/m) dq^2 rho - V'' dp^2 rho ].
/// (For free/harmonic H the bidifferential series terminates at second order.)
class QuadraticBracket {
 public:
  QuadraticBracket(const HamiltonianSpec& h, const Grid& g, SParameter s) : grid_(g) {
    const int n = g.n;
    s_half_ = Complex(0.0, -0.5 * g.hbar) * s.value;
    inv_mass_ = 1.0 / h.mass;
    vq1_.assign(n, 0.0);
    vq2_.assign(n, 0.0);
    if (h.kind == HamiltonianKind::harmonic) {
      const double k = h.mass * h.omega * h.omega;
      for (int j = 0; j < n; ++j) vq1_[j] = k * g.q[j];
      for (int j = 0; j < n; ++j) vq2_[j] = k;
    }
  }

  PhaseSpaceFunction eval(const PhaseSpaceFunction& rho) const {
    const Grid& g = grid_;
    const int n = g.n;
    PhaseSpaceFunction out;
    out.grid = g;
    out.s = rho.s;
    out.kind = SymbolKind::state_symbol;
    out.samples.assign(static_cast<size_t>(n) * n, Complex(0.0));

    std::vector<Complex> col(n);
    // q-axis derivatives (first and second) share one decomposition pass
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) col[j] = rho.samples[static_cast<size_t>(j) * n + k];
      auto d1 = spectral_derivative(col, 1, g.dq);
      auto d2 = spectral_derivative(col, 2, g.dq);
      for (int j = 0; j < n; ++j)
        out.samples[static_cast<size_t>(j) * n + k] =
            -g.p[k] * inv_mass_ * d1[j] + s_half_ * inv_mass_ * d2[j];
    }
    // p-axis derivatives per row
    for (int j = 0; j < n; ++j) {
      std::span<const Complex> row(rho.samples.data() + static_cast<size_t>(j) * n, n);
      auto d1 = spectral_derivative(row, 1, g.dp);
      auto d2 = spectral_derivative(row, 2, g.dp);
      for (int k = 0; k < n; ++k)
        out.samples[static_cast<size_t>(j) * n + k] += vq1_[j] * d1[k] - s_half_ * vq2_[j] * d2[k];
    }
    return out;
  }

 private:
  Grid grid_;
  Complex s_half_;
  double inv_mass_ = 1.0;
  std::vector<double> vq1_, vq2_;
};

double stability_scale(const HamiltonianSpec& h, const Grid& g, SParameter s) {
  // Largest phase-space advection/diffusion frequency the bracket can excite:
  // |p|max/m * (pi/dq) + |V'|max * (pi/dp), plus the s-dependent second-order
  // terms (hbar |s|/2) [(pi/dq)^2/m + |V''|max (pi/dp)^2].
  const double kq = std::numbers::pi / g.dq;
  const double kp = std::numbers::pi / g.dp;
  const double vmax = g.p_max_abs() / h.mass;
  double f_max = 0.0, v2_max = 0.0;
  if (h.kind == HamiltonianKind::harmonic) {
    f_max = h.mass * h.omega * h.omega * std::max(std::abs(g.q_min), std::abs(g.q_max));
    v2_max = h.mass * h.omega * h.omega;
  } else if (h.kind == HamiltonianKind::custom) {
    const double eps = g.dq;
    for (int j = 0; j < g.n; ++j) {
      const double d1 = (h.potential(g.q[j] + eps) - h.potential(g.q[j] - eps)) / (2 * eps);
      const double d2 =
          (h.potential(g.q[j] + eps) - 2 * h.potential(g.q[j]) + h.potential(g.q[j] - eps)) /
          (eps * eps);
      f_max = std::max(f_max, std::abs(d1));
      v2_max = std::max(v2_max, std::abs(d2));
    }
  }
  const double smag = std::abs(s.value);
  return vmax * kq + f_max * kp + 0.5 * g.hbar * smag * (kq * kq / h.mass + v2_max * kp * kp);
}

void check_finite(const std::vector<Complex>& v, int step, const char* who) {
  for (const auto& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      std::ostringstream os;
      os << who << ": NaN/Inf detected at step " << step;
      throw NumericalGuardError(os.str());
    }
  }
}

}  // namespace

MoyalEvolution evolve_moyal(const PhaseSpaceFunction& rho0, const HamiltonianSpec& h, SParameter s,
                            double dt, int n_steps, int snapshot_stride) {
  if (dt == 0.0 || !std::isfinite(dt)) throw ValidationError("evolve_moyal: dt must be nonzero");
  if (n_steps < 0) throw ValidationError("evolve_moyal: n_steps must be nonnegative");
  if (rho0.kind != SymbolKind::state_symbol)
    throw ValidationError("evolve_moyal: rho0 must be a state-symbol");
  if (rho0.has_poly())
    throw ValidationError("evolve_moyal: rho0 must be a sampled (periodic) symbol");
  if (!same_s(rho0.s, s)) throw ValidationError("evolve_moyal: s mismatch with rho0 tag");
  const Grid& g = rho0.grid;

  const double lambda = stability_scale(h, g, s);
  if (lambda * std::abs(dt) > kRk4StabilityLimit) {
    std::ostringstream os;
    os << "evolve_moyal: dt = " << dt << " violates the RK4 stability estimate (lambda*dt = "
       << lambda * std::abs(dt) << " > " << kRk4StabilityLimit << "; reduce |dt| below "
       << kRk4StabilityLimit / lambda << ")";
    throw NumericalGuardError(os.str());
  }

  PhaseSpaceFunction h_w = hamiltonian_symbol(h, g, s);
  PhaseSpaceFunction rho = rho0;

  // For a polynomial H the bracket collapses to four spectral derivatives of
  // rho with fixed coefficient fields; precomputing them makes the stepper
  // O(n^2 log n) per stage with output identical to moyal_bracket.
  const bool quadratic = h.kind != HamiltonianKind::custom;
  QuadraticBracket fast(h, g, s);
  auto rhs = [&](const PhaseSpaceFunction& r) {
    if (quadratic) return fast.eval(r);
    return moyal_bracket(h_w, r, s, g.hbar);
  };
  auto axpy = [](PhaseSpaceFunction& y, Complex a, const PhaseSpaceFunction& x) {
    for (size_t i = 0; i < y.samples.size(); ++i) y.samples[i] += a * x.samples[i];
  };

  MoyalEvolution out;
  auto record = [&](double t) {
    out.times.push_back(t);
    out.snapshots.push_back(rho);
    out.masses.push_back(rho.total_mass());
  };
  record(0.0);

  for (int step = 1; step <= n_steps; ++step) {
    PhaseSpaceFunction k1 = rhs(rho);
    PhaseSpaceFunction y2 = rho;
    axpy(y2, 0.5 * dt, k1);
    PhaseSpaceFunction k2 = rhs(y2);
    PhaseSpaceFunction y3 = rho;
    axpy(y3, 0.5 * dt, k2);
    PhaseSpaceFunction k3 = rhs(y3);
    PhaseSpaceFunction y4 = rho;
    axpy(y4, dt, k3);
    PhaseSpaceFunction k4 = rhs(y4);
    axpy(rho, dt / 6.0, k1);
    axpy(rho, dt / 3.0, k2);
    axpy(rho, dt / 3.0, k3);
    axpy(rho, dt / 6.0, k4);
    check_finite(rho.samples, step, "evolve_moyal");
    if (step == n_steps || (snapshot_stride > 0 && step % snapshot_stride == 0))
      record(step * dt);
  }
  return out;
}

SchrodingerEvolution evolve_schrodinger(const WavefunctionGrid& psi0, const HamiltonianSpec& h,
                                        double dt, int n_steps, int snapshot_stride) {
  if (dt == 0.0 || !std::isfinite(dt)) throw ValidationError("evolve_schrodinger: dt must be nonzero");
  if (n_steps < 0) throw ValidationError("evolve_schrodinger: n_steps must be nonnegative");
  if (psi0.rep != Representation::position)
    throw ValidationError("evolve_schrodinger: expects a position-representation state");
  const Grid& g = psi0.grid;
  const int n = g.n;

  std::vector<Complex> half_kick(n), kinetic(n);
  for (int j = 0; j < n; ++j)
    half_kick[j] = std::polar(1.0, -h.potential_at(g.q[j]) * dt / (2.0 * g.hbar));
  for (int k = 0; k < n; ++k)
    kinetic[k] = std::polar(1.0, -g.p[k] * g.p[k] * dt / (2.0 * h.mass * g.hbar));

  WavefunctionGrid psi = psi0;
  SchrodingerEvolution out;
  auto record = [&](double t) {
    out.times.push_back(t);
    out.snapshots.push_back(psi);
    out.norms.push_back(psi.norm());
  };
  record(0.0);

  for (int step = 1; step <= n_steps; ++step) {
    for (int j = 0; j < n; ++j) psi.samples[j] *= half_kick[j];
    WavefunctionGrid phi = to_momentum(psi);
    for (int k = 0; k < n; ++k) phi.samples[k] *= kinetic[k];
    psi = to_position(phi);
    for (int j = 0; j < n; ++j) psi.samples[j] *= half_kick[j];
    check_finite(psi.samples, step, "evolve_schrodinger");
    if (step == n_steps || (snapshot_stride > 0 && step % snapshot_stride == 0))
      record(step * dt);
  }
  return out;
}

CrossValidation cross_validate(const WavefunctionGrid& psi0, const HamiltonianSpec& h,
                               SParameter s, double t, double dt) {
  if (t < 0.0) throw ValidationError("cross_validate: t must be nonnegative");
  CrossValidation cv;
  cv.time = t;
  cv.steps = (t == 0.0) ? 0 : std::max(1, static_cast<int>(std::ceil(t / dt - 1e-12)));
  cv.dt_effective = (cv.steps == 0) ? dt : t / cv.steps;

  PhaseSpaceFunction rho0 = s_wigner(psi0, s);
  MoyalEvolution moyal = evolve_moyal(rho0, h, s, cv.steps == 0 ? dt : cv.dt_effective, cv.steps);
  SchrodingerEvolution schro = evolve_schrodinger(psi0, h, cv.steps == 0 ? dt : cv.dt_effective,
                                                  cv.steps);
  PhaseSpaceFunction ref = s_wigner(schro.snapshots.back(), s);
  cv.max_deviation = max_abs_difference(moyal.snapshots.back(), ref);
  cv.pass = cv.max_deviation < cv.tolerance;
  return cv;
}

}  // namespace sweyl
