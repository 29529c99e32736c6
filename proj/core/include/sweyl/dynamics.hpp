#pragma once

#include <functional>
#include <vector>

#include "sweyl/phase_space.hpp"
#include "sweyl/star.hpp"

namespace sweyl {

enum class HamiltonianKind { free, harmonic, custom };

/// H = p^2/(2m) + V(q). free: V = 0; harmonic: V = m omega^2 q^2 / 2;
/// custom: caller-supplied V(q).
struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::free;
  double mass = 1.0;
  double omega = 1.0;
  std::function<double(double)> potential;  // custom only

  static HamiltonianSpec free_particle(double mass = 1.0);
  static HamiltonianSpec harmonic(double mass = 1.0, double omega = 1.0);
  static HamiltonianSpec custom(double mass, std::function<double(double)> potential);

  double potential_at(double q) const;
};

/// Operator-symbol of H on the grid. The kinetic part (and a quadratic V) is
/// carried as the exact polynomial; a custom V enters as sampled residual.
PhaseSpaceFunction hamiltonian_symbol(const HamiltonianSpec& h, const Grid& grid, SParameter s);

/// H psi evaluated spectrally (kinetic term in momentum space, V pointwise).
std::vector<Complex> apply_hamiltonian(const HamiltonianSpec& h, const WavefunctionGrid& psi);
Complex expectation_energy(const HamiltonianSpec& h, const WavefunctionGrid& psi);

/// RK4 stability limit |lambda dt| for the phase-space generator.
inline constexpr double kRk4StabilityLimit = 2.8;

struct MoyalEvolution {
  std::vector<double> times;
  std::vector<PhaseSpaceFunction> snapshots;
  std::vector<Complex> masses;  // sum rho dq dp per snapshot (reported, never renormalized)
};

struct SchrodingerEvolution {
  std::vector<double> times;
  std::vector<WavefunctionGrid> snapshots;
  std::vector<double> norms;  // per snapshot
};

/// d rho/dt = [H, rho]/(i hbar) integrated with fixed-step RK4. H_w is built
/// once. snapshot_stride = 0 records only t=0 and the final time; k > 0 also
/// records every k-th step. Detects NaNs (aborts with the step index) and
/// rejects dt beyond the documented RK4 stability estimate.
MoyalEvolution evolve_moyal(const PhaseSpaceFunction& rho0, const HamiltonianSpec& h, SParameter s,
                            double dt, int n_steps, int snapshot_stride = 0);

/// Strang split-step spectral propagator (unitary per step); the independent
/// reference route for cross-validation.
SchrodingerEvolution evolve_schrodinger(const WavefunctionGrid& psi0, const HamiltonianSpec& h,
                                        double dt, int n_steps, int snapshot_stride = 0);

struct CrossValidation {
  double time = 0.0;
  double dt_effective = 0.0;
  int steps = 0;
  double max_deviation = 0.0;  // pointwise, between the two phase-space routes
  double tolerance = 1e-5;
  bool pass = false;
};

/// Propagates psi0 with the split-step route and s_wigner(psi0) with the Moyal
/// route, then compares the distributions at time t. PASS iff the max
/// pointwise deviation is below 1e-5 (RK4 + splitting budget at dt = 1e-3).
CrossValidation cross_validate(const WavefunctionGrid& psi0, const HamiltonianSpec& h,
                               SParameter s, double t, double dt);

}  // namespace sweyl
