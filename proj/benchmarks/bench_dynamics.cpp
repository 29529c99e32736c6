#include <benchmark/benchmark.h>

#include "sweyl/dynamics.hpp"
#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;

static void BM_split_step(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -8.0, 8.0, 1.0);
  auto psi = gaussian_state(g, 1.0, 0.0, 1.0);
  auto h = HamiltonianSpec::harmonic(1.0, 1.0);
  for (auto _ : state) {
    auto ev = evolve_schrodinger(psi, h, 1e-3, 10);
    benchmark::DoNotOptimize(ev.snapshots.back().samples.data());
  }
}
BENCHMARK(BM_split_step)->RangeMultiplier(2)->Range(128, 1024);

static void BM_moyal_step(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -8.0, 8.0, 1.0);
  auto rho = s_wigner(gaussian_state(g, 1.0, 0.0, 1.0), SParameter(0.0));
  auto h = HamiltonianSpec::harmonic(1.0, 1.0);
  for (auto _ : state) {
    auto ev = evolve_moyal(rho, h, SParameter(0.0), 1e-3, 10);
    benchmark::DoNotOptimize(ev.snapshots.back().samples.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_moyal_step)->RangeMultiplier(2)->Range(64, 256)->Complexity()
    ->Unit(benchmark::kMillisecond);
