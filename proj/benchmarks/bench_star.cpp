#include <benchmark/benchmark.h>

#include <random>

#include "sweyl/dynamics.hpp"
#include "sweyl/star.hpp"
#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;

namespace {
PhaseSpaceFunction gaussian_symbol(const Grid& g, SParameter s) {
  return s_wigner(gaussian_state(g, 0.3, -0.2, 1.0), s);
}
}  // namespace

// Twisted convolution over mode pairs: O(n^4) in the grid size.
static void BM_star_residual(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -8.0, 8.0, 1.0);
  SParameter s(0.3);
  auto a = gaussian_symbol(g, s);
  auto b = gaussian_symbol(g, s);
  for (auto _ : state) {
    auto c = star_product(a, b, s);
    benchmark::DoNotOptimize(c.samples.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_star_residual)->RangeMultiplier(2)->Range(16, 64)->Complexity()
    ->Unit(benchmark::kMillisecond);

// Polynomial x residual fast path (terminating series).
static void BM_bracket_quadratic(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -8.0, 8.0, 1.0);
  SParameter s(0.3);
  auto rho = gaussian_symbol(g, s);
  auto h = hamiltonian_symbol(HamiltonianSpec::harmonic(1.0, 1.0), g, s);
  for (auto _ : state) {
    auto c = moyal_bracket(h, rho, s, g.hbar);
    benchmark::DoNotOptimize(c.samples.data());
  }
}
BENCHMARK(BM_bracket_quadratic)->RangeMultiplier(2)->Range(64, 256)
    ->Unit(benchmark::kMillisecond);
