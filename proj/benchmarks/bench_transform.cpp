#include <benchmark/benchmark.h>

#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;

static void BM_s_wigner_shift(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -12.0, 12.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  for (auto _ : state) {
    auto w = s_wigner_shift(psi, SParameter(0.3));
    benchmark::DoNotOptimize(w.samples.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_s_wigner_shift)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_s_wigner_kirkwood(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -12.0, 12.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  for (auto _ : state) {
    auto w = s_wigner_kirkwood(psi, SParameter(0.3));
    benchmark::DoNotOptimize(w.samples.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_s_wigner_kirkwood)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_fractional_shift(benchmark::State& state) {
  Grid g = Grid::make(static_cast<int>(state.range(0)), -12.0, 12.0, 1.0);
  auto psi = gaussian_state(g, 0.0, 0.0, 1.0);
  for (auto _ : state) {
    auto f = fractional_shift(psi.samples, 0.37, g.dq);
    benchmark::DoNotOptimize(f.data());
  }
}
BENCHMARK(BM_fractional_shift)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
