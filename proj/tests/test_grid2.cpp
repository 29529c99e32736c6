#include <cmath>

#include "doctest.h"
#include "sweyl/grid2.hpp"
#include "sweyl/states.hpp"
#include "sweyl/transform.hpp"

using namespace sweyl;

TEST_CASE("2-d transform: product states factorize with per-axis parameters") {
  Grid gx = Grid::make(32, -7.0, 7.0, 1.0);
  Grid gy = Grid::make(32, -8.0, 8.0, 1.0);
  auto ax = gaussian_state(gx, 0.4, 0.8, 1.0);
  auto by = gaussian_state(gy, -0.6, 0.0, 1.2);
  auto psi2 = product_state(ax, by);
  CHECK(std::abs(psi2.norm() - 1.0) < 1e-12);

  SParameter s1(0.3), s2(-0.2);
  auto w2 = s_wigner_2d(psi2, s1, s2);
  auto wx = s_wigner(ax, s1);
  auto wy = s_wigner(by, s2);

  double m = 0.0;
  for (int j1 = 0; j1 < gx.n; j1 += 3)
    for (int j2 = 0; j2 < gy.n; j2 += 3)
      for (int k1 = 0; k1 < gx.n; k1 += 3)
        for (int k2 = 0; k2 < gy.n; k2 += 3) {
          const Complex ref = wx.value_at(j1, k1) * wy.value_at(j2, k2);
          m = std::max(m, std::abs(w2.at(j1, j2, k1, k2) - ref));
        }
  CHECK(m < 1e-9);
}

TEST_CASE("2-d transform: position marginal is the joint density") {
  Grid gx = Grid::make(32, -7.0, 7.0, 1.0);
  Grid gy = Grid::make(32, -7.0, 7.0, 1.0);
  auto psi2 = product_state(gaussian_state(gx, 0.0, 1.0, 1.0), gaussian_state(gy, 0.5, 0.0, 0.9));
  auto w2 = s_wigner_2d(psi2, SParameter(0.2), SParameter(0.0));
  auto marg = marginal_position_2d(w2);
  double m = 0.0;
  for (size_t i = 0; i < marg.values.size(); ++i)
    m = std::max(m, std::abs(marg.values[i] - std::norm(psi2.samples[i])));
  CHECK(m < 1e-8);
  CHECK(marg.max_imag_residue < 1e-8);
}
