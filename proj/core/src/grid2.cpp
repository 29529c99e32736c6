#include "sweyl/grid2.hpp"

#include <cmath>
#include <numbers>

#include "sweyl/fft.hpp"

namespace sweyl {

Grid2 Grid2::make(const Grid& x, const Grid& y) {
  if (std::abs(x.hbar - y.hbar) > 1e-15)
    throw ValidationError("Grid2: axes must share hbar");
  return Grid2{x, y};
}

double Wavefunction2::norm() const {
  double s = 0.0;
  for (const auto& v : samples) s += std::norm(v);
  return std::sqrt(s * grid.x.dq * grid.y.dq);
}

void Wavefunction2::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw ValidationError("Wavefunction2: cannot normalize the zero state");
  for (auto& v : samples) v /= nrm;
}

Wavefunction2 product_state(const WavefunctionGrid& a, const WavefunctionGrid& b) {
  if (a.rep != Representation::position || b.rep != Representation::position)
    throw ValidationError("product_state: expects position-representation factors");
  Wavefunction2 out{Grid2::make(a.grid, b.grid), {}};
  out.samples.resize(out.grid.points());
  for (int j1 = 0; j1 < a.grid.n; ++j1)
    for (int j2 = 0; j2 < b.grid.n; ++j2)
      out.samples[static_cast<size_t>(j1) * b.grid.n + j2] = a.samples[j1] * b.samples[j2];
  return out;
}

Complex PhaseSpace2::at(int j1, int j2, int k1, int k2) const {
  const size_t n2 = grid.y.n;
  const size_t np = grid.points();
  return samples[(static_cast<size_t>(j1) * n2 + j2) * np + (static_cast<size_t>(k1) * n2 + k2)];
}

PhaseSpace2 s_wigner_2d(const Wavefunction2& psi, SParameter s1, SParameter s2) {
  const Grid& gx = psi.grid.x;
  const Grid& gy = psi.grid.y;
  const int n1 = gx.n, n2 = gy.n;
  const size_t np = psi.grid.points();
  const Complex a1 = (1.0 + s1.value) / 2.0, b1 = (1.0 - s1.value) / 2.0;
  const Complex a2 = (1.0 + s2.value) / 2.0, b2 = (1.0 - s2.value) / 2.0;

  // G[(m1,m2)][(j1,j2)] = Psi*[q - tau (1-s)/2] Psi[q + tau (1+s)/2], shifts
  // applied separably along each axis.
  std::vector<Complex> conj_samples(np);
  for (size_t i = 0; i < np; ++i) conj_samples[i] = std::conj(psi.samples[i]);

  auto shift_2d = [&](const std::vector<Complex>& f, Complex d1, Complex d2) {
    std::vector<Complex> out(np);
    std::vector<Complex> buf(n1);
    // axis 1 (stride n2)
    for (int j2 = 0; j2 < n2; ++j2) {
      for (int j1 = 0; j1 < n1; ++j1) buf[j1] = f[static_cast<size_t>(j1) * n2 + j2];
      auto sh = fractional_shift(buf, d1, gx.dq);
      for (int j1 = 0; j1 < n1; ++j1) out[static_cast<size_t>(j1) * n2 + j2] = sh[j1];
    }
    // axis 2 (contiguous rows)
    for (int j1 = 0; j1 < n1; ++j1) {
      std::span<Complex> row(out.data() + static_cast<size_t>(j1) * n2, n2);
      auto sh = fractional_shift(row, d2, gy.dq);
      std::copy(sh.begin(), sh.end(), row.begin());
    }
    return out;
  };

  PhaseSpace2 out;
  out.grid = psi.grid;
  out.s = {s1, s2};
  out.samples.assign(np * np, Complex(0.0));

  const double scale = gx.dq * gy.dq /
                       (2.0 * std::numbers::pi * gx.hbar * 2.0 * std::numbers::pi * gy.hbar);
  std::vector<Complex> G(np * np);  // [(m1*n2+m2) * np + (j1*n2+j2)]
  for (int m1 = 0; m1 < n1; ++m1) {
    const double tau1 = (m1 - n1 / 2) * gx.dq;
    for (int m2 = 0; m2 < n2; ++m2) {
      const double tau2 = (m2 - n2 / 2) * gy.dq;
      auto f1 = shift_2d(conj_samples, b1 * tau1, b2 * tau2);
      auto f2 = shift_2d(psi.samples, -a1 * tau1, -a2 * tau2);
      Complex* grow = G.data() + (static_cast<size_t>(m1) * n2 + m2) * np;
      for (size_t i = 0; i < np; ++i) grow[i] = f1[i] * f2[i];
    }
  }
  // Fourier over (tau1, tau2) -> (p1, p2), centered on both axes.
  std::vector<Complex> buf1(n1), buf2(n2), o1(n1), o2(n2);
  for (size_t jj = 0; jj < np; ++jj) {
    // gather tau-plane for this (j1, j2), transform axis 2 then axis 1
    std::vector<Complex> plane(static_cast<size_t>(n1) * n2);
    for (int m1 = 0; m1 < n1; ++m1)
      for (int m2 = 0; m2 < n2; ++m2)
        plane[static_cast<size_t>(m1) * n2 + m2] = G[(static_cast<size_t>(m1) * n2 + m2) * np + jj];
    for (int m1 = 0; m1 < n1; ++m1) {
      std::span<const Complex> row(plane.data() + static_cast<size_t>(m1) * n2, n2);
      fft::centered_dft(row, o2, fft::kForward);
      std::copy(o2.begin(), o2.end(), plane.begin() + static_cast<size_t>(m1) * n2);
    }
    for (int k2 = 0; k2 < n2; ++k2) {
      for (int m1 = 0; m1 < n1; ++m1) buf1[m1] = plane[static_cast<size_t>(m1) * n2 + k2];
      fft::centered_dft(buf1, o1, fft::kForward);
      for (int k1 = 0; k1 < n1; ++k1)
        out.samples[jj * np + (static_cast<size_t>(k1) * n2 + k2)] = scale * o1[k1];
    }
  }
  return out;
}

Marginal2 marginal_position_2d(const PhaseSpace2& a) {
  const size_t np = a.grid.points();
  Marginal2 out;
  out.values.assign(np, 0.0);
  const double cell = a.grid.x.dp * a.grid.y.dp;
  for (size_t jj = 0; jj < np; ++jj) {
    Complex sum = 0.0;
    const Complex* row = a.samples.data() + jj * np;
    for (size_t kk = 0; kk < np; ++kk) sum += row[kk];
    sum *= cell;
    out.values[jj] = sum.real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::abs(sum.imag()));
  }
  return out;
}

}  // namespace sweyl
