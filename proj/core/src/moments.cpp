#include "sweyl/moments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sweyl/fft.hpp"

namespace sweyl {

namespace {

/// Exact integrals over one momentum period, P = n dp / 2:
///   M_n(tau_mu) = int_{-P}^{P} p^n exp(-i tau_mu p / hbar) dp,  tau_mu = mu dq,
/// where tau_mu P / hbar = pi mu. Recurrence from integration by parts:
///   M_n = (i/a)(-1)^mu P^n [1 - (-1)^n] - (i n / a) M_{n-1},  a = tau/hbar,
/// with M_0 = 0 for mu != 0; mu = 0 gives the plain power-rule values.
std::vector<Complex> period_moments(const Grid& g, int order) {
  const int n = g.n;
  const double P = g.p_max_abs();
  std::vector<Complex> out(n);
  for (int m = 0; m < n; ++m) {
    const int mu = m - n / 2;
    if (mu == 0) {
      out[m] = (order % 2 == 0) ? 2.0 * std::pow(P, order + 1) / (order + 1) : 0.0;
      continue;
    }
    const double a = mu * g.dq / g.hbar;
    const double sign = (mu % 2 == 0) ? 1.0 : -1.0;
    Complex mk = 0.0;  // M_0
    for (int k = 1; k <= order; ++k) {
      const double parity = (k % 2 == 0) ? 0.0 : 2.0;
      mk = Complex(0.0, 1.0 / a) * (sign * std::pow(P, k) * parity) -
           Complex(0.0, k / a) * mk;
    }
    out[m] = mk;
  }
  return out;
}

MomentProfile make_profile(const Grid& g, int order, SParameter s, double floor) {
  MomentProfile prof;
  prof.q_values = g.q;
  prof.values.assign(g.n, Complex(0.0));
  prof.defined.assign(g.n, 0);
  prof.order = order;
  prof.s = s;
  prof.density_floor = floor;
  return prof;
}

}  // namespace

MomentProfile conditional_moment(const PhaseSpaceFunction& a, int order, double density_floor) {
  if (a.kind != SymbolKind::state_symbol)
    throw ValidationError("conditional_moment: requires a state-symbol");
  if (order < 0) throw ValidationError("conditional_moment: order must be nonnegative");
  const Grid& g = a.grid;
  const int n = g.n;
  auto dense = a.dense();

  // Boundary-decay precondition: the p-edge contribution to |A p^n| must be
  // negligible against the row total.
  {
    double edge = 0.0, total = 0.0;
    const double P = g.p_max_abs();
    for (int j = 0; j < n; ++j) {
      const Complex* row = dense.data() + static_cast<size_t>(j) * n;
      edge += std::abs(row[0]) * std::pow(P, order) * g.dp;
      for (int k = 0; k < n; ++k)
        total += std::abs(row[k]) * std::pow(std::abs(g.p[k]), order) * g.dp;
    }
    if (total > 0.0 && edge > 1e-10 * total) {
      std::ostringstream os;
      os << "conditional_moment: momentum-boundary contribution " << edge / total
         << " of total exceeds 1e-10; the moment integrand does not decay on this grid";
      throw ValidationError(os.str());
    }
  }

  auto momn = period_moments(g, order);
  auto mom0 = period_moments(g, 0);
  MomentProfile prof = make_profile(g, order, a.s, density_floor);
  std::vector<Complex> coeff(n);
  for (int j = 0; j < n; ++j) {
    std::span<const Complex> row(dense.data() + static_cast<size_t>(j) * n, n);
    fft::centered_dft(row, coeff, fft::kBackward);  // G_m * n
    Complex num = 0.0, den = 0.0;
    for (int m = 0; m < n; ++m) {
      num += coeff[m] * momn[m];
      den += coeff[m] * mom0[m];
    }
    num /= static_cast<double>(n);
    den /= static_cast<double>(n);
    if (std::abs(den) < density_floor) continue;  // undefined at this q
    prof.values[j] = num / den;
    prof.defined[j] = 1;
  }
  return prof;
}

namespace {

MomentProfile analytic_moment_impl(const WavefunctionGrid& psi, SParameter s, int order,
                                   double density_floor) {
  if (psi.rep != Representation::position)
    throw ValidationError("analytic moments: expects a position-representation state");
  const Grid& g = psi.grid;
  const Complex a = (1.0 + s.value) / 2.0;
  const Complex b = (1.0 - s.value) / 2.0;
  auto d1 = spectral_derivative(psi.samples, 1, g.dq);
  MomentProfile prof = make_profile(g, order, s, density_floor);
  if (order == 1) {
    for (int j = 0; j < g.n; ++j) {
      if (std::norm(psi.samples[j]) < density_floor) continue;
      const Complex l1 = d1[j] / psi.samples[j];
      prof.values[j] = Complex(0.0, -g.hbar) * (a * l1 - b * std::conj(l1));
      prof.defined[j] = 1;
    }
  } else {
    auto d2 = spectral_derivative(psi.samples, 2, g.dq);
    for (int j = 0; j < g.n; ++j) {
      if (std::norm(psi.samples[j]) < density_floor) continue;
      const Complex l1 = d1[j] / psi.samples[j];
      const Complex l2 = d2[j] / psi.samples[j];
      prof.values[j] = -g.hbar * g.hbar *
                       (a * a * l2 + b * b * std::conj(l2) - 2.0 * a * b * std::norm(l1));
      prof.defined[j] = 1;
    }
  }
  return prof;
}

}  // namespace

MomentProfile analytic_first_moment(const WavefunctionGrid& psi, SParameter s,
                                    double density_floor) {
  return analytic_moment_impl(psi, s, 1, density_floor);
}

MomentProfile analytic_second_moment(const WavefunctionGrid& psi, SParameter s,
                                     double density_floor) {
  return analytic_moment_impl(psi, s, 2, density_floor);
}

std::vector<double> hj_residual(const WkbFields& fields, const Grid& grid) {
  if (!fields.action || !fields.action_dot)
    throw ValidationError("hj_residual: action and action_dot required");
  std::vector<double> r(grid.n);
  const double h = grid.dq;
  for (int j = 0; j < grid.n; ++j) {
    const double q = grid.q[j];
    const double ds =
        (8.0 * (fields.action(q + h) - fields.action(q - h)) -
         (fields.action(q + 2 * h) - fields.action(q - 2 * h))) /
        (12.0 * h);
    const double v = fields.potential ? fields.potential(q) : 0.0;
    r[j] = fields.action_dot(q) + ds * ds / (2.0 * fields.mass) + v;
  }
  return r;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

ScanReport classical_limit_scan(const WkbFields& fields, const Grid& grid_template,
                                const std::vector<double>& s_samples,
                                const std::vector<double>& hbar_samples, double density_floor) {
  {
    std::vector<double> distinct = s_samples;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
      throw ValidationError("classical_limit_scan: need >= 3 distinct s samples for the quadratic fit");
  }
  if (hbar_samples.empty()) throw ValidationError("classical_limit_scan: no hbar samples");

  const int ns = static_cast<int>(s_samples.size());
  // Shared pseudo-inverses of the Vandermonde design matrices (same s grid at every q).
  Eigen::MatrixXd v1(ns, 2), v2(ns, 3);
  for (int i = 0; i < ns; ++i) {
    v1(i, 0) = 1.0;
    v1(i, 1) = s_samples[i];
    v2(i, 0) = 1.0;
    v2(i, 1) = s_samples[i];
    v2(i, 2) = s_samples[i] * s_samples[i];
  }
  Eigen::MatrixXd pinv1 = (v1.transpose() * v1).ldlt().solve(v1.transpose());
  Eigen::MatrixXd pinv2 = (v2.transpose() * v2).ldlt().solve(v2.transpose());

  ScanReport report;
  for (double hbar : hbar_samples) {
    WavefunctionGrid psi = wkb_state(grid_template, fields, hbar);
    const Grid& g = psi.grid;

    // Phase resolution: the local wavenumber S'/hbar must be well inside the band.
    double max_ds = 0.0;
    const double h = g.dq;
    for (int j = 0; j < g.n; ++j) {
      const double q = g.q[j];
      if (fields.rho(q) < 1e-14) continue;  // only where the state lives
      const double ds =
          (8.0 * (fields.action(q + h) - fields.action(q - h)) -
           (fields.action(q + 2 * h) - fields.action(q - 2 * h))) /
          (12.0 * h);
      max_ds = std::max(max_ds, std::abs(ds));
    }
    if (max_ds * g.dq / hbar > std::numbers::pi / 4.0) {
      std::ostringstream os;
      os << "classical_limit_scan: under-resolved phase at hbar = " << hbar
         << " (max |dS/dq| dq / hbar = " << max_ds * g.dq / hbar << " > pi/4)";
      throw ValidationError(os.str());
    }

    std::vector<MomentProfile> m1(ns), m2(ns);
    for (int i = 0; i < ns; ++i) {
      m1[i] = analytic_first_moment(psi, SParameter(s_samples[i]), density_floor);
      m2[i] = analytic_second_moment(psi, SParameter(s_samples[i]), density_floor);
    }

    ScanEntry entry;
    entry.hbar = hbar;
    entry.q_values = g.q;
    entry.p1_c0.assign(g.n, 0.0);
    entry.p1_c1.assign(g.n, 0.0);
    entry.p2_c0.assign(g.n, 0.0);
    entry.p2_c1.assign(g.n, 0.0);
    entry.p2_c2.assign(g.n, 0.0);
    entry.hj_bracket.assign(g.n, 0.0);
    entry.defined.assign(g.n, 0);
    for (int j = 0; j < g.n; ++j) {
      bool ok = true;
      for (int i = 0; i < ns; ++i) ok = ok && m1[i].defined[j] && m2[i].defined[j];
      if (!ok) continue;
      Eigen::VectorXcd y1(ns), y2(ns);
      for (int i = 0; i < ns; ++i) {
        y1(i) = m1[i].values[j];
        y2(i) = m2[i].values[j];
      }
      Eigen::VectorXcd c1 = pinv1.cast<Complex>() * y1;
      Eigen::VectorXcd c2 = pinv2.cast<Complex>() * y2;
      entry.p1_c0[j] = c1(0);
      entry.p1_c1[j] = c1(1);
      entry.p2_c0[j] = c2(0);
      entry.p2_c1[j] = c2(1);
      entry.p2_c2[j] = c2(2);
      const double v = fields.potential ? fields.potential(g.q[j]) : 0.0;
      entry.hj_bracket[j] = -fields.mass * fields.action_dot(g.q[j]) - fields.mass * v -
                            0.5 * (c2(0).real() - c2(2).real());
      entry.defined[j] = 1;
    }
    report.entries.push_back(std::move(entry));
  }

  // Convergence ratios between consecutive hbar entries, over the window where
  // the density is at least 1% of its peak.
  for (size_t e = 0; e + 1 < report.entries.size(); ++e) {
    const ScanEntry& from = report.entries[e];
    const ScanEntry& to = report.entries[e + 1];
    double rho_peak = 0.0;
    for (int j = 0; j < static_cast<int>(from.q_values.size()); ++j)
      rho_peak = std::max(rho_peak, fields.rho(from.q_values[j]));
    std::vector<double> b2r, hjr;
    for (int j = 0; j < static_cast<int>(from.q_values.size()); ++j) {
      if (!from.defined[j] || !to.defined[j]) continue;
      if (fields.rho(from.q_values[j]) < 0.01 * rho_peak) continue;
      const double b2t = std::abs(to.p2_c2[j]);
      if (b2t > 1e-300) b2r.push_back(std::abs(from.p2_c2[j]) / b2t);
      const double hjt = std::abs(to.hj_bracket[j]);
      if (hjt > 1e-300) hjr.push_back(std::abs(from.hj_bracket[j]) / hjt);
    }
    report.ratios.push_back(
        ScanRatio{from.hbar, to.hbar, median(std::move(b2r)), median(std::move(hjr))});
  }
  return report;
}

}  // namespace sweyl
