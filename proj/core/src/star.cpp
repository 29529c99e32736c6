#include "sweyl/star.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lattice_transforms.hpp"
#include "sweyl/fft.hpp"

namespace sweyl {

namespace {

void check_inputs(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b, SParameter s,
                  const char* who) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError(std::string(who) + ": grid mismatch");
  if (!same_s(a.s, s) || !same_s(b.s, s))
    throw ValidationError(std::string(who) + ": inputs carry a different s tag");
  const double exponent = std::numbers::pi * a.grid.n * std::abs(s.value.imag()) / 4.0;
  if (exponent > 2.0 * kDefaultRampGuard) {
    std::ostringstream os;
    os << who << ": twist exponent " << exponent << " exceeds guard (max admissible |Im s| = "
       << 8.0 * kDefaultRampGuard / (std::numbers::pi * a.grid.n) << " on this grid)";
    throw NumericalGuardError(os.str());
  }
}

bool residual_is_zero(const PhaseSpaceFunction& f) {
  for (const auto& v : f.samples)
    if (v != Complex(0.0)) return false;
  return true;
}

/// Mode coefficients: f[j*n+k] = sum_{l,m} coef[l*n+m] exp(i(theta_l q_j + tau_m p_k)/hbar)
std::vector<Complex> to_modes(const std::vector<Complex>& samples, const Grid& g) {
  const int n = g.n;
  // over k first (centered), then over j (affine), normalize by n^2
  std::vector<Complex> half(static_cast<size_t>(n) * n);  // [j*n + m]
  std::vector<Complex> buf(n), out(n);
  for (int j = 0; j < n; ++j) {
    std::span<const Complex> row(samples.data() + static_cast<size_t>(j) * n, n);
    fft::centered_dft(row, out, fft::kForward);
    for (int m = 0; m < n; ++m) half[static_cast<size_t>(j) * n + m] = out[m];
  }
  std::vector<Complex> modes(static_cast<size_t>(n) * n);  // [l*n + m]
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) buf[j] = half[static_cast<size_t>(j) * n + m];
    auto col = detail::q_to_theta(buf, g, -1);
    for (int l = 0; l < n; ++l)
      modes[static_cast<size_t>(l) * n + m] = col[l] / static_cast<double>(n) / static_cast<double>(n);
  }
  return modes;
}

std::vector<Complex> from_modes(const std::vector<Complex>& modes, const Grid& g) {
  const int n = g.n;
  std::vector<Complex> half(static_cast<size_t>(n) * n);  // [j*n + m]
  std::vector<Complex> buf(n), out(n);
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) buf[l] = modes[static_cast<size_t>(l) * n + m];
    auto col = detail::theta_to_q(buf, g, +1);
    for (int j = 0; j < n; ++j) half[static_cast<size_t>(j) * n + m] = col[j];
  }
  std::vector<Complex> samples(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    std::span<const Complex> row(half.data() + static_cast<size_t>(j) * n, n);
    fft::centered_dft(row, out, fft::kBackward);
    for (int k = 0; k < n; ++k) samples[static_cast<size_t>(j) * n + k] = out[k];
  }
  return samples;
}

/// Twist tables: t_plus[l*n+m] = exp(-i pi (1+s)(l-n/2)(m-n/2)/n),
///               t_minus[l*n+m] = exp(+i pi (1-s)(l-n/2)(m-n/2)/n).
/// The pair phase of the twisted convolution is
///   W(1,2) = t_plus[l1][m2] * t_minus[l2][m1].
struct TwistTables {
  std::vector<Complex> t_plus, t_minus;

  TwistTables(const Grid& g, SParameter s) {
    const int n = g.n;
    t_plus.resize(static_cast<size_t>(n) * n);
    t_minus.resize(static_cast<size_t>(n) * n);
    const Complex cp = Complex(0.0, -1.0) * std::numbers::pi * (1.0 + s.value) / double(n);
    const Complex cm = Complex(0.0, +1.0) * std::numbers::pi * (1.0 - s.value) / double(n);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        const double x = static_cast<double>(l - n / 2) * (m - n / 2);
        t_plus[static_cast<size_t>(l) * n + m] = std::exp(cp * x);
        t_minus[static_cast<size_t>(l) * n + m] = std::exp(cm * x);
      }
  }
};

/// Twisted convolution of residual mode arrays. When `antisymmetrize` is set
/// the kernel is W(1,2) - W(2,1) (the commutator's -2i exp(..) sin(..) form,
/// evaluated as the exact difference of the two exponential twists).
std::vector<Complex> twisted_convolution(const std::vector<Complex>& am,
                                         const std::vector<Complex>& bm, const Grid& g,
                                         const TwistTables& tw, bool antisymmetrize) {
  const int n = g.n;
  std::vector<Complex> cm(static_cast<size_t>(n) * n, Complex(0.0));
  std::vector<Complex> u1(n), v1(n), u2(n), v2(n);
  for (int l1 = 0; l1 < n; ++l1) {
    for (int l2 = 0; l2 < n; ++l2) {
      const int L = l1 + l2 - n / 2;
      if (L < 0 || L >= n) continue;  // out-of-band theta sum: dropped
      const Complex* arow = am.data() + static_cast<size_t>(l1) * n;
      const Complex* brow = bm.data() + static_cast<size_t>(l2) * n;
      const Complex* tp1 = tw.t_plus.data() + static_cast<size_t>(l1) * n;
      const Complex* tm2 = tw.t_minus.data() + static_cast<size_t>(l2) * n;
      for (int m1 = 0; m1 < n; ++m1) {
        u1[m1] = arow[m1] * tm2[m1];
        v1[m1] = brow[m1] * tp1[m1];
      }
      if (antisymmetrize) {
        const Complex* tp2 = tw.t_plus.data() + static_cast<size_t>(l2) * n;
        const Complex* tm1 = tw.t_minus.data() + static_cast<size_t>(l1) * n;
        for (int m1 = 0; m1 < n; ++m1) {
          u2[m1] = arow[m1] * tp2[m1];
          v2[m1] = brow[m1] * tm1[m1];
        }
      }
      Complex* crow = cm.data() + static_cast<size_t>(L) * n;
      for (int m1 = 0; m1 < n; ++m1) {
        const int m_lo = std::max(0, n / 2 - m1);
        const int m_hi = std::min(n, 3 * n / 2 - m1);
        const Complex a1 = u1[m1];
        const Complex a2 = antisymmetrize ? u2[m1] : Complex(0.0);
        const int moff = m1 - n / 2;  // M = m1 + m2 - n/2
        if (antisymmetrize) {
          for (int m2 = m_lo; m2 < m_hi; ++m2) crow[moff + m2] += a1 * v1[m2] - a2 * v2[m2];
        } else {
          for (int m2 = m_lo; m2 < m_hi; ++m2) crow[moff + m2] += a1 * v1[m2];
        }
      }
    }
  }
  return cm;
}

std::vector<Complex> spectral_derivative_2d(const std::vector<Complex>& samples, const Grid& g,
                                            int dq_order, int dp_order) {
  const int n = g.n;
  std::vector<Complex> out = samples;
  std::vector<Complex> buf(n);
  if (dp_order > 0) {
    for (int j = 0; j < n; ++j) {
      std::span<Complex> row(out.data() + static_cast<size_t>(j) * n, n);
      auto d = spectral_derivative(row, dp_order, g.dp);
      std::copy(d.begin(), d.end(), row.begin());
    }
  }
  if (dq_order > 0) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) buf[j] = out[static_cast<size_t>(j) * n + k];
      auto d = spectral_derivative(buf, dq_order, g.dq);
      for (int j = 0; j < n; ++j) out[static_cast<size_t>(j) * n + k] = d[j];
    }
  }
  return out;
}

/// Terminating series star(f_poly, g_resid) or star(g_resid, f_poly):
///   sum_{m,n} c1^m c2^n / (m! n!) (dq^m dp^n LEFT)(dp^m dq^n RIGHT)
/// with c1 = (i hbar/2)(1+s), c2 = -(i hbar/2)(1-s).
std::vector<Complex> mixed_star(const PolyMap& poly, const std::vector<Complex>& resid,
                                const Grid& g, SParameter s, bool poly_on_left) {
  const Complex c1 = Complex(0.0, g.hbar / 2.0) * (1.0 + s.value);
  const Complex c2 = Complex(0.0, -g.hbar / 2.0) * (1.0 - s.value);
  const int deg = poly_total_degree(poly);
  std::vector<Complex> acc(static_cast<size_t>(g.n) * g.n, Complex(0.0));
  double m_fact = 1.0;
  for (int m = 0; m <= deg; ++m) {
    if (m > 0) m_fact *= m;
    double n_fact = 1.0;
    for (int nn = 0; nn + m <= deg; ++nn) {
      if (nn > 0) n_fact *= nn;
      // poly-side derivative: left factor takes (dq^m dp^n), right takes (dp^m dq^n)
      PolyMap pd = poly_on_left ? poly_derivative(poly, m, nn) : poly_derivative(poly, nn, m);
      if (pd.empty()) continue;
      auto pd_grid = poly_on_grid(pd, g);
      auto rd = spectral_derivative_2d(resid, g, poly_on_left ? nn : m, poly_on_left ? m : nn);
      Complex coeff = std::pow(c1, m) * std::pow(c2, nn) / (m_fact * n_fact);
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += coeff * pd_grid[i] * rd[i];
    }
  }
  return acc;
}

/// star restricted to the polynomial parts: exact symbolic series.
PolyMap poly_star(const PolyMap& a, const PolyMap& b, const Grid& g, SParameter s) {
  const Complex c1 = Complex(0.0, g.hbar / 2.0) * (1.0 + s.value);
  const Complex c2 = Complex(0.0, -g.hbar / 2.0) * (1.0 - s.value);
  const int deg_a = poly_total_degree(a);
  PolyMap out;
  double m_fact = 1.0;
  for (int m = 0; m <= deg_a; ++m) {
    if (m > 0) m_fact *= m;
    double n_fact = 1.0;
    for (int nn = 0; nn + m <= deg_a; ++nn) {
      if (nn > 0) n_fact *= nn;
      PolyMap da = poly_derivative(a, m, nn);
      if (da.empty()) continue;
      PolyMap db = poly_derivative(b, nn, m);
      if (db.empty()) continue;
      Complex coeff = std::pow(c1, m) * std::pow(c2, nn) / (m_fact * n_fact);
      out = poly_add(out, poly_multiply(da, db), coeff);
    }
  }
  return out;
}

}  // namespace

PhaseSpaceFunction star_product(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b,
                                SParameter s) {
  check_inputs(a, b, s, "star_product");
  const Grid& g = a.grid;
  PhaseSpaceFunction out;
  out.grid = g;
  out.s = s;
  out.kind = SymbolKind::operator_symbol;
  out.samples.assign(static_cast<size_t>(g.n) * g.n, Complex(0.0));
  out.poly = poly_star(a.poly, b.poly, g, s);

  const bool a_res = !residual_is_zero(a);
  const bool b_res = !residual_is_zero(b);
  if (a.has_poly() && b_res) {
    auto part = mixed_star(a.poly, b.samples, g, s, /*poly_on_left=*/true);
    for (size_t i = 0; i < part.size(); ++i) out.samples[i] += part[i];
  }
  if (b.has_poly() && a_res) {
    auto part = mixed_star(b.poly, a.samples, g, s, /*poly_on_left=*/false);
    for (size_t i = 0; i < part.size(); ++i) out.samples[i] += part[i];
  }
  if (a_res && b_res) {
    TwistTables tw(g, s);
    auto am = to_modes(a.samples, g);
    auto bm = to_modes(b.samples, g);
    auto cmodes = twisted_convolution(am, bm, g, tw, /*antisymmetrize=*/false);
    auto part = from_modes(cmodes, g);
    for (size_t i = 0; i < part.size(); ++i) out.samples[i] += part[i];
  }
  return out;
}

PhaseSpaceFunction commutator_symbol(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b,
                                     SParameter s) {
  check_inputs(a, b, s, "commutator_symbol");
  const Grid& g = a.grid;
  PhaseSpaceFunction out;
  out.grid = g;
  out.s = s;
  out.kind = SymbolKind::operator_symbol;
  out.samples.assign(static_cast<size_t>(g.n) * g.n, Complex(0.0));
  out.poly = poly_add(poly_star(a.poly, b.poly, g, s), poly_star(b.poly, a.poly, g, s),
                      Complex(-1.0));

  const bool a_res = !residual_is_zero(a);
  const bool b_res = !residual_is_zero(b);
  if (a.has_poly() && b_res) {
    auto left = mixed_star(a.poly, b.samples, g, s, true);   // a * b_resid
    auto right = mixed_star(a.poly, b.samples, g, s, false); // b_resid * a
    for (size_t i = 0; i < left.size(); ++i) out.samples[i] += left[i] - right[i];
  }
  if (b.has_poly() && a_res) {
    auto left = mixed_star(b.poly, a.samples, g, s, false);  // a_resid * b
    auto right = mixed_star(b.poly, a.samples, g, s, true);  // b * a_resid
    for (size_t i = 0; i < left.size(); ++i) out.samples[i] += left[i] - right[i];
  }
  if (a_res && b_res) {
    TwistTables tw(g, s);
    auto am = to_modes(a.samples, g);
    auto bm = to_modes(b.samples, g);
    auto cmodes = twisted_convolution(am, bm, g, tw, /*antisymmetrize=*/true);
    auto part = from_modes(cmodes, g);
    for (size_t i = 0; i < part.size(); ++i) out.samples[i] += part[i];
  }
  return out;
}

PhaseSpaceFunction moyal_bracket(const PhaseSpaceFunction& h_w, const PhaseSpaceFunction& rho_w,
                                 SParameter s, double hbar) {
  if (h_w.kind != SymbolKind::operator_symbol)
    throw ValidationError("moyal_bracket: H must be an operator-symbol");
  if (rho_w.kind != SymbolKind::state_symbol)
    throw ValidationError("moyal_bracket: rho must be a state-symbol");
  if (std::abs(hbar - h_w.grid.hbar) > 1e-12 * std::abs(hbar))
    throw ValidationError("moyal_bracket: hbar does not match the grid");
  PhaseSpaceFunction c = commutator_symbol(h_w, rho_w, s);
  PhaseSpaceFunction out = Complex(0.0, -1.0 / hbar) * c;  // 1/(i hbar) = -i/hbar
  out.kind = SymbolKind::state_symbol;
  return out;
}

}  // namespace sweyl
