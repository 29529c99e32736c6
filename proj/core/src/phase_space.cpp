#include "sweyl/phase_space.hpp"

#include <algorithm>
#include <cmath>

namespace sweyl {

Complex poly_eval(const PolyMap& poly, double q, double p) {
  Complex sum = 0.0;
  for (const auto& [deg, c] : poly) {
    sum += c * std::pow(q, deg.first) * std::pow(p, deg.second);
  }
  return sum;
}

PolyMap poly_derivative(const PolyMap& poly, int dq_order, int dp_order) {
  PolyMap out;
  for (const auto& [deg, c] : poly) {
    int iq = deg.first, ip = deg.second;
    if (iq < dq_order || ip < dp_order) continue;
    double factor = 1.0;
    for (int o = 0; o < dq_order; ++o) factor *= iq - o;
    for (int o = 0; o < dp_order; ++o) factor *= ip - o;
    out[{iq - dq_order, ip - dp_order}] += c * factor;
  }
  return out;
}

PolyMap poly_multiply(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) out[{da.first + db.first, da.second + db.second}] += ca * cb;
  return out;
}

PolyMap poly_add(const PolyMap& a, const PolyMap& b, Complex scale_b) {
  PolyMap out = a;
  for (const auto& [deg, c] : b) out[deg] += scale_b * c;
  // Drop exact zeros so has_poly() stays meaningful.
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == Complex(0.0, 0.0))
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::vector<Complex> poly_on_grid(const PolyMap& poly, const Grid& grid) {
  std::vector<Complex> out(static_cast<size_t>(grid.n) * grid.n, Complex(0.0));
  for (int j = 0; j < grid.n; ++j)
    for (int k = 0; k < grid.n; ++k) out[static_cast<size_t>(j) * grid.n + k] = poly_eval(poly, grid.q[j], grid.p[k]);
  return out;
}

int poly_total_degree(const PolyMap& poly) {
  int d = 0;
  for (const auto& [deg, c] : poly) {
    (void)c;
    d = std::max(d, deg.first + deg.second);
  }
  return d;
}

Complex PhaseSpaceFunction::poly_at(double qv, double pv) const { return poly_eval(poly, qv, pv); }

Complex PhaseSpaceFunction::value_at(int j, int k) const {
  Complex v = samples.empty() ? Complex(0.0) : samples[static_cast<size_t>(j) * grid.n + k];
  if (!poly.empty()) v += poly_eval(poly, grid.q[j], grid.p[k]);
  return v;
}

std::vector<Complex> PhaseSpaceFunction::dense() const {
  std::vector<Complex> out = samples;
  if (out.empty()) out.assign(static_cast<size_t>(grid.n) * grid.n, Complex(0.0));
  if (!poly.empty()) {
    for (int j = 0; j < grid.n; ++j)
      for (int k = 0; k < grid.n; ++k)
        out[static_cast<size_t>(j) * grid.n + k] += poly_eval(poly, grid.q[j], grid.p[k]);
  }
  return out;
}

Complex PhaseSpaceFunction::total_mass() const {
  Complex sum = 0.0;
  for (const auto& v : dense()) sum += v;
  return sum * grid.dq * grid.dp;
}

PhaseSpaceFunction make_symbol(const Grid& grid, SParameter s, SymbolKind kind,
                               std::vector<Complex> samples) {
  if (samples.size() != static_cast<size_t>(grid.n) * grid.n)
    throw ValidationError("make_symbol: sample count does not match grid");
  PhaseSpaceFunction f;
  f.grid = grid;
  f.s = s;
  f.kind = kind;
  f.samples = std::move(samples);
  return f;
}

PhaseSpaceFunction unit_symbol(const Grid& grid, SParameter s) {
  PhaseSpaceFunction f;
  f.grid = grid;
  f.s = s;
  f.kind = SymbolKind::operator_symbol;
  f.samples.assign(static_cast<size_t>(grid.n) * grid.n, Complex(0.0));
  f.poly[{0, 0}] = 1.0;
  return f;
}

PhaseSpaceFunction coordinate_q_symbol(const Grid& grid, SParameter s) {
  PhaseSpaceFunction f = unit_symbol(grid, s);
  f.poly.clear();
  f.poly[{1, 0}] = 1.0;
  return f;
}

PhaseSpaceFunction coordinate_p_symbol(const Grid& grid, SParameter s) {
  PhaseSpaceFunction f = unit_symbol(grid, s);
  f.poly.clear();
  f.poly[{0, 1}] = 1.0;
  return f;
}

namespace {
void require_compatible(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("phase-space arithmetic: grid mismatch");
  if (!same_s(a.s, b.s)) throw ValidationError("phase-space arithmetic: s mismatch");
}
}  // namespace

PhaseSpaceFunction operator+(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  require_compatible(a, b);
  PhaseSpaceFunction out = a;
  for (size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += b.samples[i];
  out.poly = poly_add(a.poly, b.poly);
  return out;
}

PhaseSpaceFunction operator-(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  require_compatible(a, b);
  PhaseSpaceFunction out = a;
  for (size_t i = 0; i < out.samples.size(); ++i) out.samples[i] -= b.samples[i];
  out.poly = poly_add(a.poly, b.poly, Complex(-1.0));
  return out;
}

PhaseSpaceFunction operator*(Complex c, const PhaseSpaceFunction& a) {
  PhaseSpaceFunction out = a;
  for (auto& v : out.samples) v *= c;
  for (auto& [deg, coeff] : out.poly) {
    (void)deg;
    coeff *= c;
  }
  return out;
}

double max_abs_difference(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  if (!same_grid(a.grid, b.grid)) throw ValidationError("max_abs_difference: grid mismatch");
  auto da = a.dense();
  auto db = b.dense();
  double m = 0.0;
  for (size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

}  // namespace sweyl
