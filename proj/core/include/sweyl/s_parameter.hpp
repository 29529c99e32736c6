#pragma once

#include <cmath>
#include <complex>

namespace sweyl {

/// The ordering parameter of the generalized Weyl calculus. s = 0 is the
/// symmetric (Wigner) case; s = +1 puts the full offset on the right factor
/// of the two-point kernel, s = -1 on the left. Purely imaginary s keeps the
/// distribution real-valued. Related to the canonical-shift parameter by
/// r = -(1+s)/2.
struct SParameter {
  std::complex<double> value{0.0, 0.0};

  SParameter() = default;
  SParameter(double re) : value(re, 0.0) {}                // NOLINT(google-explicit-constructor)
  SParameter(std::complex<double> v) : value(v) {}         // NOLINT(google-explicit-constructor)

  bool is_real(double tol = 0.0) const { return std::abs(value.imag()) <= tol; }
  SParameter neg_conj() const { return SParameter(-std::conj(value)); }

  friend bool operator==(const SParameter& a, const SParameter& b) { return a.value == b.value; }
};

inline bool same_s(const SParameter& a, const SParameter& b, double tol = 1e-14) {
  return std::abs(a.value - b.value) <= tol;
}

inline double r_from_s(double s) { return -(1.0 + s) / 2.0; }
inline double s_from_r_scalar(double r) { return -(1.0 + 2.0 * r); }

}  // namespace sweyl
