#pragma once

#include <optional>
#include <string>

#include "sweyl/phase_space.hpp"
#include "sweyl/symbol.hpp"

namespace sweyl::io {

/// 17 significant digits: lossless text round trip of a double.
std::string format_double(double v);

/// Complex as "a+bi" / "a-bi" with no spaces; pure-real values print bare.
std::string format_complex(Complex z);

/// Accepts "0.5", "-0.3", "0.4i", "-i", "0.3+0.2i", "1e-3-2.5e-1i", ...
Complex parse_complex(const std::string& text);

/// Writes via a temp file + rename so readers never observe partial output.
void atomic_write(const std::string& path, const std::string& content);

/// Phase-space CSV ("psf v1"): two comment headers then rows q,p,re,im in
/// row-major q-then-p order. Polynomial parts are flattened into the values.
std::string psf_to_csv(const PhaseSpaceFunction& f);
void write_psf(const std::string& path, const PhaseSpaceFunction& f);
PhaseSpaceFunction read_psf(const std::string& path);

/// Operator CSV ("opm v1"): metadata header then rows i,j,re,im.
std::string opm_to_csv(const OperatorMatrix& a);
void write_opm(const std::string& path, const OperatorMatrix& a);
OperatorMatrix read_opm(const std::string& path);

/// Wavefunction CSV ("wfn v1"): rows q,re,im (position representation).
std::string wfn_to_csv(const WavefunctionGrid& psi);
void write_wfn(const std::string& path, const WavefunctionGrid& psi);
WavefunctionGrid read_wfn(const std::string& path);

}  // namespace sweyl::io
