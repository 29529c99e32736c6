#include "sweyl/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace sweyl::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin) throw ValidationError("could not parse number: '" + s + "'");
  return v;
}

/// "k1=v1,k2=v2,..." -> map (values may contain no commas)
std::map<std::string, std::string> parse_kv(const std::string& line) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(line, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::string header_value(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError("missing header field '" + key + "'");
  return it->second;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  out += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
  out += format_double(std::abs(z.imag()));
  out += "i";
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw ValidationError("empty complex literal");
  if (t.back() != 'i' && t.back() != 'I') return Complex(parse_double(t), 0.0);
  t.pop_back();  // strip the i
  // find the split sign: a '+'/'-' that is neither leading nor part of an exponent
  size_t split_pos = std::string::npos;
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E')
      split_pos = i;  // keep the last candidate: "1e-3-2e-4" splits at the second '-'
  }
  if (split_pos == std::string::npos) {
    // pure imaginary: "i", "-i", "0.4i"
    if (t.empty() || t == "+") return Complex(0.0, 1.0);
    if (t == "-") return Complex(0.0, -1.0);
    return Complex(0.0, parse_double(t));
  }
  const std::string re = t.substr(0, split_pos);
  std::string im = t.substr(split_pos);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(parse_double(re), parse_double(im));
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write file: " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw ValidationError("cannot rename " + tmp + " to " + path);
  }
}

std::string psf_to_csv(const PhaseSpaceFunction& f) {
  std::ostringstream os;
  os << "# psf v1\n";
  os << "# n=" << f.grid.n << ",qmin=" << format_double(f.grid.q_min)
     << ",qmax=" << format_double(f.grid.q_max) << ",hbar=" << format_double(f.grid.hbar)
     << ",s=" << format_complex(f.s.value)
     << ",kind=" << (f.kind == SymbolKind::state_symbol ? "state" : "operator") << "\n";
  auto dense = f.dense();
  for (int j = 0; j < f.grid.n; ++j)
    for (int k = 0; k < f.grid.n; ++k) {
      const Complex v = dense[static_cast<size_t>(j) * f.grid.n + k];
      os << format_double(f.grid.q[j]) << ',' << format_double(f.grid.p[k]) << ','
         << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  return os.str();
}

void write_psf(const std::string& path, const PhaseSpaceFunction& f) {
  atomic_write(path, psf_to_csv(f));
}

PhaseSpaceFunction read_psf(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line.rfind("# psf v1", 0) != 0)
    throw ValidationError(path + ": not a psf v1 file");
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ValidationError(path + ": missing psf metadata header");
  auto kv = parse_kv(line.substr(2));
  const int n = static_cast<int>(parse_double(header_value(kv, "n")));
  Grid g = Grid::make(n, parse_double(header_value(kv, "qmin")),
                      parse_double(header_value(kv, "qmax")), parse_double(header_value(kv, "hbar")));
  SParameter s(parse_complex(header_value(kv, "s")));
  SymbolKind kind = header_value(kv, "kind") == "operator" ? SymbolKind::operator_symbol
                                                           : SymbolKind::state_symbol;
  std::vector<Complex> samples(static_cast<size_t>(n) * n);
  size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, ',');
    if (cols.size() != 4) throw ValidationError(path + ": malformed psf row: " + line);
    if (row >= samples.size()) throw ValidationError(path + ": too many psf rows");
    samples[row++] = Complex(parse_double(cols[2]), parse_double(cols[3]));
  }
  if (row != samples.size()) throw ValidationError(path + ": psf row count mismatch");
  return make_symbol(g, s, kind, std::move(samples));
}

std::string opm_to_csv(const OperatorMatrix& a) {
  std::ostringstream os;
  os << "# opm v1\n";
  os << "# n=" << a.grid.n << ",qmin=" << format_double(a.grid.q_min)
     << ",qmax=" << format_double(a.grid.q_max) << ",hbar=" << format_double(a.grid.hbar)
     << ",hermitian=" << (a.hermitian_hint ? 1 : 0) << "\n";
  for (int i = 0; i < a.grid.n; ++i)
    for (int j = 0; j < a.grid.n; ++j)
      os << i << ',' << j << ',' << format_double(a.entries(i, j).real()) << ','
         << format_double(a.entries(i, j).imag()) << '\n';
  return os.str();
}

void write_opm(const std::string& path, const OperatorMatrix& a) {
  atomic_write(path, opm_to_csv(a));
}

OperatorMatrix read_opm(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line.rfind("# opm v1", 0) != 0)
    throw ValidationError(path + ": not an opm v1 file");
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ValidationError(path + ": missing opm metadata header");
  auto kv = parse_kv(line.substr(2));
  const int n = static_cast<int>(parse_double(header_value(kv, "n")));
  Grid g = Grid::make(n, parse_double(header_value(kv, "qmin")),
                      parse_double(header_value(kv, "qmax")), parse_double(header_value(kv, "hbar")));
  OperatorMatrix a{g, Eigen::MatrixXcd::Zero(n, n),
                   header_value(kv, "hermitian") == "1"};
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, ',');
    if (cols.size() != 4) throw ValidationError(path + ": malformed opm row: " + line);
    const int i = static_cast<int>(parse_double(cols[0]));
    const int j = static_cast<int>(parse_double(cols[1]));
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ValidationError(path + ": opm index out of range");
    a.entries(i, j) = Complex(parse_double(cols[2]), parse_double(cols[3]));
  }
  return a;
}

std::string wfn_to_csv(const WavefunctionGrid& psi) {
  if (psi.rep != Representation::position)
    throw ValidationError("wfn_to_csv: expects a position-representation state");
  std::ostringstream os;
  os << "# wfn v1\n";
  os << "# n=" << psi.grid.n << ",qmin=" << format_double(psi.grid.q_min)
     << ",qmax=" << format_double(psi.grid.q_max) << ",hbar=" << format_double(psi.grid.hbar)
     << "\n";
  for (int j = 0; j < psi.grid.n; ++j)
    os << format_double(psi.grid.q[j]) << ',' << format_double(psi.samples[j].real()) << ','
       << format_double(psi.samples[j].imag()) << '\n';
  return os.str();
}

void write_wfn(const std::string& path, const WavefunctionGrid& psi) {
  atomic_write(path, wfn_to_csv(psi));
}

WavefunctionGrid read_wfn(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line.rfind("# wfn v1", 0) != 0)
    throw ValidationError(path + ": not a wfn v1 file");
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ValidationError(path + ": missing wfn metadata header");
  auto kv = parse_kv(line.substr(2));
  const int n = static_cast<int>(parse_double(header_value(kv, "n")));
  Grid g = Grid::make(n, parse_double(header_value(kv, "qmin")),
                      parse_double(header_value(kv, "qmax")), parse_double(header_value(kv, "hbar")));
  WavefunctionGrid psi{g, Representation::position, std::vector<Complex>(n)};
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, ',');
    if (cols.size() != 3) throw ValidationError(path + ": malformed wfn row: " + line);
    if (row >= n) throw ValidationError(path + ": too many wfn rows");
    psi.samples[row++] = Complex(parse_double(cols[1]), parse_double(cols[2]));
  }
  if (row != n) throw ValidationError(path + ": wfn row count mismatch");
  return psi;
}

}  // namespace sweyl::io
