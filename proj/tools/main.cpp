// sweyl: command-line surface of the phase-space toolkit.
//
// Subcommands: wigner, symbol, star, evolve, moments, scan, check.
// Exit codes: 0 success; 1 check-suite failures; 2 validation failure;
// 3 numerical-guard failure. Errors also emit a JSON payload on stderr.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sweyl/checks.hpp"
#include "sweyl/dynamics.hpp"
#include "sweyl/io.hpp"
#include "sweyl/moments.hpp"
#include "sweyl/star.hpp"
#include "sweyl/states.hpp"
#include "sweyl/symbol.hpp"
#include "sweyl/transform.hpp"
#include "sweyl/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace sweyl;

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

double to_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse " + what + ": '" + s + "'");
  }
}

std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(to_double(item, what));
  return out;
}

/// "head:k1=v1,k2=v2" -> (head, {k1: v1, ...}); a bare "head" is allowed.
std::pair<std::string, std::map<std::string, std::string>> parse_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    for (const auto& item : split(text.substr(colon + 1), ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        kv[item] = "";
      } else {
        kv[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
  }
  return {head, kv};
}

double kv_get(const std::map<std::string, std::string>& kv, const std::string& key, double dflt) {
  auto it = kv.find(key);
  return it == kv.end() ? dflt : to_double(it->second, key);
}

double kv_require(const std::map<std::string, std::string>& kv, const std::string& key,
                  const std::string& what) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError(what + ": missing field '" + key + "'");
  return to_double(it->second, key);
}

Grid parse_grid(const std::string& text, double hbar) {
  auto parts = parse_double_list(text, "--grid");
  if (parts.size() != 3) throw ValidationError("--grid expects N,qmin,qmax");
  return Grid::make(static_cast<int>(parts[0]), parts[1], parts[2], hbar);
}

WkbFields parse_wkb_fields(const std::map<std::string, std::string>& kv) {
  WkbFields f;
  f.mass = kv_get(kv, "m", 1.0);
  const double w = kv_get(kv, "w", 1.0);
  f.rho = [w](double q) {
    return std::exp(-q * q / (2.0 * w * w)) / std::sqrt(2.0 * std::numbers::pi * w * w);
  };
  f.potential = [](double) { return 0.0; };
  auto fam = kv.find("family");
  const std::string family = fam == kv.end() ? "free" : fam->second;
  if (family == "free") {
    const double p0 = kv_get(kv, "p0", 1.0);
    const double mass = f.mass;
    f.action = [p0](double q) { return p0 * q; };
    f.action_dot = [p0, mass](double) { return -p0 * p0 / (2.0 * mass); };
  } else if (family == "quadratic") {
    const double alpha = kv_get(kv, "alpha", 1.0);
    f.action = [alpha](double q) { return alpha * q * q; };
    f.action_dot = [](double) { return 0.0; };
  } else {
    throw ValidationError("unknown wkb family: '" + family + "' (free, quadratic)");
  }
  return f;
}

WavefunctionGrid parse_state(const std::string& text, const Grid& grid, bool strict) {
  auto [head, kv] = parse_spec(text);
  std::vector<std::string> warnings;
  WavefunctionGrid psi{grid, Representation::position, {}};
  if (head == "gaussian") {
    psi = gaussian_state(grid, kv_get(kv, "q0", 0.0), kv_get(kv, "p0", 0.0), kv_get(kv, "w", 1.0),
                         &warnings);
  } else if (head == "ho") {
    psi = ho_eigenstate(grid, static_cast<int>(kv_require(kv, "n", "ho state")));
  } else if (head == "wkb") {
    psi = wkb_state(grid, parse_wkb_fields(kv), grid.hbar, &warnings);
  } else if (head == "file") {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ValidationError("file state needs file:PATH");
    psi = io::read_wfn(text.substr(colon + 1));
    if (!same_grid(psi.grid, grid))
      throw ValidationError("state file grid does not match --grid");
  } else {
    throw ValidationError("unknown state spec '" + head + "' (gaussian, ho, wkb, file)");
  }
  for (const auto& w : warnings) {
    if (strict) throw ValidationError(w + " (--strict)");
    std::cerr << "warning: " << w << "\n";
  }
  return psi;
}

HamiltonianSpec parse_hamiltonian(const std::string& text) {
  auto [head, kv] = parse_spec(text);
  if (head == "free") return HamiltonianSpec::free_particle(kv_get(kv, "m", 1.0));
  if (head == "harmonic")
    return HamiltonianSpec::harmonic(kv_get(kv, "m", 1.0), kv_get(kv, "omega", 1.0));
  if (head == "gausswell") {
    const double v0 = kv_get(kv, "v0", 1.0);
    const double w = kv_get(kv, "w", 1.0);
    return HamiltonianSpec::custom(kv_get(kv, "m", 1.0), [v0, w](double q) {
      return -v0 * std::exp(-q * q / (2.0 * w * w));
    });
  }
  throw ValidationError("unknown hamiltonian '" + head + "' (free, harmonic, gausswell)");
}

json grid_json(const Grid& g) {
  return json{{"n", g.n}, {"qmin", g.q_min}, {"qmax", g.q_max}, {"dq", g.dq},
              {"dp", g.dp}, {"hbar", g.hbar}};
}

json convention_json() {
  return json{
      {"position_kernel",
       "A(q,p;s) = (1/(2 pi hbar)) int dtau conj(Psi)[q - tau(1-s)/2] e^{-i tau p/hbar} "
       "Psi[q + tau(1+s)/2]"},
      {"momentum_kernel",
       "A(q,p;s) = (1/(2 pi hbar)) int dnu conj(Phi)[p - nu(1+s)/2] e^{+i nu q/hbar} "
       "Phi[p + nu(1-s)/2]"},
      {"ordering_multiplier", "exp(i tau theta (1-s)/(2 hbar)) on the Kirkwood product"},
      {"r_map", "r = -(1+s)/2"},
      {"star_twist",
       "A exp[(i hbar/2)((1+s) dq_left dp_right - (1-s) dp_left dq_right)] B"},
      {"bracket", "[H,rho]_M = (A B - B A)_star / (i hbar)"},
      {"fourier", "Phi(p) = (2 pi hbar)^(-1/2) int e^{-i p q/hbar} Psi(q) dq"},
      {"guards", json{{"shift_ramp_exponent", kDefaultRampGuard},
                      {"multiplier_exponent", 2.0 * kDefaultRampGuard}}},
  };
}

/// Every run records its full parameter set next to its outputs.
void write_manifest(const std::string& path, const std::string& command,
                    const json& parameters, const json& extra = json::object()) {
  json m{{"tool", "sweyl"},
         {"version", kVersion},
         {"command", command},
         {"parameters", parameters},
         {"conventions", convention_json()}};
  for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
  io::atomic_write(path, m.dump(2) + "\n");
}

std::string default_manifest_path(const std::string& out) { return out + ".manifest.json"; }

int max_threads_cap() {
  // Parallelism cap; all computation currently runs on one thread, which
  // trivially honors it. Validated so a bad value fails loudly.
  const char* env = std::getenv("SWEYL_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  if (v < 1) throw ValidationError("SWEYL_THREADS must be a positive integer");
  return v;
}

// ---------------------------------------------------------------------------

struct WignerArgs {
  std::string state, s_text, grid_text, route = "auto", out, manifest;
  double hbar = 1.0;
  bool strict = false;
};

int run_wigner(const WignerArgs& a) {
  (void)max_threads_cap();
  Grid grid = parse_grid(a.grid_text, a.hbar);
  SParameter s(io::parse_complex(a.s_text));
  auto psi = parse_state(a.state, grid, a.strict);
  PhaseSpaceFunction w;
  if (a.route == "auto") {
    w = s_wigner(psi, s);
  } else if (a.route == "shift") {
    w = s_wigner_shift(psi, s);
  } else if (a.route == "momentum") {
    w = s_wigner_momentum(to_momentum(psi), s);
  } else if (a.route == "kirkwood") {
    w = s_wigner_kirkwood(psi, s);
  } else {
    throw ValidationError("unknown route '" + a.route + "' (auto, shift, momentum, kirkwood)");
  }
  io::write_psf(a.out, w);
  const Complex mass = w.total_mass();
  json params{{"state", a.state}, {"s", io::format_complex(s.value)}, {"route", a.route},
              {"grid", grid_json(grid)}, {"out", a.out}, {"strict", a.strict}};
  write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "wigner", params,
                 json{{"diagnostics", json{{"total_mass_re", mass.real()},
                                           {"total_mass_im", mass.imag()}}},
                      {"outputs", json::array({a.out})}});
  std::cout << "wrote " << a.out << " (total mass " << io::format_complex(mass) << ")\n";
  return 0;
}

struct SymbolArgs {
  std::string op, s_text, grid_text, out, manifest, psf;
  double hbar = 1.0;
  bool invert = false;
  bool strict = false;
};

int run_symbol(const SymbolArgs& a) {
  if (a.invert) {
    if (a.psf.empty()) throw ValidationError("--invert requires --psf");
    auto w = io::read_psf(a.psf);
    auto op = symbol_to_operator(w, w.s);
    io::write_opm(a.out, op);
    json params{{"psf", a.psf}, {"s", io::format_complex(w.s.value)}, {"out", a.out}};
    write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "symbol",
                   params, json{{"outputs", json::array({a.out})}});
    std::cout << "wrote " << a.out << "\n";
    return 0;
  }
  Grid grid = parse_grid(a.grid_text, a.hbar);
  SParameter s(io::parse_complex(a.s_text));
  auto [head, kv] = parse_spec(a.op);
  (void)kv;
  OperatorMatrix op{grid, Eigen::MatrixXcd(), false};
  if (head == "ident") {
    op = identity_operator(grid);
  } else if (head == "position") {
    op = position_operator(grid);
  } else if (head == "momentum") {
    op = momentum_operator(grid);
  } else if (head == "projector") {
    auto colon = a.op.find(':');
    if (colon == std::string::npos) throw ValidationError("projector needs projector:STATE");
    op = projector(parse_state(a.op.substr(colon + 1), grid, a.strict));
  } else if (head == "file") {
    auto colon = a.op.find(':');
    if (colon == std::string::npos) throw ValidationError("file operator needs file:PATH");
    op = io::read_opm(a.op.substr(colon + 1));
    if (!same_grid(op.grid, grid)) throw ValidationError("operator grid does not match --grid");
  } else {
    throw ValidationError("unknown operator '" + head +
                          "' (ident, position, momentum, projector:STATE, file:PATH)");
  }
  auto w = operator_to_symbol(op, s);
  io::write_psf(a.out, w);
  json params{{"op", a.op}, {"s", io::format_complex(s.value)}, {"grid", grid_json(grid)},
              {"out", a.out}};
  write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "symbol", params,
                 json{{"outputs", json::array({a.out})}});
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

struct StarArgs {
  std::string a_path, b_path, out, manifest, mode = "product";
};

int run_star(const StarArgs& a) {
  auto wa = io::read_psf(a.a_path);
  auto wb = io::read_psf(a.b_path);
  if (!same_s(wa.s, wb.s)) throw ValidationError("star: inputs carry different s tags");
  PhaseSpaceFunction out;
  if (a.mode == "product") {
    out = star_product(wa, wb, wa.s);
  } else if (a.mode == "commutator") {
    out = commutator_symbol(wa, wb, wa.s);
  } else if (a.mode == "bracket") {
    wa.kind = SymbolKind::operator_symbol;  // H is the left input
    wb.kind = SymbolKind::state_symbol;
    out = moyal_bracket(wa, wb, wa.s, wa.grid.hbar);
  } else {
    throw ValidationError("unknown --mode '" + a.mode + "' (product, commutator, bracket)");
  }
  io::write_psf(a.out, out);
  json params{{"a", a.a_path}, {"b", a.b_path}, {"mode", a.mode},
              {"s", io::format_complex(wa.s.value)}, {"out", a.out}};
  write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "star", params,
                 json{{"outputs", json::array({a.out})}});
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

struct EvolveArgs {
  std::string state, s_text, grid_text, hamiltonian = "harmonic:m=1,omega=1", route = "moyal";
  std::string out_dir;
  double hbar = 1.0, dt = 1e-3;
  int steps = 0, snap_every = 0;
  bool strict = false;
};

int run_evolve(const EvolveArgs& a) {
  Grid grid = parse_grid(a.grid_text, a.hbar);
  SParameter s(io::parse_complex(a.s_text));
  auto psi = parse_state(a.state, grid, a.strict);
  auto h = parse_hamiltonian(a.hamiltonian);
  fs::create_directories(a.out_dir);

  json params{{"state", a.state}, {"s", io::format_complex(s.value)},
              {"hamiltonian", a.hamiltonian}, {"route", a.route}, {"dt", a.dt},
              {"steps", a.steps}, {"snap_every", a.snap_every}, {"grid", grid_json(grid)},
              {"out_dir", a.out_dir}};
  json outputs = json::array();
  json diag;

  char name[64];
  if (a.route == "moyal") {
    auto rho0 = s_wigner(psi, s);
    auto ev = evolve_moyal(rho0, h, s, a.dt, a.steps, a.snap_every);
    json times = json::array(), mass_re = json::array(), mass_im = json::array();
    for (size_t i = 0; i < ev.snapshots.size(); ++i) {
      std::snprintf(name, sizeof name, "rho_%05zu.csv", i);
      const std::string path = (fs::path(a.out_dir) / name).string();
      io::write_psf(path, ev.snapshots[i]);
      outputs.push_back(path);
      times.push_back(ev.times[i]);
      mass_re.push_back(ev.masses[i].real());
      mass_im.push_back(ev.masses[i].imag());
    }
    diag = json{{"times", times}, {"mass_re", mass_re}, {"mass_im", mass_im}};
  } else if (a.route == "schrodinger") {
    auto ev = evolve_schrodinger(psi, h, a.dt, a.steps, a.snap_every);
    json times = json::array(), norms = json::array();
    for (size_t i = 0; i < ev.snapshots.size(); ++i) {
      std::snprintf(name, sizeof name, "psi_%05zu.csv", i);
      const std::string path = (fs::path(a.out_dir) / name).string();
      io::write_wfn(path, ev.snapshots[i]);
      outputs.push_back(path);
      times.push_back(ev.times[i]);
      norms.push_back(ev.norms[i]);
    }
    diag = json{{"times", times}, {"norms", norms}};
  } else {
    throw ValidationError("unknown route '" + a.route + "' (moyal, schrodinger)");
  }
  write_manifest((fs::path(a.out_dir) / "manifest.json").string(), "evolve", params,
                 json{{"outputs", outputs}, {"diagnostics", diag}});
  std::cout << "wrote " << outputs.size() << " snapshots to " << a.out_dir << "\n";
  return 0;
}

struct MomentsArgs {
  std::string state, s_text, grid_text, route = "grid", out, manifest;
  double hbar = 1.0, floor = kDefaultDensityFloor;
  int order = 1;
  bool strict = false;
};

int run_moments(const MomentsArgs& a) {
  Grid grid = parse_grid(a.grid_text, a.hbar);
  SParameter s(io::parse_complex(a.s_text));
  auto psi = parse_state(a.state, grid, a.strict);
  MomentProfile prof;
  if (a.route == "grid") {
    prof = conditional_moment(s_wigner(psi, s), a.order, a.floor);
  } else if (a.route == "analytic") {
    if (a.order == 1) {
      prof = analytic_first_moment(psi, s, a.floor);
    } else if (a.order == 2) {
      prof = analytic_second_moment(psi, s, a.floor);
    } else {
      throw ValidationError("analytic route supports orders 1 and 2");
    }
  } else {
    throw ValidationError("unknown route '" + a.route + "' (grid, analytic)");
  }
  std::ostringstream os;
  os << "# mom v1\n";
  os << "# n=" << grid.n << ",qmin=" << io::format_double(grid.q_min)
     << ",qmax=" << io::format_double(grid.q_max) << ",hbar=" << io::format_double(grid.hbar)
     << ",s=" << io::format_complex(s.value) << ",order=" << a.order << "\n";
  for (int j = 0; j < grid.n; ++j)
    os << io::format_double(prof.q_values[j]) << ',' << io::format_double(prof.values[j].real())
       << ',' << io::format_double(prof.values[j].imag()) << ','
       << static_cast<int>(prof.defined[j]) << '\n';
  io::atomic_write(a.out, os.str());
  json params{{"state", a.state}, {"s", io::format_complex(s.value)}, {"order", a.order},
              {"route", a.route}, {"density_floor", a.floor}, {"grid", grid_json(grid)},
              {"out", a.out}};
  write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "moments",
                 params, json{{"outputs", json::array({a.out})}});
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

struct ScanArgs {
  std::string fields, grid_text, s_samples, hbar_samples, out, csv, manifest;
};

int run_scan(const ScanArgs& a) {
  auto [head, kv] = parse_spec(a.fields);
  if (head != "wkb" && head != "free" && head != "quadratic")
    throw ValidationError("scan fields: use free:... or quadratic:... (wkb families)");
  std::map<std::string, std::string> fkv = kv;
  if (head != "wkb") fkv["family"] = head;
  WkbFields fields = parse_wkb_fields(fkv);
  Grid grid = parse_grid(a.grid_text, 1.0);
  auto s_list = parse_double_list(a.s_samples, "--s-samples");
  auto h_list = parse_double_list(a.hbar_samples, "--hbar-samples");
  auto report = classical_limit_scan(fields, grid, s_list, h_list);

  json entries = json::array();
  for (const auto& e : report.entries) {
    json je{{"hbar", e.hbar}};
    auto arr_c = [&](const std::vector<Complex>& v, const char* re, const char* im) {
      json a1 = json::array(), a2 = json::array();
      for (const auto& x : v) {
        a1.push_back(x.real());
        a2.push_back(x.imag());
      }
      je[re] = a1;
      je[im] = a2;
    };
    json q = json::array(), hj = json::array(), defined = json::array();
    for (double x : e.q_values) q.push_back(x);
    for (double x : e.hj_bracket) hj.push_back(x);
    for (auto d : e.defined) defined.push_back(static_cast<int>(d));
    je["q"] = q;
    arr_c(e.p1_c0, "p1_c0_re", "p1_c0_im");
    arr_c(e.p1_c1, "p1_c1_re", "p1_c1_im");
    arr_c(e.p2_c0, "p2_c0_re", "p2_c0_im");
    arr_c(e.p2_c1, "p2_c1_re", "p2_c1_im");
    arr_c(e.p2_c2, "p2_c2_re", "p2_c2_im");
    je["hj_bracket"] = hj;
    je["defined"] = defined;
    entries.push_back(std::move(je));
  }
  json ratios = json::array();
  for (const auto& r : report.ratios)
    ratios.push_back(json{{"hbar_from", r.hbar_from},
                          {"hbar_to", r.hbar_to},
                          {"median_b2_ratio", r.median_b2_ratio},
                          {"median_hj_ratio", r.median_hj_ratio}});

  json params{{"fields", a.fields}, {"grid", grid_json(grid)}, {"s_samples", a.s_samples},
              {"hbar_samples", a.hbar_samples}, {"out", a.out}};
  json doc{{"tool", "sweyl"}, {"version", kVersion}, {"command", "scan"},
           {"parameters", params}, {"conventions", convention_json()},
           {"entries", entries}, {"ratios", ratios}};
  io::atomic_write(a.out, doc.dump() + "\n");

  if (!a.csv.empty()) {
    std::ostringstream os;
    os << "hbar_from,hbar_to,median_b2_ratio,median_hj_ratio\n";
    for (const auto& r : report.ratios)
      os << io::format_double(r.hbar_from) << ',' << io::format_double(r.hbar_to) << ','
         << io::format_double(r.median_b2_ratio) << ',' << io::format_double(r.median_hj_ratio)
         << '\n';
    io::atomic_write(a.csv, os.str());
  }
  write_manifest(a.manifest.empty() ? default_manifest_path(a.out) : a.manifest, "scan", params,
                 json{{"outputs", a.csv.empty() ? json::array({a.out})
                                                : json::array({a.out, a.csv})}});
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

int run_check(const std::string& suite) {
  auto results = checks::run_suite(suite);
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.suite.size() + r.name.size() + 2);
  bool all_pass = true;
  for (const auto& r : results) {
    std::string label = r.suite + ": " + r.name;
    label.resize(width + 2, ' ');
    std::printf("%s %s  max_err=%.3e tol=%.1e%s\n", r.pass ? "PASS" : "FAIL", label.c_str(),
                r.max_err, r.tolerance, r.detail.empty() ? "" : ("  [" + r.detail + "]").c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%s: %zu checks\n", all_pass ? "PASS" : "FAIL", results.size());
  return all_pass ? 0 : 1;
}

void print_json_error(const char* type, const std::string& message) {
  json err{{"error", json{{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweyl: generalized (s-parameterized) phase-space calculus on periodic grids"};
  app.set_version_flag("--version", std::string("sweyl ") + kVersion);
  app.require_subcommand(1);

  std::function<int()> action;

  auto* wigner = app.add_subcommand("wigner", "s-parameterized distribution of a state");
  {
    auto args = std::make_shared<WignerArgs>();
    wigner->add_option("--state", args->state, "gaussian:q0=..,p0=..,w=.. | ho:n=.. | wkb:... | file:PATH")
        ->required();
    wigner->add_option("--s", args->s_text, "ordering parameter, e.g. 0, 0.5, 0.4i, 0.3+0.2i")
        ->required();
    wigner->add_option("--grid", args->grid_text, "N,qmin,qmax")->required();
    wigner->add_option("--hbar", args->hbar, "Planck constant (default 1)");
    wigner->add_option("--route", args->route, "auto | shift | momentum | kirkwood");
    wigner->add_option("--out", args->out, "output psf CSV")->required();
    wigner->add_option("--manifest", args->manifest, "manifest path (default OUT.manifest.json)");
    wigner->add_flag("--strict", args->strict, "escalate support warnings to errors");
    wigner->callback([args, &action] { action = [args] { return run_wigner(*args); }; });
  }

  auto* symbol = app.add_subcommand("symbol", "operator <-> symbol transforms");
  {
    auto args = std::make_shared<SymbolArgs>();
    symbol->add_option("--op", args->op, "ident | position | momentum | projector:STATE | file:PATH");
    symbol->add_option("--s", args->s_text, "ordering parameter");
    symbol->add_option("--grid", args->grid_text, "N,qmin,qmax");
    symbol->add_option("--hbar", args->hbar, "Planck constant (default 1)");
    symbol->add_flag("--invert", args->invert, "reconstruct the operator from --psf");
    symbol->add_option("--psf", args->psf, "input psf CSV (with --invert)");
    symbol->add_option("--out", args->out, "output CSV")->required();
    symbol->add_option("--manifest", args->manifest, "manifest path");
    symbol->add_flag("--strict", args->strict, "escalate support warnings to errors");
    symbol->callback([args, &action] {
      action = [args] {
        if (!args->invert && (args->op.empty() || args->s_text.empty() || args->grid_text.empty()))
          throw ValidationError("symbol: --op, --s and --grid are required without --invert");
        return run_symbol(*args);
      };
    });
  }

  auto* star = app.add_subcommand("star", "star product / commutator / bracket of symbol files");
  {
    auto args = std::make_shared<StarArgs>();
    star->add_option("--a", args->a_path, "left psf CSV")->required();
    star->add_option("--b", args->b_path, "right psf CSV")->required();
    star->add_option("--mode", args->mode, "product | commutator | bracket");
    star->add_option("--out", args->out, "output psf CSV")->required();
    star->add_option("--manifest", args->manifest, "manifest path");
    star->callback([args, &action] { action = [args] { return run_star(*args); }; });
  }

  auto* evolve = app.add_subcommand("evolve", "time evolution (moyal or schrodinger route)");
  {
    auto args = std::make_shared<EvolveArgs>();
    evolve->add_option("--state", args->state, "initial state spec")->required();
    evolve->add_option("--s", args->s_text, "ordering parameter")->required();
    evolve->add_option("--grid", args->grid_text, "N,qmin,qmax")->required();
    evolve->add_option("--hbar", args->hbar, "Planck constant (default 1)");
    evolve->add_option("--hamiltonian", args->hamiltonian,
                       "free:m=.. | harmonic:m=..,omega=.. | gausswell:m=..,v0=..,w=..");
    evolve->add_option("--route", args->route, "moyal | schrodinger");
    evolve->add_option("--dt", args->dt, "time step (default 1e-3)");
    evolve->add_option("--steps", args->steps, "number of steps")->required();
    evolve->add_option("--snap-every", args->snap_every, "also record every k-th step");
    evolve->add_option("--out-dir", args->out_dir, "snapshot directory")->required();
    evolve->add_flag("--strict", args->strict, "escalate support warnings to errors");
    evolve->callback([args, &action] { action = [args] { return run_evolve(*args); }; });
  }

  auto* moments = app.add_subcommand("moments", "space-conditional momentum moments");
  {
    auto args = std::make_shared<MomentsArgs>();
    moments->add_option("--state", args->state, "state spec")->required();
    moments->add_option("--s", args->s_text, "ordering parameter")->required();
    moments->add_option("--grid", args->grid_text, "N,qmin,qmax")->required();
    moments->add_option("--hbar", args->hbar, "Planck constant (default 1)");
    moments->add_option("--n", args->order, "moment order")->required();
    moments->add_option("--route", args->route, "grid | analytic");
    moments->add_option("--floor", args->floor, "density floor (default 1e-12)");
    moments->add_option("--out", args->out, "output CSV")->required();
    moments->add_option("--manifest", args->manifest, "manifest path");
    moments->add_flag("--strict", args->strict, "escalate support warnings to errors");
    moments->callback([args, &action] { action = [args] { return run_moments(*args); }; });
  }

  auto* scan = app.add_subcommand("scan", "classical-limit scan of a WKB family");
  {
    auto args = std::make_shared<ScanArgs>();
    scan->add_option("--fields", args->fields, "free:p0=..,w=..,m=.. | quadratic:alpha=..,w=..,m=..")
        ->required();
    scan->add_option("--grid", args->grid_text, "N,qmin,qmax")->required();
    scan->add_option("--s-samples", args->s_samples, "comma list, e.g. -0.3,0,0.3")->required();
    scan->add_option("--hbar-samples", args->hbar_samples, "comma list, e.g. 0.4,0.2,0.1")
        ->required();
    scan->add_option("--out", args->out, "output JSON report")->required();
    scan->add_option("--csv", args->csv, "optional CSV ratio summary");
    scan->add_option("--manifest", args->manifest, "manifest path");
    scan->callback([args, &action] { action = [args] { return run_scan(*args); }; });
  }

  auto* check = app.add_subcommand("check", "run invariant suites, print a PASS/FAIL table");
  {
    auto suite = std::make_shared<std::string>("all");
    check->add_option("--suite", *suite, "all | grid | states | transform | symbol | star | dynamics | moments");
    check->callback([suite, &action] { action = [suite] { return run_check(*suite); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_json_error("validation", e.what());
    return 2;
  }

  try {
    return action();
  } catch (const NumericalGuardError& e) {
    print_json_error("numerical_guard", e.what());
    return 3;
  } catch (const ValidationError& e) {
    print_json_error("validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_json_error("internal", e.what());
    return 2;
  }
}
