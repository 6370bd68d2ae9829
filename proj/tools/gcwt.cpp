// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

// gcwt: command-line front end.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcwt/finite_rep.hpp"
#include "gcwt/io.hpp"
#include "gcwt/parallel.hpp"
#include "gcwt/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace gcwt;

namespace {

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

// Numerical failure: divergent integrals, windows too small, unusable grids.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// String-valued options with config-file fallback: flag, then [subcommand] key, then
/// [general] key, then the built-in default.
class Options {
 public:
  Options(CLI::App* app, std::string section) : app_(app), section_(std::move(section)) {}

  void add(const std::string& name, std::string def, const std::string& help) {
    defaults_[name] = std::move(def);
    app_->add_option("--" + name, values_[name], help + (defaults_[name].empty() ? "" : " [" + defaults_[name] + "]"));
  }
  void flag(const std::string& name, const std::string& help) {
    defaults_[name] = "false";
    app_->add_flag("--" + name, flags_[name], help);
  }

  void resolve(const boost::property_tree::ptree& config) {
    for (auto& [name, value] : values_) {
      if (app_->count("--" + name) > 0) continue;
      value = lookup(config, name).value_or(defaults_[name]);
    }
    for (auto& [name, on] : flags_) {
      if (app_->count("--" + name) > 0) continue;
      const std::string v = lookup(config, name).value_or("false");
      on = v == "true" || v == "1" || v == "yes" || v == "on";
    }
  }

  std::string str(const std::string& name) const { return values_.at(name); }
  bool has(const std::string& name) const { return !values_.at(name).empty(); }
  bool on(const std::string& name) const { return flags_.at(name); }

  double real(const std::string& name) const { return parse_double(name, str(name)); }
  std::size_t count(const std::string& name) const {
    const std::string s = str(name);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size() && v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
    throw ConfigError("--" + name + " expects a non-negative integer, got '" + s + "'");
  }
  std::int64_t integer(const std::string& name) const {
    const std::string s = str(name);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ConfigError("--" + name + " expects an integer, got '" + s + "'");
  }
  std::vector<double> reals(const std::string& name, std::size_t expected = 0) const {
    std::vector<double> out;
    std::stringstream ss(str(name));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(name, item));
    if (expected && out.size() != expected)
      throw ConfigError("--" + name + " expects " + std::to_string(expected) + " comma-separated numbers");
    return out;
  }
  std::vector<std::string> list(const std::string& name) const {
    std::vector<std::string> out;
    std::stringstream ss(str(name));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  }

 private:
  static double parse_double(const std::string& name, const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ConfigError("--" + name + " expects a number, got '" + s + "'");
  }
  std::optional<std::string> lookup(const boost::property_tree::ptree& config, const std::string& name) const {
    for (const std::string& sec : {section_, std::string("general")})
      if (auto v = config.get_optional<std::string>(boost::property_tree::ptree::path_type(sec + "/" + name, '/')))
        return *v;
    return std::nullopt;
  }

  CLI::App* app_;
  std::string section_;
  std::map<std::string, std::string> defaults_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
};

// ---------------------------------------------------------------------------
// Shared option groups and loaders.

void add_group_options(Options& o) {
  o.add("group", "", "group kind: " + [] {
    std::string s;
    for (const auto& n : GroupModel::kind_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  o.add("n", "0", "dimension where the kind allows a choice (0: kind default)");
  o.flag("full-domain", "use the full (two-sided) parameter domain for Diag2D / UpperTri2D");
}

void add_lattice_options(Options& o) {
  o.add("samples", "256", "points per axis for catalog signals and wavelets");
  o.add("half-width", "8", "catalog lattice is [-w, w) per axis");
}

void add_grid_options(Options& o) {
  o.add("scale-range", "0.25,8", "scale window a_min,a_max");
  o.add("scales", "32", "scale nodes");
  o.add("angles", "16", "rotation nodes");
  o.add("shear-range", "-8,8", "shear window");
  o.add("shears", "64", "shear nodes");
  o.add("modulation-range", "-6,6", "modulation window per axis");
  o.add("modulations", "24", "modulation nodes per axis");
  o.add("pad", "2", "translation lattice padding factor");
}

GroupModel load_group(const Options& o) {
  if (!o.has("group")) throw ConfigError("--group is required");
  return GroupModel::parse(o.str("group"), o.count("n"), o.on("full-domain"));
}

Lattice catalog_lattice(const Options& o, std::size_t dim) {
  return Lattice::centered(dim, o.count("samples"), o.real("half-width"));
}

bool is_catalog(const std::string& spec) { return spec.rfind("catalog:", 0) == 0; }

SampledSignal load_signal_spec(const std::string& spec, const Lattice& lattice) {
  if (is_catalog(spec)) return catalog(spec.substr(8), lattice);
  if (!fs::exists(spec)) throw ConfigError("signal file '" + spec + "' does not exist");
  return load_signal(spec);
}

SignalModel load_model_spec(const std::string& spec, std::size_t dim) {
  if (is_catalog(spec)) {
    SignalModel m = catalog_model(spec.substr(8), dim);
    if (m.dim != dim) throw ConfigError("catalog entry '" + spec + "' is not " + std::to_string(dim) + "-dimensional");
    return m;
  }
  if (!fs::exists(spec)) throw ConfigError("signal file '" + spec + "' does not exist");
  return model_from_samples(load_signal(spec), spec);
}

Wavelet load_wavelet_spec(const std::string& spec, const Lattice& lattice) {
  if (is_catalog(spec)) {
    SignalModel m = catalog_model(spec.substr(8), lattice.dim());
    if (m.dim != lattice.dim()) throw ConfigError("wavelet '" + spec + "' does not match the signal dimension");
    return make_wavelet(m, lattice);
  }
  if (!fs::exists(spec)) throw ConfigError("wavelet file '" + spec + "' does not exist");
  SampledSignal s = load_signal(spec);
  if (!(s.lattice() == lattice)) throw LatticeMismatch("wavelet file lattice differs from the signal lattice");
  return wavelet_from_samples(std::move(s), spec);
}

std::string wavelet_spec(const Options& o, const GroupModel& m, const std::string& name = "wavelet") {
  return o.has(name) ? o.str(name) : "catalog:" + concentration_setup(m).wavelet;
}

std::pair<WindowSpec, GridSpec> load_grid(const Options& o) {
  WindowSpec w;
  GridSpec r;
  const auto pair = [&](const std::string& name) {
    const auto v = o.reals(name, 2);
    return std::pair{v[0], v[1]};
  };
  w.scale = pair("scale-range");
  w.shear = pair("shear-range");
  w.modulation = pair("modulation-range");
  r.scales = o.count("scales");
  r.angles = o.count("angles");
  r.shears = o.count("shears");
  r.modulations = o.count("modulations");
  return {w, r};
}

std::pair<double, double> load_band(const Options& o) {
  const auto v = o.reals("band", 2);
  return {v[0], v[1]};
}

// ---------------------------------------------------------------------------
// Output.

struct Output {
  fs::path dir;
  std::vector<std::string> written;

  void json(const std::string& name, const ordered_json& j) {
    std::ofstream out(dir / name);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    out << j.dump(2) << '\n';
    written.push_back(name);
  }
  std::ofstream csv(const std::string& name) {
    std::ofstream out(dir / name);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    out.precision(17);
    written.push_back(name);
    return out;
  }
};

Output open_output(const Options& o) {
  Output out{o.str("out"), {}};
  std::error_code ec;
  fs::create_directories(out.dir, ec);
  if (ec) throw IoError("cannot create output directory " + out.dir.string() + ": " + ec.message());
  return out;
}

void write_meta(Output& out, const std::string& command, int code, double seconds) {
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  ordered_json j;
  j["command"] = command;
  j["timestamp"] = stamp;
  j["seconds"] = seconds;
  j["threads"] = thread_count();
  j["exit_code"] = code;
  j["files"] = out.written;
  std::ofstream f(out.dir / "meta.json");
  f << j.dump(2) << '\n';
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json admissibility_json(const AdmissibilityReport& r) {
  ordered_json j;
  j["group"] = r.group;
  j["wavelet"] = r.wavelet_id;
  j["formula"] = r.formula_id;
  j["constant"] = r.constant;
  j["wavelet_norm_sq"] = r.wavelet_norm_sq;
  j["rel_variation"] = r.rel_variation;
  j["tolerance"] = r.tolerance;
  j["admissible"] = r.admissible;
  j["diverged"] = r.diverged;
  j["subspace"] = r.subspace;
  j["reason"] = r.reason;
  j["probes"] = r.per_freq.size();
  return j;
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit code.

int cmd_admissible(const Options& o, Output& out) {
  const GroupModel m = load_group(o);
  const Lattice l = catalog_lattice(o, m.dim_base());
  const Wavelet psi = load_wavelet_spec(wavelet_spec(o, m), l);
  const auto probes = default_probes(m, o.count("probes"));
  const AdmissibilityReport r = admissibility_constant(psi, m, probes);
  out.json("admissible.json", admissibility_json(r));
  std::ofstream csv = out.csv("admissible.csv");
  for (std::size_t a = 0; a < m.dim_base(); ++a) csv << "omega_" << a + 1 << ',';
  csv << "value\n";
  for (const FreqSample& s : r.per_freq) {
    for (double w : s.omega) csv << w << ',';
    csv << s.value << '\n';
  }
  std::cout << m.name() << " " << r.wavelet_id << ": C = " << r.constant << ", rel_variation = " << r.rel_variation
            << (r.admissible ? " (admissible)" : " (not admissible: " + r.reason + ")") << '\n';
  if (r.diverged) return kNumerical;
  return r.admissible ? kPass : kViolation;
}

SampledSignal signal_for(const Options& o, const GroupModel& m) {
  if (!o.has("signal")) throw ConfigError("--signal is required");
  return load_signal_spec(o.str("signal"), catalog_lattice(o, m.dim_base()));
}

int cmd_transform(const Options& o, Output& out) {
  const GroupModel m = load_group(o);
  const SampledSignal f = signal_for(o, m);
  if (f.lattice().dim() != m.dim_base()) throw ConfigError("signal dimension does not match the group");
  const Wavelet psi = load_wavelet_spec(wavelet_spec(o, m), f.lattice());
  const AdmissibilityReport adm = admissibility_constant(psi, m);
  if (adm.diverged) throw NumericalFailure("admissibility integral diverges: " + adm.reason);
  const auto [window, res] = load_grid(o);
  const HaarGrid grid = transform_grid(m, window, res, f.lattice(), o.count("pad"));
  const CoefficientField field = forward(f, psi, grid, adm);
  save_field(field, out.dir / "field.json");
  out.written.push_back("field.json");
  out.written.push_back("field.c128");

  ordered_json j;
  j["group"] = m.name();
  j["wavelet"] = psi.id();
  j["signal"] = o.str("signal");
  j["constant"] = adm.constant;
  j["b_nodes"] = grid.b_count();
  j["translations"] = grid.translation_count();
  j["nodes"] = grid.size();
  j["signal_norm"] = field.signal_norm;
  j["transform_energy"] = field.energy();
  j["energy_ratio"] = field.energy() / (adm.constant * field.signal_norm * field.signal_norm);
  out.json("transform.json", j);

  std::ofstream csv = out.csv("transform.csv");
  for (std::size_t k = 0; k < m.b_dim(); ++k) csv << "b_" << k + 1 << ',';
  csv << "weight,edge,row_energy\n";
  const std::size_t T = grid.translation_count();
  for (std::size_t p = 0; p < grid.b_count(); ++p) {
    double e = 0.0;
    for (std::size_t t = 0; t < T; ++t) e += std::norm(field.values[p * T + t]);
    for (double b : grid.b_nodes[p]) csv << b << ',';
    csv << grid.b_weights[p] << ',' << (grid.b_boundary[p] ? 1 : 0) << ',' << e * grid.translations.cell_volume()
        << '\n';
  }
  std::cout << "W f on " << grid.size() << " nodes, energy ratio " << j["energy_ratio"].get<double>() << '\n';
  return kPass;
}

double relative_error(const SampledSignal& a, const SampledSignal& b) {
  const double nb = norm(b);
  return nb > 0.0 ? norm(a - b) / nb : norm(a);
}

int cmd_reconstruct(const Options& o, Output& out) {
  ordered_json j;
  SampledSignal rec;
  std::optional<SampledSignal> original;
  bool pass = true;
  const double tol = o.real("tol");

  if (o.has("field")) {
    const CoefficientField field = load_field(o.str("field"));
    const GroupModel& m = field.grid.model;
    const Wavelet psi2 = load_wavelet_spec(o.has("wavelet2") ? o.str("wavelet2") : wavelet_spec(o, m), field.signal_lattice);
    const Wavelet psi1 = load_wavelet_spec(wavelet_spec(o, m), field.signal_lattice);
    const PairReport pair = pair_constant(psi1, psi2, m);
    rec = reconstruct(field, psi2, pair);
    j["group"] = m.name();
    j["source"] = o.str("field");
    j["cross_constant"] = complex_json(pair.cross_constant);
    if (o.has("signal")) original = load_signal_spec(o.str("signal"), field.signal_lattice);
  } else {
    const GroupModel m = load_group(o);
    const SampledSignal f = signal_for(o, m);
    const Wavelet psi1 = load_wavelet_spec(wavelet_spec(o, m), f.lattice());
    const Wavelet psi2 = load_wavelet_spec(o.has("wavelet2") ? o.str("wavelet2") : wavelet_spec(o, m), f.lattice());
    const PairReport pair = pair_constant(psi1, psi2, m);
    if (!pair.is_admissible_pair) throw NotAdmissiblePair("wavelets are not an admissible pair: " + pair.reason);
    auto [window, res] = load_grid(o);
    j["group"] = m.name();
    j["source"] = o.str("signal");
    j["cross_constant"] = complex_json(pair.cross_constant);
    original = f;
    if (o.has("band")) {
      const auto [a1, a2] = load_band(o);
      rec = truncated_reconstruct(f, psi1, psi2, a1, a2, m, pair.cross_constant, res, o.count("pad"));
      const SampledSignal mult = multiplier_reconstruct(f, psi1, psi2, a1, a2, m, pair.cross_constant);
      const double agree = relative_error(rec, mult);
      j["band"] = {a1, a2};
      j["multiplier_rel_diff"] = agree;
      j["multiplier_tol"] = 2e-2;
      pass = agree <= 2e-2;
      save_signal(mult, out.dir / "multiplier.json");
      out.written.push_back("multiplier.json");
    } else {
      rec = analyse_synthesise(f, psi1, psi2, transform_grid(m, window, res, f.lattice(), o.count("pad")),
                               pair.cross_constant);
    }
  }
  if (original) {
    const double err = relative_error(rec, *original);
    j["rel_error"] = err;
    if (!j.contains("band")) {
      j["tol"] = tol;
      pass = pass && err <= tol;
    }
  }
  j["pass"] = pass;
  save_signal(rec, out.dir / "reconstruction.json");
  out.written.push_back("reconstruction.json");
  out.written.push_back("reconstruction.c128");
  if (rec.lattice().dim() == 1) {
    write_signal_csv(rec, out.dir / "reconstruction.csv");
    out.written.push_back("reconstruction.csv");
  }
  out.json("reconstruct.json", j);
  std::cout << "reconstruction" << (j.contains("rel_error") ? ", rel error " + std::to_string(j["rel_error"].get<double>()) : "")
            << (pass ? "" : " (FAILED)") << '\n';
  return pass ? kPass : kViolation;
}

int cmd_hap(const Options& o, Output& out) {
  const GroupModel m = load_group(o);
  if (!o.has("signal")) throw ConfigError("--signal is required");
  const Lattice l = catalog_lattice(o, m.dim_base());
  const SignalModel f = load_model_spec(o.str("signal"), m.dim_base());
  const Wavelet psi1 = load_wavelet_spec(wavelet_spec(o, m), l);
  const Wavelet psi2 = load_wavelet_spec(o.has("wavelet2") ? o.str("wavelet2") : wavelet_spec(o, m), l);
  const PairReport pair = pair_constant(psi1, psi2, m);
  if (!pair.is_admissible_pair) throw NotAdmissiblePair("wavelets are not an admissible pair: " + pair.reason);
  const auto [a1, a2] = load_band(o);
  GroupPoint g;
  g.params = o.has("element") ? o.reals("element") : m.identity().params;
  m.check(g);
  const double p = o.real("p");
  const double err = hap_error(f, l, psi1, psi2, g, a1, a2, m, pair.cross_constant);
  const double bound = hap_bound(f, l, psi1, psi2, a1, a2, p, m, pair.cross_constant);
  const double peak = sup_norm(f.sample(l));
  const double slack = o.real("slack");
  const double scale = m.b_part(g).empty() ? 1.0 : m.b_part(g)[0];
  const bool in_scope = scale >= p;
  const bool pass = !in_scope || err <= bound + slack * peak;

  ordered_json j;
  j["group"] = m.name();
  j["signal"] = o.str("signal");
  j["element"] = g.params;
  j["band"] = {a1, a2};
  j["p"] = p;
  j["hap_error"] = err;
  j["hap_bound"] = bound;
  j["signal_sup"] = peak;
  j["slack"] = slack * peak;
  j["bound_applies"] = in_scope;
  j["pass"] = pass;
  out.json("hap.json", j);
  std::ofstream csv = out.csv("hap.csv");
  csv << "a1,a2,hap_error,hap_bound,signal_sup\n" << a1 << ',' << a2 << ',' << err << ',' << bound << ',' << peak << '\n';
  std::cout << "HAP error " << err << ", bound " << bound << (pass ? "" : " (FAILED)") << '\n';
  return pass ? kPass : kViolation;
}

int cmd_finite(const Options& o, Output& out) {
  const FiniteRep rep(o.integer("n"), o.count("samples"));
  const std::size_t L = rep.field_order();
  const auto vec = [&](const std::string& name) {
    const auto parts = o.list(name);
    if (parts.size() != 2) throw ConfigError("--" + name + " expects two comma-separated Gaussian rationals");
    return ExactVector{parse_gaussian_rational(parts[0], L), parse_gaussian_rational(parts[1], L)};
  };
  const ExactVector xi = vec("xi"), eta = vec("eta");
  const FiniteTransform w = finite_transform(xi, eta, rep);
  const Rational frac = support_fraction(w);
  const bool relations = rep.relations_hold(), unitary = rep.unitary();
  const std::size_t hom = rep.homomorphism_failures();
  const bool pass = relations && unitary && hom == 0 && frac <= Rational(1);

  std::ostringstream fs_;
  fs_ << frac;
  ordered_json j;
  j["n"] = rep.n();
  j["t_samples"] = rep.t_samples();
  j["xi"] = o.list("xi");
  j["eta"] = o.list("eta");
  j["relations_hold"] = relations;
  j["unitary"] = unitary;
  j["unitarity_error"] = rep.unitarity_error();
  j["homomorphism_pairs"] = kD3Order * kD3Order;
  j["homomorphism_failures"] = hom;
  j["support_fraction"] = fs_.str();
  j["support_fraction_value"] = boost::rational_cast<double>(frac);
  ordered_json per_u = ordered_json::object();
  for (std::size_t u = 0; u < kD3Order; ++u) {
    std::size_t nz = 0;
    for (std::size_t k = 0; k < w.t_samples; ++k) nz += w.at(k, u).is_zero() ? 0 : 1;
    per_u[d3_name(u)] = nz;
  }
  j["nonzero_t_samples"] = per_u;
  j["pass"] = pass;
  out.json("finite.json", j);

  std::ofstream csv = out.csv("finite.csv");
  csv << "k,t,element,re,im,nonzero,exact\n";
  std::cout << "    k |";
  for (std::size_t u = 0; u < kD3Order; ++u) std::cout << ' ' << std::setw(6) << d3_name(u);
  std::cout << '\n';
  for (std::size_t k = 0; k < w.t_samples; ++k) {
    std::cout << std::setw(5) << k << " |";
    for (std::size_t u = 0; u < kD3Order; ++u) {
      const Cyclotomic& v = w.at(k, u);
      const Complex z = v.value();
      csv << k << ',' << kTwoPi * static_cast<double>(k) / static_cast<double>(w.t_samples) << ',' << d3_name(u) << ','
          << z.real() << ',' << z.imag() << ',' << (v.is_zero() ? 0 : 1) << ",\"" << v.str() << "\"\n";
      std::cout << ' ' << std::setw(6) << (v.is_zero() ? "0" : "*");
    }
    std::cout << '\n';
  }
  std::cout << "support fraction " << frac << ", homomorphism failures " << hom << '/'
            << kD3Order * kD3Order * w.t_samples * w.t_samples << '\n';
  return pass ? kPass : kViolation;
}

int cmd_verify(const Options& o, Output& out) {
  SuiteOptions opt;
  opt.seed = static_cast<std::uint64_t>(o.integer("seed"));
  opt.trials = o.count("trials");
  if (opt.trials == 0) throw ConfigError("--trials must be at least 1");
  const std::vector<Certificate> certs = run_suite(o.str("suite"), opt);

  ordered_json arr = ordered_json::array();
  for (const Certificate& c : certs) {
    ordered_json j;
    j["suite"] = c.suite;
    j["group"] = c.group;
    j["wavelet"] = c.wavelet;
    j["signal"] = c.signal;
    j["trial"] = c.trial;
    j["pass"] = c.pass;
    ordered_json v = ordered_json::object();
    for (const auto& [k, x] : c.values) v[k] = x;
    j["values"] = v;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(j);
  }
  out.json("verify.json", arr);

  // Summary: one row per (suite, group).
  struct Row {
    std::size_t trials = 0, passed = 0;
  };
  std::vector<std::pair<std::string, Row>> rows;
  for (const Certificate& c : certs) {
    const std::string key = c.suite + "," + c.group;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.first == key; });
    if (it == rows.end()) it = rows.insert(rows.end(), {key, Row{}});
    ++it->second.trials;
    it->second.passed += c.pass ? 1 : 0;
  }
  std::ofstream csv = out.csv("verify.csv");
  csv << "suite,group,trials,passed,failed\n";
  std::size_t failed = 0;
  for (const auto& [key, r] : rows) {
    csv << key << ',' << r.trials << ',' << r.passed << ',' << r.trials - r.passed << '\n';
    std::cout << key << ": " << r.passed << '/' << r.trials << " passed\n";
    failed += r.trials - r.passed;
  }
  return failed == 0 ? kPass : kViolation;
}

void check_threads_env() {
  if (const char* env = std::getenv("GCWT_THREADS")) {
    const std::string s = env;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != s.size() || v <= 0) throw ConfigError("GCWT_THREADS must be a positive integer, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcwt: continuous wavelet transforms on concrete groups"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "INI configuration file ([general] and per-subcommand sections)");

  struct Command {
    CLI::App* app;
    std::unique_ptr<Options> opts;
    int (*run)(const Options&, Output&);
  };
  std::vector<Command> commands;
  auto make = [&](const char* name, const char* help, int (*run)(const Options&, Output&)) -> Options& {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, std::make_unique<Options>(sub, name), run});
    Options& o = *commands.back().opts;
    o.add("out", "gcwt-out", "output directory");
    return o;
  };

  {
    Options& o = make("admissible", "admissibility constant and per-frequency samples", cmd_admissible);
    add_group_options(o);
    add_lattice_options(o);
    o.add("wavelet", "", "catalog:<name> or signal file (default: the group's standard wavelet)");
    o.add("probes", "32", "number of frequency probes");
  }
  {
    Options& o = make("transform", "forward transform on a Haar grid", cmd_transform);
    add_group_options(o);
    add_lattice_options(o);
    add_grid_options(o);
    o.add("wavelet", "", "analysing wavelet");
    o.add("signal", "", "catalog:<name> or signal file");
  }
  {
    Options& o = make("reconstruct", "reconstruction, optionally from a scale band", cmd_reconstruct);
    add_group_options(o);
    add_lattice_options(o);
    add_grid_options(o);
    o.add("wavelet", "", "analysing wavelet");
    o.add("wavelet2", "", "synthesis wavelet (default: the analysing wavelet)");
    o.add("signal", "", "catalog:<name> or signal file");
    o.add("field", "", "coefficient field written by 'transform' (replaces --signal as input)");
    o.add("band", "", "scale band A1,A2 for the truncated reconstruction");
    o.add("tol", "5e-2", "relative L2 error allowed for full reconstruction");
  }
  {
    Options& o = make("hap", "truncation error of pi(g) f against its tail bound", cmd_hap);
    add_group_options(o);
    add_lattice_options(o);
    o.add("wavelet", "", "analysing wavelet");
    o.add("wavelet2", "", "synthesis wavelet");
    o.add("signal", "", "catalog:<name> or signal file");
    o.add("band", "0.25,4", "relative band A1',A2'");
    o.add("element", "", "group element parameters (default: identity)");
    o.add("p", "0.5", "lower scale bound of the tail estimate");
    o.add("slack", "5e-3", "quadrature slack relative to sup |f|");
  }
  {
    Options& o = make("finite-check", "exact transform on T x D3", cmd_finite);
    o.add("n", "1", "character index on the torus");
    o.add("samples", "12", "torus samples N");
    o.add("xi", "1,0", "xi as two Gaussian rationals");
    o.add("eta", "1,0", "eta as two Gaussian rationals");
  }
  {
    Options& o = make("verify", "randomized inequality certificates", cmd_verify);
    o.add("suite", "all", "support, concentration, uncertainty, kernel or all");
    o.add("seed", "7", "random seed");
    o.add("trials", "50", "trials per group (per signal for uncertainty)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  for (Command& c : commands) {
    if (!c.app->parsed()) continue;
    int code = kPass;
    std::optional<Output> out;
    try {
      check_threads_env();
      boost::property_tree::ptree config;
      if (!config_path.empty()) {
        if (!fs::exists(config_path)) throw ConfigError("config file '" + config_path + "' does not exist");
        try {
          boost::property_tree::ini_parser::read_ini(config_path, config);
        } catch (const boost::property_tree::ini_parser_error& e) {
          throw ConfigError(std::string("bad config file: ") + e.what());
        }
      }
      c.opts->resolve(config);
      out = open_output(*c.opts);
      code = c.run(*c.opts, *out);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      code = kUsage;
    } catch (const IoError& e) {
      std::cerr << "io error: " << e.what() << '\n';
      code = kUsage;
    } catch (const UnknownSignal& e) {
      std::cerr << "config error: " << e.what() << '\n';
      code = kUsage;
    } catch (const LatticeMismatch& e) {
      std::cerr << "config error: " << e.what() << '\n';
      code = kUsage;
    } catch (const BadBand& e) {
      std::cerr << "config error: " << e.what() << '\n';
      code = kUsage;
    } catch (const DomainError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      code = kUsage;
    } catch (const NotAdmissible& e) {
      std::cerr << "invariant violated: " << e.what() << '\n';
      code = kViolation;
    } catch (const NotAdmissiblePair& e) {
      std::cerr << "invariant violated: " << e.what() << '\n';
      code = kViolation;
    } catch (const Error& e) {
      std::cerr << "numerical failure: " << e.what() << '\n';
      code = kNumerical;
    } catch (const std::bad_alloc&) {
      std::cerr << "numerical failure: out of memory\n";
      code = kNumerical;
    }
    if (out) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      write_meta(*out, c.app->get_name(), code, secs);
    }
    return code;
  }
  return kUsage;
}
