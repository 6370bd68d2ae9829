// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gcwt {

namespace {

std::mt19937_64 stream(const SuiteOptions& opt, std::uint64_t salt) {
  std::seed_seq seq{opt.seed, salt};
  return std::mt19937_64(seq);
}

// Translation by x (identity B-part, zero phase).
SignalModel translated(const SignalModel& f, const GroupModel& model, std::span<const double> x) {
  const GroupPoint id = model.identity();
  return act(model.assemble(model.b_part(id), x, 0.0), f, model);
}

std::vector<double> random_shift(std::mt19937_64& rng, std::size_t n, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

std::string shift_label(const std::string& name, std::span<const double> x) {
  std::string s = name + "@(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.4f", i ? "," : "", x[i]);
    s += buf;
  }
  return s + ")";
}

const std::vector<std::string>& eligible_for(GroupKind kind) {
  static const std::vector<std::string> affine = {"analytic_1d", "bandlimited_1d", "bump_1d", "chirp_1d",
                                                  "even_spectrum_1d"};
  static const std::vector<std::string> wh = catalog_names(1);
  static const std::vector<std::string> sim = [] {
    std::vector<std::string> v;
    for (const auto& n : catalog_names(2))
      if (n != "gaussian_2d") v.push_back(n);
    return v;
  }();
  static const std::vector<std::string> diag = {"quadrant_bandlimited_2d", "separable_bump_2d"};
  static const std::vector<std::string> tri = {"axis_avoiding_2d", "quadrant_bandlimited_2d", "separable_bump_2d",
                                               "strip_bandlimited_2d"};
  static const std::vector<std::string> g51 = catalog_names(2);
  switch (kind) {
    case GroupKind::Affine1D: return affine;
    case GroupKind::WeylHeisenberg: return wh;
    case GroupKind::Similitude: return sim;
    case GroupKind::Diag2D: return diag;
    case GroupKind::UpperTri2D:
    case GroupKind::Shear: return tri;
    case GroupKind::G51: return g51;
  }
  return wh;
}

Certificate start(std::string suite, std::string group, std::string wavelet, std::string signal, std::size_t trial) {
  Certificate c;
  c.suite = std::move(suite);
  c.group = std::move(group);
  c.wavelet = std::move(wavelet);
  c.signal = std::move(signal);
  c.trial = trial;
  return c;
}

}  // namespace

double Certificate::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  throw DomainError("certificate has no value '" + key + "'");
}

std::vector<GroupModel> suite_groups() {
  return {GroupModel::affine_1d(), GroupModel::weyl_heisenberg(1), GroupModel::similitude(), GroupModel::diag_2d(),
          GroupModel::upper_tri_2d(), GroupModel::shear(), GroupModel::g51()};
}

GroupSetup concentration_setup(const GroupModel& model) {
  GroupSetup s;
  s.model = model;
  s.eligible = eligible_for(model.kind());
  if (model.dim_base() == 1) {
    s.lattice = Lattice::centered(1, 512, 16.0);
    s.pad = 2;
  } else {
    s.lattice = Lattice::centered(2, 64, 4.0);
    s.pad = 1;
  }
  switch (model.kind()) {
    case GroupKind::Affine1D:
      s.wavelet = "bump_1d";
      s.window.scale = {1.0 / 16.0, 64.0};
      s.resolution.scales = 64;
      break;
    case GroupKind::WeylHeisenberg: s.wavelet = "gaussian"; break;
    case GroupKind::Similitude: s.wavelet = "radial_bandlimited_2d"; break;
    case GroupKind::Diag2D: s.wavelet = "quadrant_bandlimited_2d"; break;
    case GroupKind::UpperTri2D: s.wavelet = "axis_avoiding_2d"; break;
    case GroupKind::Shear: s.wavelet = "strip_bandlimited_2d"; break;
    case GroupKind::G51: s.wavelet = "gaussian_2d"; break;
  }
  return s;
}

std::vector<Certificate> support_suite(const SuiteOptions& opt) {
  const std::vector<double> extents = {1.0, 2.0, 4.0, 8.0};
  std::vector<Certificate> out;
  for (const GroupModel& m : {GroupModel::affine_1d(), GroupModel::similitude()}) {
    const std::size_t n = m.dim_base();
    const Lattice l = n == 1 ? Lattice::centered(1, 256, 8.0) : Lattice::centered(2, 64, 4.0);
    const std::string wname = n == 1 ? "bump_1d" : "radial_bandlimited_2d";
    const Wavelet psi = make_wavelet(wname, l);
    const HaarGrid grid = transform_grid(m, {}, {}, l);
    const std::vector<std::string> names = catalog_names(n);
    std::mt19937_64 rng = stream(opt, 100 + static_cast<std::uint64_t>(m.kind()));
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      const std::string& name = names[trial % names.size()];
      const std::vector<double> x = random_shift(rng, n, 0.5);
      const SampledSignal f = translated(catalog_model(name, n), m, x).sample(l);
      const SupportProfile s = support_growth(f, psi, grid, extents);
      Certificate c = start("support", m.name(), wname, shift_label(name, x), trial);
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < extents.size(); ++i) {
        c.values.emplace_back("support_" + std::to_string(i), s.support_measure[i]);
        if (i > 0) {
          const double g = s.support_measure[i - 1] > 0.0 ? s.support_measure[i] / s.support_measure[i - 1] : 0.0;
          c.values.emplace_back("growth_" + std::to_string(i), g);
          worst = std::min(worst, g);
        }
      }
      c.values.emplace_back("min_growth", worst);
      c.pass = worst >= opt.growth_min;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Certificate> concentration_suite(const SuiteOptions& opt) {
  std::vector<Certificate> out;
  for (const GroupModel& m : suite_groups()) {
    const GroupSetup s = concentration_setup(m);
    const Wavelet psi = make_wavelet(s.wavelet, s.lattice);
    const double C = admissibility_constant(psi, m).constant;
    const double psi_norm = norm(psi.samples);
    const double budget = 0.5 * std::sqrt(C) / psi_norm;
    const HaarGrid grid = transform_grid(m, s.window, s.resolution, s.lattice, s.pad);
    const std::size_t n = m.dim_base();
    std::mt19937_64 rng = stream(opt, 200 + static_cast<std::uint64_t>(m.kind()));
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<std::size_t> pick(0, s.eligible.size() - 1);
    std::size_t trial = 0;
    while (trial < opt.trials) {
      const std::string& a = s.eligible[pick(rng)];
      const std::string& b = s.eligible[pick(rng)];
      const std::vector<double> xa = random_shift(rng, n, 0.5), xb = random_shift(rng, n, 0.5);
      const Complex ca{gauss(rng), gauss(rng)}, cb{gauss(rng), gauss(rng)};
      const SignalModel f = combine({{ca, translated(catalog_model(a, n), m, xa)},
                                     {cb, translated(catalog_model(b, n), m, xb)}},
                                    "mix");
      const CoefficientField field = forward(f.sample(s.lattice), psi, grid);
      const std::string label = shift_label(a, xa) + "+" + shift_label(b, xb);
      for (std::size_t k = 0; k < opt.sets_per_signal && trial < opt.trials; ++k, ++trial) {
        const std::vector<std::size_t> M = random_node_set(grid, budget, rng);
        const ConcentrationCertificate cc = concentration(field, M, C, psi_norm);
        Certificate c = start("concentration", m.name(), s.wavelet, label, trial);
        const double scale = std::sqrt(C) * cc.signal_norm;
        c.values = {{"set_measure", cc.set_measure}, {"measure_limit", cc.measure_limit},
                    {"set_size", static_cast<double>(M.size())}, {"lhs", cc.lhs},
                    {"rhs", cc.rhs}, {"margin", cc.margin},
                    {"relative_margin", cc.margin / scale}, {"energy_ratio", std::pow(cc.transform_norm / scale, 2)}};
        c.pass = cc.applicable && cc.margin >= -opt.concentration_tol * scale;
        if (!cc.applicable) c.note = "measure above the applicability limit";
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<Certificate> kernel_suite(const SuiteOptions& opt) {
  std::vector<Certificate> out;
  for (const GroupModel& m : suite_groups()) {
    const GroupSetup s = concentration_setup(m);
    const Wavelet psi = make_wavelet(s.wavelet, s.lattice);
    const double C = admissibility_constant(psi, m).constant;
    const double budget = 0.5 * std::sqrt(C) / norm(psi.samples);
    const HaarGrid grid = transform_grid(m, s.window, s.resolution, s.lattice, s.pad);
    const KernelTable table = kernel_table(psi, grid, C);
    const std::vector<bool> inside = table.interior();
    const auto interior_count = static_cast<double>(std::count(inside.begin(), inside.end(), true));
    std::mt19937_64 rng = stream(opt, 300 + static_cast<std::uint64_t>(m.kind()));
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      Certificate c = start("kernel", m.name(), s.wavelet, "", trial);
      std::vector<std::size_t> M;
      for (int attempt = 0; attempt < 16 && M.empty() && interior_count > 0; ++attempt)
        M = random_node_set(grid, budget, rng, &inside);
      if (M.empty()) {
        c.note = "no interior node fits the measure budget";
        out.push_back(std::move(c));
        continue;
      }
      const KernelReport r = kernel_projection_norm(table, grid, M);
      c.values = {{"set_measure", r.set_measure}, {"set_size", static_cast<double>(M.size())},
                  {"hs_norm_sq", r.hs_norm_sq}, {"expected", r.expected}, {"rel_error", r.rel_error},
                  {"interior_b_nodes", interior_count}};
      c.pass = r.rel_error <= opt.kernel_tol;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Certificate> uncertainty_suite(const SuiteOptions& opt) {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice l = Lattice::centered(1, 512, 16.0);
  const std::string wname = "mexican_hat_1d";
  const Wavelet psi = make_wavelet(wname, l);
  const double C = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {}, l);
  std::mt19937_64 rng = stream(opt, 400);
  std::uniform_real_distribution<double> log_a(std::log(0.5), std::log(2.0)), shift(-2.0, 2.0);
  std::vector<Certificate> out;
  for (const std::string& name : catalog_names(1)) {
    const SignalModel base = catalog_model(name, 1);
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      const double a = std::exp(log_a(rng)), t = shift(rng);
      char label[96];
      std::snprintf(label, sizeof label, "%s(a=%.4f,t=%.4f)", name.c_str(), a, t);
      Certificate c = start("uncertainty", m.name(), wname, label, trial);
      const SampledSignal f = act(GroupPoint{{a, t}}, base, m).sample(l);
      try {
        const UncertaintyCertificate u = uncertainty(f, psi, grid, C);
        c.values = {{"time_dispersion", u.time_dispersion}, {"freq_dispersion", u.freq_dispersion},
                    {"product", u.product}, {"bound", u.bound}, {"ratio", u.ratio},
                    {"outer_fraction", u.outer_fraction}};
        c.pass = u.ratio >= opt.heisenberg_min;
      } catch (const WindowTooSmall& e) {
        c.note = e.what();
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<std::string> suite_names() { return {"support", "concentration", "uncertainty", "kernel"}; }

std::vector<Certificate> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "support") return support_suite(opt);
  if (name == "concentration") return concentration_suite(opt);
  if (name == "uncertainty") return uncertainty_suite(opt);
  if (name == "kernel") return kernel_suite(opt);
  if (name == "all") {
    std::vector<Certificate> all;
    for (const std::string& s : suite_names()) {
      std::vector<Certificate> part = run_suite(s, opt);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw ConfigError("unknown suite '" + name + "' (support, concentration, uncertainty, kernel, all)");
}

}  // namespace gcwt
