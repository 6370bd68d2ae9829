// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "gcwt/parallel.hpp"

namespace gcwt {

namespace {

double max_abs_coord(const Lattice& l, std::size_t flat, std::vector<double>& x) {
  l.point(flat, x);
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SupportProfile support_growth(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid,
                              const std::vector<double>& extents, double threshold) {
  if (extents.empty()) throw DomainError("support_growth needs at least one window");
  for (std::size_t i = 0; i < extents.size(); ++i)
    if (!(extents[i] > 0.0) || (i > 0 && !(extents[i] > extents[i - 1])))
      throw DomainError("window extents must be positive and increasing");

  const Lattice& tl = grid.translations;
  const std::size_t T = tl.size();
  // Smallest window holding each translation (extents.size() if none).
  std::vector<std::size_t> level(T);
  std::vector<double> x(tl.dim());
  for (std::size_t m = 0; m < T; ++m) {
    const double r = max_abs_coord(tl, m, x);
    level[m] = static_cast<std::size_t>(std::upper_bound(extents.begin(), extents.end(), r) - extents.begin());
  }

  // Magnitudes inside the largest window, per B-node.
  std::vector<std::size_t> kept;
  for (std::size_t m = 0; m < T; ++m)
    if (level[m] < extents.size()) kept.push_back(m);
  std::vector<double> mags(grid.b_count() * kept.size());
  forward_rows(f, psi, grid, [&](std::size_t p, std::span<const Complex> row) {
    for (std::size_t j = 0; j < kept.size(); ++j) mags[p * kept.size() + j] = std::abs(row[kept[j]]);
  });

  SupportProfile out;
  out.extents = extents;
  out.threshold = threshold;
  for (double v : mags) out.max_abs = std::max(out.max_abs, v);
  const double cut = threshold * out.max_abs;
  const double cell = tl.cell_volume();
  std::vector<double> support(extents.size(), 0.0), window(extents.size(), 0.0);
  for (std::size_t p = 0; p < grid.b_count(); ++p)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const double w = grid.b_weights[p] * cell;
      const std::size_t lv = level[kept[j]];
      window[lv] += w;
      if (out.max_abs > 0.0 && mags[p * kept.size() + j] > cut) support[lv] += w;
    }
  // Nested windows: accumulate from the innermost shell outward.
  for (std::size_t i = 1; i < extents.size(); ++i) {
    support[i] += support[i - 1];
    window[i] += window[i - 1];
  }
  out.support_measure = std::move(support);
  out.window_measure = std::move(window);
  return out;
}

ConcentrationCertificate concentration(const CoefficientField& field, std::span<const std::size_t> M,
                                       double constant, double psi_norm) {
  if (!(constant > 0.0)) throw NotAdmissible("concentration needs a positive admissibility constant");
  const HaarGrid& grid = field.grid;
  ConcentrationCertificate c;
  std::set<std::size_t> unique(M.begin(), M.end());
  for (std::size_t i : unique) {
    if (i >= grid.size()) throw DomainError("node index outside the grid");
    c.set_measure += grid.weight(i);
  }
  double rest = 0.0;
  auto next = unique.begin();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (next != unique.end() && *next == i) {
      ++next;
      continue;
    }
    rest += grid.weight(i) * std::norm(field.values[i]);
  }
  c.signal_norm = field.signal_norm;
  c.transform_norm = std::sqrt(field.energy());
  c.measure_limit = std::sqrt(constant) / psi_norm;
  c.applicable = c.set_measure <= c.measure_limit;
  c.lhs = std::sqrt(rest);
  c.rhs = (std::sqrt(constant) - psi_norm * std::sqrt(c.set_measure)) * field.signal_norm;
  c.margin = c.lhs - c.rhs;
  return c;
}

std::vector<std::size_t> random_node_set(const HaarGrid& grid, double budget, std::mt19937_64& rng,
                                         const std::vector<bool>* allowed) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double target = budget * (1.0 - unit(rng));
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  const std::size_t T = grid.translation_count();
  std::set<std::size_t> chosen;
  double measure = 0.0;
  std::size_t misses = 0;
  while (misses < 64 && chosen.size() < grid.size()) {
    const std::size_t i = pick(rng);
    const double w = grid.weight(i);
    if (chosen.count(i) || (allowed && !(*allowed)[i / T]) || measure + w > target) {
      ++misses;
      continue;
    }
    misses = 0;
    chosen.insert(i);
    measure += w;
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<bool> KernelTable::interior(double resolve_tol, double edge_tol) const {
  std::vector<bool> out(resolved.size());
  for (std::size_t p = 0; p < out.size(); ++p)
    out[p] = std::abs(resolved[p] - 1.0) <= resolve_tol && edge_fraction[p] <= edge_tol;
  return out;
}

KernelTable kernel_table(const Wavelet& psi, const HaarGrid& grid, double constant) {
  if (!(constant > 0.0)) throw NotAdmissible("kernel needs a positive admissibility constant");
  const Lattice freq = frequency_lattice(grid.translations, 1);
  std::vector<std::size_t> all(freq.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const FrameSymbol q = frame_symbol(psi, psi, grid, freq, all);
  const double dv = freq.cell_volume();

  KernelTable t;
  t.constant = constant;
  t.psi_norm_sq = std::pow(norm(psi.samples), 2);
  t.row_norm_sq.resize(grid.b_count());
  t.resolved.resize(grid.b_count());
  t.edge_fraction.resize(grid.b_count());
  // ||k(g, .)||^2 = C^{-2} ||W(pi(g) psi)||^2 = C^{-2} sum_k |Psi_p|^2 Q dw.
  parallel_chunks(grid.b_count(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const std::vector<Complex> Psi = node_spectrum(psi, grid.model, grid.b_nodes[p], freq);
      double mass = 0.0, row = 0.0, edge = 0.0;
      for (std::size_t k = 0; k < Psi.size(); ++k) {
        const double e = std::norm(Psi[k]);
        mass += e;
        row += e * q.values[k].real();
        edge += e * q.boundary[k].real();
      }
      t.resolved[p] = mass * dv / t.psi_norm_sq;
      t.row_norm_sq[p] = row * dv / (constant * constant);
      t.edge_fraction[p] = row > 0.0 ? edge / row : 0.0;
    }
  });
  return t;
}

KernelReport kernel_projection_norm(const KernelTable& table, const HaarGrid& grid, std::span<const std::size_t> M) {
  KernelReport r;
  const std::size_t T = grid.translation_count();
  for (std::size_t i : std::set<std::size_t>(M.begin(), M.end())) {
    if (i >= grid.size()) throw DomainError("node index outside the grid");
    r.set_measure += grid.weight(i);
    r.hs_norm_sq += grid.weight(i) * table.row_norm_sq[i / T];
  }
  r.expected = table.psi_norm_sq * r.set_measure / table.constant;
  r.rel_error = r.expected > 0.0 ? std::abs(r.hs_norm_sq - r.expected) / r.expected : std::abs(r.hs_norm_sq);
  return r;
}

KernelReport kernel_projection_norm(const Wavelet& psi, std::span<const std::size_t> M, const HaarGrid& grid,
                                    double constant) {
  return kernel_projection_norm(kernel_table(psi, grid, constant), grid, M);
}

UncertaintyCertificate uncertainty(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid, double constant,
                                   double max_outer) {
  if (!(constant > 0.0)) throw NotAdmissible("uncertainty needs a positive admissibility constant");
  const Lattice& tl = grid.translations;
  const std::size_t T = tl.size();
  std::vector<double> r2(T);
  std::vector<bool> outer(T);
  std::vector<double> x(tl.dim());
  for (std::size_t m = 0; m < T; ++m) {
    double half = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < tl.dim(); ++a)
      half = std::min(half, 0.25 * static_cast<double>(tl.shape[a]) * tl.spacing[a]);
    outer[m] = max_abs_coord(tl, m, x) >= half;
    double s = 0.0;
    for (double v : x) s += v * v;
    r2[m] = s;
  }
  std::vector<double> inner_part(grid.b_count()), outer_part(grid.b_count());
  forward_rows(f, psi, grid, [&](std::size_t p, std::span<const Complex> row) {
    double in = 0.0, out = 0.0;
    for (std::size_t m = 0; m < T; ++m) (outer[m] ? out : in) += r2[m] * std::norm(row[m]);
    inner_part[p] = in;
    outer_part[p] = out;
  });
  double in = 0.0, out = 0.0;
  for (std::size_t p = 0; p < grid.b_count(); ++p) {
    in += grid.b_weights[p] * inner_part[p];
    out += grid.b_weights[p] * outer_part[p];
  }
  const double cell = tl.cell_volume();

  UncertaintyCertificate c;
  c.time_dispersion = std::sqrt((in + out) * cell);
  c.outer_fraction = in + out > 0.0 ? out / (in + out) : 0.0;
  const Spectrum F = fourier(f, 2);
  std::vector<double> w(F.freq.dim());
  double fd = 0.0;
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    F.freq.point(k, w);
    double s = 0.0;
    for (double v : w) s += v * v;
    fd += kTwoPi * kTwoPi * s * std::norm(F.values[k]);
  }
  c.freq_dispersion = std::sqrt(fd * F.freq.cell_volume());
  c.product = c.time_dispersion * c.freq_dispersion;
  c.bound = 0.5 * std::sqrt(constant) * std::pow(norm(f), 2);
  c.ratio = c.bound > 0.0 ? c.product / c.bound : 1.0;
  c.margin = c.product - c.bound;
  if (c.outer_fraction > max_outer)
    throw WindowTooSmall("translation window misses " + std::to_string(c.outer_fraction) +
                         " of the |t|^2-weighted coefficient mass");
  return c;
}

}  // namespace gcwt
