// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/transform.hpp"

#include <algorithm>
#include <cmath>

#include "gcwt/fft.hpp"
#include "gcwt/parallel.hpp"

namespace gcwt {

namespace {

// Natural-order flat index for every centred flat index of `shape`.
std::vector<std::size_t> natural_index(const std::vector<std::size_t>& shape) {
  std::size_t total = 1;
  for (std::size_t s : shape) total *= s;
  std::vector<std::size_t> out(total);
  std::vector<std::size_t> idx(shape.size(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t nat = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) nat = nat * shape[a] + fft::centered_to_natural(idx[a], shape[a]);
    out[c] = nat;
    for (std::size_t a = shape.size(); a-- > 0;) {
      if (++idx[a] < shape[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

// Padding factor linking a transform grid to a signal lattice.
std::size_t grid_pad(const HaarGrid& grid, const Lattice& lattice) {
  const Lattice& t = grid.translations;
  if (t.dim() != lattice.dim() || lattice.dim() != grid.model.dim_base())
    throw LatticeMismatch("transform grid and signal differ in dimension");
  std::size_t pad = 0;
  for (std::size_t a = 0; a < t.dim(); ++a) {
    if (t.shape[a] % lattice.shape[a] != 0 || std::abs(t.spacing[a] - lattice.spacing[a]) > 1e-12 * lattice.spacing[a])
      throw LatticeMismatch("transform grid was not built on the signal lattice");
    const std::size_t p = t.shape[a] / lattice.shape[a];
    if (pad != 0 && p != pad) throw LatticeMismatch("transform grid padding differs between axes");
    pad = p;
  }
  return pad;
}

constexpr std::size_t kAccumulators = 8;

// Fixed chunking over B-nodes so per-chunk reductions are thread-count independent.
std::size_t node_chunk(std::size_t count) { return std::max<std::size_t>(1, (count + kAccumulators - 1) / kAccumulators); }

std::size_t scale_nodes(double lo, double hi, std::size_t per_unit) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log(hi / lo) * static_cast<double>(per_unit))));
}

void check_band(double a1, double a2, bool allow_empty) {
  if (!(a1 > 0.0) || !(a2 > 0.0) || a1 > a2 || (!allow_empty && a1 == a2))
    throw BadBand("scale band needs 0 < A1 < A2");
}

void check_scaled(const GroupModel& model) {
  if (model.has_phase()) throw DomainError("scale bands need a group with a dilation coordinate");
}

}  // namespace

std::size_t CoefficientField::pad() const { return grid_pad(grid, signal_lattice); }

double CoefficientField::energy() const {
  const std::size_t t = grid.translation_count();
  const double cell = grid.translations.cell_volume();
  double total = 0.0;
  for (std::size_t p = 0; p < grid.b_count(); ++p) {
    double row = 0.0;
    for (std::size_t m = 0; m < t; ++m) row += std::norm(values[p * t + m]);
    total += grid.b_weights[p] * cell * row;
  }
  return total;
}

std::vector<Complex> node_spectrum(const Wavelet& psi, const GroupModel& model, std::span<const double> b,
                                   const Lattice& freq, std::span<const std::size_t> indices) {
  const std::size_t n = freq.dim();
  const double amp = model.amplitude(b);
  const std::size_t count = indices.empty() ? freq.size() : indices.size();
  std::vector<Complex> out(count);
  double w[3], lw[3];
  for (std::size_t i = 0; i < count; ++i) {
    freq.point(indices.empty() ? i : indices[i], std::span<double>(w, n));
    model.frequency_map(b, std::span<const double>(w, n), std::span<double>(lw, n));
    out[i] = amp * psi.model.spectrum(std::span<const double>(lw, n));
  }
  return out;
}

void forward_rows(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid, const RowSink& sink) {
  const std::size_t pad = grid_pad(grid, f.lattice());
  const Spectrum F = fourier(f, pad);
  const Lattice& freq = F.freq;
  const std::vector<std::size_t> nat = natural_index(freq.shape);
  const double dv = freq.cell_volume();
  const std::size_t T = freq.size();
  const GroupModel& model = grid.model;

  parallel_chunks(grid.b_count(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<Complex> buf(T), row(T);
    for (std::size_t p = begin; p < end; ++p) {
      const std::vector<Complex> Psi = node_spectrum(psi, model, grid.b_nodes[p], freq);
      for (std::size_t c = 0; c < T; ++c) buf[nat[c]] = F.values[c] * std::conj(Psi[c]) * dv;
      fft::transform(buf, freq.shape, +1);
      for (std::size_t m = 0; m < T; ++m) {
        row[m] = buf[nat[m]];
        if (model.has_phase()) row[m] *= std::conj(model.character(grid.node(p * T + m)));
      }
      sink(p, row);
    }
  });
}

CoefficientField forward(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid) {
  CoefficientField field;
  field.grid = grid;
  field.wavelet_id = psi.id();
  field.signal_lattice = f.lattice();
  field.signal_origin = f.lattice().origin;
  field.signal_norm = norm(f);
  const std::size_t T = grid.translation_count();
  field.values.assign(grid.b_count() * T, Complex{});
  forward_rows(f, psi, grid, [&](std::size_t p, std::span<const Complex> row) {
    std::copy(row.begin(), row.end(), field.values.begin() + static_cast<std::ptrdiff_t>(p * T));
  });
  return field;
}

CoefficientField forward(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid,
                         const AdmissibilityReport& report) {
  if (!report.admissible) throw NotAdmissible("wavelet " + psi.id() + " is not admissible: " + report.reason);
  return forward(f, psi, grid);
}

SampledSignal reconstruct(const CoefficientField& field, const Wavelet& psi2, const PairReport& pair) {
  if (!pair.is_admissible_pair) throw NotAdmissiblePair("wavelet pair is not admissible: " + pair.reason);
  return reconstruct(field, psi2, pair.cross_constant);
}

SampledSignal reconstruct(const CoefficientField& field, const Wavelet& psi2, Complex constant) {
  if (constant == Complex{}) throw NotAdmissiblePair("cross constant is zero");
  const HaarGrid& grid = field.grid;
  const GroupModel& model = grid.model;
  const Lattice freq = frequency_lattice(field.signal_lattice, field.pad());
  const std::vector<std::size_t> nat = natural_index(freq.shape);
  const std::size_t T = freq.size();
  const double cell = grid.translations.cell_volume();
  if (field.values.size() != grid.b_count() * T) throw LatticeMismatch("coefficient field has the wrong size");

  const std::size_t chunk = node_chunk(grid.b_count());
  std::vector<std::vector<Complex>> acc(chunk_count(grid.b_count(), chunk));
  parallel_chunks(grid.b_count(), chunk, [&](std::size_t ci, std::size_t begin, std::size_t end) {
    std::vector<Complex>& sum = acc[ci];
    sum.assign(T, Complex{});
    std::vector<Complex> buf(T);
    for (std::size_t p = begin; p < end; ++p) {
      const Complex* row = field.values.data() + p * T;
      for (std::size_t m = 0; m < T; ++m) {
        Complex v = row[m];
        if (model.has_phase()) v *= model.character(grid.node(p * T + m));
        buf[nat[m]] = v;
      }
      fft::transform(buf, freq.shape, -1);
      const std::vector<Complex> Psi = node_spectrum(psi2, model, grid.b_nodes[p], freq);
      const double w = grid.b_weights[p] * cell;
      for (std::size_t c = 0; c < T; ++c) sum[c] += w * buf[nat[c]] * Psi[c];
    }
  });
  Spectrum out{freq, std::vector<Complex>(T), field.signal_origin};
  for (const auto& sum : acc)
    for (std::size_t c = 0; c < T; ++c) out.values[c] += sum[c];
  for (Complex& v : out.values) v /= constant;
  return inverse_fourier(out, field.signal_lattice);
}

SampledSignal analyse_synthesise(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2,
                                 const HaarGrid& grid, Complex constant) {
  if (constant == Complex{}) throw NotAdmissiblePair("cross constant is zero");
  const std::size_t pad = grid_pad(grid, f.lattice());
  const Spectrum F = fourier(f, pad);
  const Lattice& freq = F.freq;
  const std::vector<std::size_t> nat = natural_index(freq.shape);
  const std::size_t T = freq.size();
  const double dv = freq.cell_volume();
  const double cell = grid.translations.cell_volume();

  const std::size_t chunk = node_chunk(grid.b_count());
  std::vector<std::vector<Complex>> acc(chunk_count(grid.b_count(), chunk));
  parallel_chunks(grid.b_count(), chunk, [&](std::size_t ci, std::size_t begin, std::size_t end) {
    std::vector<Complex>& sum = acc[ci];
    sum.assign(T, Complex{});
    std::vector<Complex> buf(T);
    for (std::size_t p = begin; p < end; ++p) {
      const std::vector<Complex> Psi1 = node_spectrum(psi1, grid.model, grid.b_nodes[p], freq);
      const std::vector<Complex> Psi2 = &psi1 == &psi2 ? Psi1 : node_spectrum(psi2, grid.model, grid.b_nodes[p], freq);
      for (std::size_t c = 0; c < T; ++c) buf[nat[c]] = F.values[c] * std::conj(Psi1[c]) * dv;
      fft::transform(buf, freq.shape, +1);  // coefficients along the translation lattice
      fft::transform(buf, freq.shape, -1);  // synthesis over the same lattice
      const double w = grid.b_weights[p] * cell;
      for (std::size_t c = 0; c < T; ++c) sum[c] += w * buf[nat[c]] * Psi2[c];
    }
  });
  Spectrum out{freq, std::vector<Complex>(T), F.spatial_origin};
  for (const auto& sum : acc)
    for (std::size_t c = 0; c < T; ++c) out.values[c] += sum[c];
  for (Complex& v : out.values) v /= constant;
  return inverse_fourier(out, f.lattice());
}

std::vector<std::size_t> spectral_support(const std::vector<const Spectrum*>& spectra, double rel) {
  if (spectra.empty()) return {};
  const std::size_t size = spectra.front()->values.size();
  std::vector<double> cut;
  for (const Spectrum* s : spectra) {
    if (s->values.size() != size) throw LatticeMismatch("spectra differ in size");
    double m = 0.0;
    for (const Complex& v : s->values) m = std::max(m, std::abs(v));
    cut.push_back(rel * m);
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t s = 0; s < spectra.size(); ++s)
      if (std::abs(spectra[s]->values[k]) > cut[s]) {
        out.push_back(k);
        break;
      }
  return out;
}

std::vector<Complex> cross_symbol(const Wavelet& psi1, const Wavelet& psi2, const HaarGrid& grid,
                                  const Lattice& freq, std::span<const std::size_t> indices,
                                  std::vector<Complex>* boundary) {
  const std::size_t K = indices.size();
  const std::size_t chunk = node_chunk(grid.b_count());
  const std::size_t chunks = chunk_count(grid.b_count(), chunk);
  std::vector<std::vector<Complex>> acc(chunks), edge(chunks);
  parallel_chunks(grid.b_count(), chunk, [&](std::size_t ci, std::size_t begin, std::size_t end) {
    acc[ci].assign(K, Complex{});
    edge[ci].assign(K, Complex{});
    for (std::size_t p = begin; p < end; ++p) {
      const std::vector<Complex> a = node_spectrum(psi1, grid.model, grid.b_nodes[p], freq, indices);
      const std::vector<Complex> b = &psi1 == &psi2 ? a : node_spectrum(psi2, grid.model, grid.b_nodes[p], freq, indices);
      const double w = grid.b_weights[p];
      std::vector<Complex>& target = grid.b_boundary[p] ? edge[ci] : acc[ci];
      for (std::size_t k = 0; k < K; ++k) target[k] += w * std::conj(a[k]) * b[k];
    }
  });
  std::vector<Complex> total(K), rim(K);
  for (std::size_t ci = 0; ci < chunks; ++ci)
    for (std::size_t k = 0; k < K; ++k) {
      total[k] += acc[ci][k];
      rim[k] += edge[ci][k];
    }
  for (std::size_t k = 0; k < K; ++k) total[k] += rim[k];
  if (boundary) *boundary = std::move(rim);
  return total;
}

std::ptrdiff_t FrameSymbol::position(std::size_t k) const { return k < lookup_.size() ? lookup_[k] : -1; }

FrameSymbol frame_symbol(const Wavelet& psi1, const Wavelet& psi2, const HaarGrid& grid, const Lattice& freq,
                         std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= freq.size()) throw DomainError("frequency index out of range");
  FrameSymbol s;
  s.freq = freq;
  s.values = cross_symbol(psi1, psi2, grid, freq, indices, &s.boundary);
  s.lookup_.assign(freq.size(), -1);
  for (std::size_t i = 0; i < indices.size(); ++i) s.lookup_[indices[i]] = static_cast<std::ptrdiff_t>(i);
  s.indices = std::move(indices);
  return s;
}

double singular_energy_fraction(const SampledSignal& f, const GroupModel& model, double tube) {
  if (f.lattice().dim() != model.dim_base()) throw LatticeMismatch("signal dimension differs from the group's");
  const Spectrum F = fourier(f, 2);
  const std::size_t n = F.freq.dim();
  double total = 0.0, near = 0.0;
  double w[3];
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    F.freq.point(k, std::span<double>(w, n));
    const double e = std::norm(F.values[k]);
    total += e;
    if (is_singular(model, std::span<const double>(w, n), tube)) near += e;
  }
  return total > 0.0 ? near / total : 0.0;
}

IsometryReport isometry(const SampledSignal& f, const SampledSignal& g, const FrameSymbol& symbol, double constant,
                        double max_boundary) {
  if (!(f.lattice() == g.lattice())) throw LatticeMismatch("isometry: signals on different lattices");
  if (!(constant > 0.0)) throw NotAdmissible("isometry needs a positive admissibility constant");
  const Lattice& l = f.lattice();
  if (symbol.freq.dim() != l.dim() || symbol.freq.shape[0] % l.shape[0] != 0)
    throw LatticeMismatch("frame symbol was not built for this lattice");
  const std::size_t pad = symbol.freq.shape[0] / l.shape[0];
  const Spectrum F = fourier(f, pad), G = fourier(g, pad);
  if (!(F.freq == symbol.freq)) throw LatticeMismatch("frame symbol was not built for this lattice");
  const double dv = F.freq.cell_volume();

  IsometryReport r;
  r.constant = constant;
  r.signal_inner = inner(f, g);
  double ef = 0.0, eg = 0.0, bf = 0.0, bg = 0.0;
  for (std::size_t k : spectral_support({&F, &G})) {
    const std::ptrdiff_t i = symbol.position(k);
    if (i < 0) throw DomainError("frame symbol does not cover the signal spectrum");
    const double q = symbol.values[i].real(), qb = symbol.boundary[i].real();
    r.transform_inner += F.values[k] * std::conj(G.values[k]) * q * dv;
    ef += std::norm(F.values[k]) * q * dv;
    eg += std::norm(G.values[k]) * q * dv;
    bf += std::norm(F.values[k]) * qb * dv;
    bg += std::norm(G.values[k]) * qb * dv;
  }
  const double nf = norm(f), ng = norm(g);
  r.defect = nf * ng > 0.0 ? std::abs(r.transform_inner - constant * r.signal_inner) / (constant * nf * ng) : 0.0;
  r.energy_ratio = nf > 0.0 ? ef / (constant * nf * nf) : 1.0;
  r.boundary_fraction = std::max(ef > 0.0 ? bf / ef : 0.0, eg > 0.0 ? bg / eg : 0.0);
  if (r.boundary_fraction > max_boundary)
    throw WindowTooSmall("edge cells of the group window carry " + std::to_string(r.boundary_fraction) +
                         " of the transform energy");
  return r;
}

IsometryReport isometry(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi, const HaarGrid& grid,
                        double constant, double max_boundary) {
  if (!(f.lattice() == g.lattice())) throw LatticeMismatch("isometry: signals on different lattices");
  const std::size_t pad = grid_pad(grid, f.lattice());
  const Spectrum F = fourier(f, pad), G = fourier(g, pad);
  return isometry(f, g, frame_symbol(psi, psi, grid, F.freq, spectral_support({&F, &G})), constant, max_boundary);
}

double isometry_defect(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi, const HaarGrid& grid,
                       double constant) {
  return isometry(f, g, psi, grid, constant).defect;
}

SampledSignal truncated_reconstruct(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2, double a1,
                                    double a2, const GroupModel& model, Complex constant,
                                    const GridSpec& resolution, std::size_t pad) {
  check_band(a1, a2, false);
  check_scaled(model);
  WindowSpec window;
  window.scale = {a1, a2};
  return analyse_synthesise(f, psi1, psi2, transform_grid(model, window, resolution, f.lattice(), pad), constant);
}

Complex band_multiplier(const Wavelet& psi1, const Wavelet& psi2, double a1, double a2, const GroupModel& model,
                        std::span<const double> w, const AdmissibilityOptions& opt) {
  check_band(a1, a2, false);
  check_scaled(model);
  if (is_singular(model, w, 0.0)) return {};
  AdmissibilityOptions band = opt;
  band.scale_min = a1;
  band.scale_max = a2;
  return cross_integral(model, psi1.model.spectrum, psi2.model.spectrum, w, band);
}

SampledSignal multiplier_reconstruct(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2, double a1,
                                     double a2, const GroupModel& model, Complex constant,
                                     const AdmissibilityOptions& opt) {
  check_band(a1, a2, false);
  check_scaled(model);
  if (constant == Complex{}) throw NotAdmissiblePair("cross constant is zero");
  if (f.lattice().dim() != model.dim_base()) throw LatticeMismatch("signal dimension differs from the group's");
  Spectrum F = fourier(f, 1);
  const std::vector<std::size_t> support = spectral_support({&F});
  std::vector<Complex> m(support.size());
  parallel_chunks(support.size(), 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    double w[3];
    for (std::size_t i = begin; i < end; ++i) {
      F.freq.point(support[i], std::span<double>(w, F.freq.dim()));
      m[i] = band_multiplier(psi1, psi2, a1, a2, model, std::span<const double>(w, F.freq.dim()), opt);
    }
  });
  std::vector<Complex> out(F.values.size());
  for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = F.values[support[i]] * m[i] / constant;
  F.values = std::move(out);
  return inverse_fourier(F, f.lattice());
}

double hap_error(const SignalModel& f, const Lattice& lattice, const Wavelet& psi1, const Wavelet& psi2,
                 const GroupPoint& g, double a1, double a2, const GroupModel& model, Complex constant,
                 const HapOptions& opt) {
  check_band(a1, a2, true);
  check_scaled(model);
  model.check(g);
  if (constant == Complex{}) throw NotAdmissiblePair("cross constant is zero");
  const double a = std::abs(g.params[0]);
  const SampledSignal moved = act(g, f, model).sample(lattice);
  if (a1 == a2) return sup_norm(moved);

  Spectrum F = fourier(moved, 1);
  const std::vector<std::size_t> support = spectral_support({&F});
  WindowSpec window;
  window.scale = {a1 * a, a2 * a};
  GridSpec res;
  res.scales = scale_nodes(a1, a2, opt.scales_per_unit);
  res.angles = opt.angles;
  res.shears = opt.shears;
  const HaarGrid grid = transform_grid(model, window, res, lattice, 1);
  const std::vector<Complex> S = cross_symbol(psi1, psi2, grid, F.freq, support);
  std::vector<Complex> out(F.values.size());
  for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = F.values[support[i]] * S[i] / constant;
  F.values = std::move(out);
  return sup_norm(moved - inverse_fourier(F, lattice));
}

double hap_bound(const SignalModel& f, const Lattice& lattice, const Wavelet& psi1, const Wavelet& psi2, double a1,
                 double a2, double p, const GroupModel& model, Complex constant, const AdmissibilityOptions& opt) {
  check_band(a1, a2, true);
  check_scaled(model);
  if (!(p > 0.0)) throw DomainError("hap_bound needs p > 0");
  if (constant == Complex{}) throw NotAdmissiblePair("cross constant is zero");
  const Spectrum F = fourier(f.sample(lattice), 1);
  const std::vector<std::size_t> support = spectral_support({&F});
  const PointFn s1 = [&](std::span<const double> w) { return Complex(std::abs(psi1.model.spectrum(w))); };
  const PointFn s2 = [&](std::span<const double> w) { return Complex(std::abs(psi2.model.spectrum(w))); };
  const std::size_t n = lattice.dim();
  std::vector<double> tail(support.size());
  parallel_chunks(support.size(), 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    double w[3];
    for (std::size_t i = begin; i < end; ++i) {
      F.freq.point(support[i], std::span<double>(w, n));
      const std::span<const double> ws(w, n);
      if (is_singular(model, ws, 0.0)) continue;
      double t = 0.0;
      for (const auto& [lo, hi] : {std::pair{opt.scale_min, a1}, std::pair{a2, opt.scale_max}}) {
        if (!(hi > lo)) continue;
        AdmissibilityOptions part = opt;
        part.scale_min = lo;
        part.scale_max = hi;
        t += cross_integral(model, s1, s2, ws, part).real();
      }
      tail[i] = t;
    }
  });
  double sum = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) sum += std::abs(F.values[support[i]]) * tail[i];
  return std::pow(p, -0.5 * static_cast<double>(n)) * sum * F.freq.cell_volume() / std::abs(constant);
}

}  // namespace gcwt
