// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcwt/fft.hpp"

namespace gcwt {

std::size_t Lattice::size() const {
  std::size_t n = shape.empty() ? 0 : 1;
  for (auto s : shape) n *= s;
  return n;
}

double Lattice::cell_volume() const {
  double v = 1.0;
  for (double h : spacing) v *= h;
  return v;
}

void Lattice::point(std::size_t flat, std::span<double> x) const {
  for (std::size_t axis = dim(); axis-- > 0;) {
    const std::size_t idx = flat % shape[axis];
    flat /= shape[axis];
    x[axis] = coord(axis, idx);
  }
}

void Lattice::validate() const {
  if (shape.empty() || origin.size() != shape.size() || spacing.size() != shape.size())
    throw DomainError("lattice: shape, origin and spacing must have equal nonzero length");
  for (std::size_t a = 0; a < dim(); ++a) {
    if (shape[a] < 2) throw DomainError("lattice: every axis needs at least 2 points");
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a]))
      throw DomainError("lattice: spacing must be positive");
  }
}

Lattice Lattice::centered(std::size_t dim, std::size_t n, double half_width) {
  Lattice l;
  l.shape.assign(dim, n);
  l.origin.assign(dim, -half_width);
  l.spacing.assign(dim, 2.0 * half_width / static_cast<double>(n));
  l.validate();
  return l;
}

bool operator==(const Lattice& a, const Lattice& b) {
  if (a.shape != b.shape || a.origin.size() != b.origin.size() ||
      a.spacing.size() != b.spacing.size())
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double tol = 1e-12 * std::max(a.spacing[i], b.spacing[i]);
    if (std::abs(a.spacing[i] - b.spacing[i]) > tol) return false;
    if (std::abs(a.origin[i] - b.origin[i]) > tol * std::max(1.0, static_cast<double>(a.shape[i])))
      return false;
  }
  return true;
}

SampledSignal::SampledSignal(Lattice lattice, std::vector<Complex> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  lattice_.validate();
  if (values_.size() != lattice_.size())
    throw DomainError("signal: value count " + std::to_string(values_.size()) +
                      " does not match lattice size " + std::to_string(lattice_.size()));
}

SampledSignal SampledSignal::zeros(const Lattice& lattice) {
  return SampledSignal(lattice, std::vector<Complex>(lattice.size()));
}

SampledSignal SampledSignal::sample(const Lattice& lattice,
                                    const std::function<Complex(std::span<const double>)>& fn) {
  lattice.validate();
  std::vector<Complex> v(lattice.size());
  std::vector<double> x(lattice.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    lattice.point(i, x);
    v[i] = fn(x);
  }
  return SampledSignal(lattice, std::move(v));
}

SampledSignal& SampledSignal::operator+=(const SampledSignal& other) {
  if (!(lattice_ == other.lattice_)) throw LatticeMismatch("signal +: lattices differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

SampledSignal& SampledSignal::operator-=(const SampledSignal& other) {
  if (!(lattice_ == other.lattice_)) throw LatticeMismatch("signal -: lattices differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

SampledSignal& SampledSignal::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

SampledSignal operator+(SampledSignal a, const SampledSignal& b) { return a += b; }
SampledSignal operator-(SampledSignal a, const SampledSignal& b) { return a -= b; }
SampledSignal operator*(Complex c, SampledSignal a) { return a *= c; }

Complex inner(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.lattice() == g.lattice())) throw LatticeMismatch("inner: lattices differ");
  Complex acc{};
  auto fv = f.values();
  auto gv = g.values();
  for (std::size_t i = 0; i < fv.size(); ++i) acc += fv[i] * std::conj(gv[i]);
  return acc * f.lattice().cell_volume();
}

double norm(const SampledSignal& f) { return std::sqrt(std::max(0.0, inner(f, f).real())); }

double sup_norm(const SampledSignal& f) {
  double m = 0.0;
  for (auto v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

Complex inner_spectral(const Spectrum& f, const Spectrum& g) {
  if (!(f.freq == g.freq)) throw LatticeMismatch("inner_spectral: frequency lattices differ");
  Complex acc{};
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * std::conj(g.values[i]);
  return acc * f.freq.cell_volume();
}

double norm(const Spectrum& f) { return std::sqrt(std::max(0.0, inner_spectral(f, f).real())); }

Lattice frequency_lattice(const Lattice& lattice, std::size_t pad) {
  lattice.validate();
  if (pad == 0) throw DomainError("fourier: padding factor must be positive");
  Lattice freq;
  for (std::size_t a = 0; a < lattice.dim(); ++a) {
    const std::size_t p = pad * lattice.shape[a];
    const double dw = 1.0 / (static_cast<double>(p) * lattice.spacing[a]);
    freq.shape.push_back(p);
    freq.spacing.push_back(dw);
    freq.origin.push_back(-static_cast<double>(p / 2) * dw);
  }
  return freq;
}

namespace {

// exp(sign * 2 pi i * origin * w_k) for every natural-order index k on one axis.
std::vector<Complex> axis_phase(std::size_t p, double dw, double origin, double sign) {
  std::vector<Complex> ph(p);
  for (std::size_t k = 0; k < p; ++k) {
    const double w = static_cast<double>(fft::natural_frequency(k, p)) * dw;
    ph[k] = std::polar(1.0, sign * kTwoPi * origin * w);
  }
  return ph;
}

// Calls fn(natural_flat, centered_flat, phase) over a padded grid.
template <class Fn>
void for_each_frequency(const std::vector<std::size_t>& shape,
                        const std::vector<std::vector<Complex>>& phases, Fn&& fn) {
  const std::size_t dim = shape.size();
  std::size_t total = 1;
  for (auto s : shape) total *= s;
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t centered = 0;
    Complex ph{1.0, 0.0};
    for (std::size_t a = 0; a < dim; ++a) {
      centered = centered * shape[a] + fft::natural_to_centered(idx[a], shape[a]);
      ph *= phases[a][idx[a]];
    }
    fn(flat, centered, ph);
    for (std::size_t a = dim; a-- > 0;) {
      if (++idx[a] < shape[a]) break;
      idx[a] = 0;
    }
  }
}

// Copies a row-major block of `small` shape into the leading corner of `big`.
template <class Fn>
void for_each_embedded(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big,
                       Fn&& fn) {
  const std::size_t dim = small.size();
  std::size_t total = 1;
  for (auto s : small) total *= s;
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t outer = 0;
    for (std::size_t a = 0; a < dim; ++a) outer = outer * big[a] + idx[a];
    fn(flat, outer);
    for (std::size_t a = dim; a-- > 0;) {
      if (++idx[a] < small[a]) break;
      idx[a] = 0;
    }
  }
}

}  // namespace

Spectrum fourier(const SampledSignal& f, std::size_t pad) {
  const Lattice& lat = f.lattice();
  Spectrum out;
  out.freq = frequency_lattice(lat, pad);
  out.spatial_origin = lat.origin;
  const auto& pshape = out.freq.shape;
  std::vector<Complex> buf(out.freq.size());
  for_each_embedded(lat.shape, pshape, [&](std::size_t s, std::size_t b) { buf[b] = f[s]; });
  fft::transform(buf, pshape, -1);
  std::vector<std::vector<Complex>> phases;
  for (std::size_t a = 0; a < lat.dim(); ++a)
    phases.push_back(axis_phase(pshape[a], out.freq.spacing[a], lat.origin[a], -1.0));
  const double h = lat.cell_volume();
  out.values.assign(buf.size(), Complex{});
  for_each_frequency(pshape, phases, [&](std::size_t nat, std::size_t cen, Complex ph) {
    out.values[cen] = h * ph * buf[nat];
  });
  return out;
}

SampledSignal inverse_fourier(const Spectrum& spectrum) {
  Lattice full;
  full.shape = spectrum.freq.shape;
  full.origin = spectrum.spatial_origin;
  for (std::size_t a = 0; a < spectrum.freq.dim(); ++a)
    full.spacing.push_back(1.0 /
                           (static_cast<double>(spectrum.freq.shape[a]) * spectrum.freq.spacing[a]));
  return inverse_fourier(spectrum, full);
}

SampledSignal inverse_fourier(const Spectrum& spectrum, const Lattice& target) {
  target.validate();
  const auto& pshape = spectrum.freq.shape;
  if (target.dim() != pshape.size()) throw LatticeMismatch("inverse_fourier: dimension mismatch");
  for (std::size_t a = 0; a < target.dim(); ++a) {
    const double h = 1.0 / (static_cast<double>(pshape[a]) * spectrum.freq.spacing[a]);
    if (target.shape[a] > pshape[a] || std::abs(h - target.spacing[a]) > 1e-12 * h ||
        std::abs(target.origin[a] - spectrum.spatial_origin[a]) > 1e-9 * h)
      throw LatticeMismatch("inverse_fourier: target lattice incompatible with spectrum");
  }
  std::vector<std::vector<Complex>> phases;
  for (std::size_t a = 0; a < target.dim(); ++a)
    phases.push_back(axis_phase(pshape[a], spectrum.freq.spacing[a], target.origin[a], 1.0));
  std::vector<Complex> buf(spectrum.values.size());
  for_each_frequency(pshape, phases, [&](std::size_t nat, std::size_t cen, Complex ph) {
    buf[nat] = ph * spectrum.values[cen];
  });
  fft::transform(buf, pshape, +1);
  const double dw = spectrum.freq.cell_volume();
  std::vector<Complex> v(target.size());
  for_each_embedded(target.shape, pshape, [&](std::size_t s, std::size_t b) { v[s] = dw * buf[b]; });
  return SampledSignal(target, std::move(v));
}

SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, std::size_t pad) {
  if (!(f.lattice() == g.lattice())) throw LatticeMismatch("convolve: lattices differ");
  if (pad < 2) throw DomainError("convolve: padding factor must be at least 2");
  // F * G is the continuous spectrum of f * g; the padded inverse evaluates it
  // on f's lattice, and wraparound lands only in the cropped tail.
  Spectrum F = fourier(f, pad);
  const Spectrum G = fourier(g, pad);
  for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= G.values[i];
  return inverse_fourier(F, f.lattice());
}

}  // namespace gcwt
