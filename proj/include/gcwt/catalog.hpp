// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcwt/signal.hpp"

namespace gcwt {

using PointFn = std::function<Complex(std::span<const double>)>;

/// A signal known through its Fourier transform (and optionally pointwise in
/// space). Transforms evaluate dilated/rotated wavelets through `spectrum`, so
/// wavelets never need to be resampled in space.
struct SignalModel {
  std::string name;
  std::size_t dim = 1;
  PointFn spectrum;
  PointFn spatial;     // empty when no closed form exists
  bool radial = false; // |spectrum| depends on |w| only

  /// Samples on `lattice`: pointwise when `spatial` is set, otherwise by
  /// inverting the spectrum sampled on the lattice's own frequency grid.
  SampledSignal sample(const Lattice& lattice) const;
};

/// Smooth bump exp(1 - 1/(1 - s^2)) on (lo, hi), peak 1 at the midpoint, 0 outside.
double bump(double u, double lo, double hi);

/// Names known to catalog(); `dim` = 0 lists every entry.
std::vector<std::string> catalog_names(std::size_t dim = 0);

/// Catalog entry by name. "gaussian" resolves to the 2-D Gaussian when dim == 2.
/// Throws UnknownSignal.
SignalModel catalog_model(std::string_view name, std::size_t dim = 0);

/// Samples a catalog entry on `lattice`; throws UnknownSignal or DomainError
/// when the entry's dimension differs from the lattice's.
SampledSignal catalog(std::string_view name, const Lattice& lattice);

/// Linear combination sum c_i * model_i (all of one dimension).
SignalModel combine(const std::vector<std::pair<Complex, SignalModel>>& terms, std::string name);

/// Model whose spectrum interpolates the (4x padded) spectrum of `samples`
/// multilinearly and vanishes outside the sampled band.
SignalModel model_from_samples(const SampledSignal& samples, std::string name);

/// Analysing/synthesis vector: a spectral model plus its samples on the working lattice.
struct Wavelet {
  SignalModel model;
  SampledSignal samples;

  const std::string& id() const { return model.name; }
  Complex spectrum(std::span<const double> w) const { return model.spectrum(w); }
};

Wavelet make_wavelet(const SignalModel& model, const Lattice& lattice);
Wavelet make_wavelet(std::string_view catalog_name, const Lattice& lattice);
Wavelet wavelet_from_samples(SampledSignal samples, std::string id);

}  // namespace gcwt
