// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gcwt/types.hpp"

namespace gcwt {

/// Regular row-major lattice in R^n: point j has coordinate origin + j * spacing.
struct Lattice {
  std::vector<std::size_t> shape;
  std::vector<double> origin;
  std::vector<double> spacing;

  std::size_t dim() const { return shape.size(); }
  std::size_t size() const;
  double cell_volume() const;
  double coord(std::size_t axis, std::size_t index) const {
    return origin[axis] + static_cast<double>(index) * spacing[axis];
  }
  /// Coordinates of the flat index `flat`, written to `x` (length dim()).
  void point(std::size_t flat, std::span<double> x) const;

  /// Throws DomainError unless every axis has >= 2 points and positive spacing.
  void validate() const;

  /// Symmetric window [-half_width, half_width)^dim with n points per axis.
  static Lattice centered(std::size_t dim, std::size_t n, double half_width);

  friend bool operator==(const Lattice& a, const Lattice& b);
};

/// Complex samples of a function in L^2(R^n) on a lattice.
class SampledSignal {
 public:
  SampledSignal() = default;
  SampledSignal(Lattice lattice, std::vector<Complex> values);

  static SampledSignal zeros(const Lattice& lattice);
  /// Evaluates fn at every lattice point.
  static SampledSignal sample(const Lattice& lattice,
                              const std::function<Complex(std::span<const double>)>& fn);

  const Lattice& lattice() const { return lattice_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

  SampledSignal& operator+=(const SampledSignal& other);
  SampledSignal& operator-=(const SampledSignal& other);
  SampledSignal& operator*=(Complex c);

 private:
  Lattice lattice_;
  std::vector<Complex> values_;
};

SampledSignal operator+(SampledSignal a, const SampledSignal& b);
SampledSignal operator-(SampledSignal a, const SampledSignal& b);
SampledSignal operator*(Complex c, SampledSignal a);

/// Samples of f-hat on a centered frequency lattice (index j <-> k = j - n/2).
struct Spectrum {
  Lattice freq;
  std::vector<Complex> values;
  /// Origin of the spatial lattice the spectrum was taken from (fixes the phase).
  std::vector<double> spatial_origin;
};

/// Sum of f * conj(g) * cell volume. Throws LatticeMismatch.
Complex inner(const SampledSignal& f, const SampledSignal& g);
double norm(const SampledSignal& f);
double sup_norm(const SampledSignal& f);
/// Spectral-side inner product: sum of F * conj(G) * frequency cell volume.
Complex inner_spectral(const Spectrum& f, const Spectrum& g);
double norm(const Spectrum& f);

/// Unitary transform with f-hat(w) = integral f(x) exp(-2 pi i <x, w>) dx, evaluated
/// on the frequency lattice of spacing 1 / (pad * n * h) with pad * n points per axis.
/// The padded variant treats f as zero outside its window.
Spectrum fourier(const SampledSignal& f, std::size_t pad = 1);
/// Inverse of fourier(); a padded spectrum is cropped back onto `target`.
SampledSignal inverse_fourier(const Spectrum& spectrum);
SampledSignal inverse_fourier(const Spectrum& spectrum, const Lattice& target);

/// Centered frequency lattice matching fourier(f, pad) for a signal on `lattice`.
Lattice frequency_lattice(const Lattice& lattice, std::size_t pad = 1);

/// Linear convolution (f * g)(x) = integral f(y) g(x - y) dy evaluated on f's
/// lattice. Requires identical lattices; uses a DFT with padding factor >= 2.
SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, std::size_t pad = 2);

}  // namespace gcwt
