// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "gcwt/fft.hpp"

namespace gcwt {

double bump(double u, double lo, double hi) {
  if (!(u > lo && u < hi)) return 0.0;
  const double s = (2.0 * u - lo - hi) / (hi - lo);
  const double d = 1.0 - s * s;
  return std::exp(1.0 - 1.0 / d);
}

SampledSignal SignalModel::sample(const Lattice& lattice) const {
  lattice.validate();
  if (lattice.dim() != dim)
    throw DomainError("signal '" + name + "' is " + std::to_string(dim) +
                      "-dimensional; lattice is " + std::to_string(lattice.dim()) + "-dimensional");
  if (spatial) return SampledSignal::sample(lattice, spatial);
  Spectrum s;
  s.freq = frequency_lattice(lattice, 1);
  s.spatial_origin = lattice.origin;
  s.values.resize(s.freq.size());
  std::vector<double> w(dim);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    s.freq.point(i, w);
    s.values[i] = spectrum(w);
  }
  return inverse_fourier(s, lattice);
}

namespace {

double sq(double x) { return x * x; }

// 2^{1/4} exp(-pi x^2) has unit norm and is its own transform.
const double kGaussNorm = std::pow(2.0, 0.25);
// (1 - 2 pi x^2) exp(-pi x^2) scaled to unit norm; transform 2 pi w^2 exp(-pi w^2).
const double kHatNorm = std::pow(2.0, 1.25) / std::sqrt(3.0);

double hat(double x) { return kHatNorm * (1.0 - 2.0 * kPi * x * x) * std::exp(-kPi * x * x); }
double hat_hat(double w) { return kHatNorm * 2.0 * kPi * w * w * std::exp(-kPi * w * w); }

using Factory = SignalModel (*)();

SignalModel make(std::string name, std::size_t dim, PointFn spectrum, PointFn spatial = {},
                 bool radial = false) {
  return SignalModel{std::move(name), dim, std::move(spectrum), std::move(spatial), radial};
}

const std::map<std::string, Factory, std::less<>>& registry() {
  static const std::map<std::string, Factory, std::less<>> table = {
      {"gaussian",
       [] {
         return make(
             "gaussian", 1, [](auto w) { return Complex(kGaussNorm * std::exp(-kPi * sq(w[0]))); },
             [](auto x) { return Complex(kGaussNorm * std::exp(-kPi * sq(x[0]))); }, true);
       }},
      {"mexican_hat_1d",
       [] {
         return make(
             "mexican_hat_1d", 1, [](auto w) { return Complex(hat_hat(w[0])); },
             [](auto x) { return Complex(hat(x[0])); }, true);
       }},
      {"analytic_1d",
       [] {
         return make("analytic_1d", 1, [](auto w) {
           return Complex(w[0] > 0.0 ? w[0] * std::exp(-0.5 * sq(w[0])) : 0.0);
         });
       }},
      {"even_spectrum_1d",
       [] {
         return make(
             "even_spectrum_1d", 1,
             [](auto w) { return Complex(std::abs(w[0]) * std::exp(-0.5 * sq(w[0]))); }, {}, true);
       }},
      {"bump_1d",
       [] {
         return make(
             "bump_1d", 1, [](auto w) { return Complex(bump(std::abs(w[0]), 1.0, 2.0)); }, {}, true);
       }},
      {"bandlimited_1d",
       [] {
         return make(
             "bandlimited_1d", 1, [](auto w) { return Complex(bump(std::abs(w[0]), 0.5, 3.0)); }, {},
             true);
       }},
      {"chirp_1d",
       [] {
         // exp(-alpha x^2) exp(2 pi i beta x), alpha = pi/4 - i pi.
         const Complex alpha(kPi / 4.0, -kPi);
         const double beta = 2.0;
         return make(
             "chirp_1d", 1,
             [alpha, beta](auto w) {
               return std::sqrt(kPi / alpha) * std::exp(-kPi * kPi * sq(w[0] - beta) / alpha);
             },
             [alpha, beta](auto x) {
               return std::exp(-alpha * sq(x[0]) + Complex(0.0, kTwoPi * beta * x[0]));
             });
       }},
      {"gaussian_2d",
       [] {
         return make(
             "gaussian_2d", 2,
             [](auto w) { return Complex(std::sqrt(2.0) * std::exp(-kPi * (sq(w[0]) + sq(w[1])))); },
             [](auto x) { return Complex(std::sqrt(2.0) * std::exp(-kPi * (sq(x[0]) + sq(x[1])))); },
             true);
       }},
      {"mexican_hat_2d",
       [] {
         return make(
             "mexican_hat_2d", 2, [](auto w) { return Complex(hat_hat(w[0]) * hat_hat(w[1])); },
             [](auto x) { return Complex(hat(x[0]) * hat(x[1])); });
       }},
      {"radial_bandlimited_2d",
       [] {
         return make(
             "radial_bandlimited_2d", 2,
             [](auto w) { return Complex(bump(std::hypot(w[0], w[1]), 1.0, 2.0)); }, {}, true);
       }},
      {"radial_bandlimited_2d_outer",
       [] {
         return make(
             "radial_bandlimited_2d_outer", 2,
             [](auto w) { return Complex(bump(std::hypot(w[0], w[1]), 2.5, 3.5)); }, {}, true);
       }},
      {"axis_avoiding_2d",
       [] {
         return make("axis_avoiding_2d", 2, [](auto w) {
           return Complex(bump(std::abs(w[0]), 1.0, 2.0) * bump(w[1], -2.0, 2.0));
         });
       }},
      {"separable_bump_2d",
       [] {
         return make("separable_bump_2d", 2, [](auto w) {
           return Complex(bump(std::abs(w[0]), 1.0, 2.0) * bump(std::abs(w[1]), 1.0, 2.0));
         });
       }},
      {"bandlimited_2d",
       [] {
         return make("bandlimited_2d", 2, [](auto w) {
           const double r2 = sq(w[0]) + sq(w[1]);
           if (r2 == 0.0) return Complex{};
           const double cos2 = (sq(w[0]) - sq(w[1])) / r2;
           return Complex(bump(std::sqrt(r2), 0.5, 3.0) * (1.0 + 0.5 * cos2));
         });
       }},
      {"quadrant_bandlimited_2d",
       [] {
         return make("quadrant_bandlimited_2d", 2, [](auto w) {
           return Complex(bump(std::abs(w[0]), 0.5, 2.5) * bump(std::abs(w[1]), 0.5, 2.5));
         });
       }},
      {"strip_bandlimited_2d",
       [] {
         return make("strip_bandlimited_2d", 2, [](auto w) {
           return Complex(bump(std::abs(w[0]), 0.5, 2.0) * bump(w[1], -1.5, 1.5));
         });
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names(std::size_t dim) {
  std::vector<std::string> out;
  for (const auto& [name, factory] : registry())
    if (dim == 0 || factory().dim == dim) out.push_back(name);
  return out;
}

SignalModel catalog_model(std::string_view name, std::size_t dim) {
  if (name == "gaussian" && dim == 2) name = "gaussian_2d";
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSignal("unknown catalog signal '" + std::string(name) + "'");
  return it->second();
}

SampledSignal catalog(std::string_view name, const Lattice& lattice) {
  return catalog_model(name, lattice.dim()).sample(lattice);
}

SignalModel combine(const std::vector<std::pair<Complex, SignalModel>>& terms, std::string name) {
  if (terms.empty()) throw DomainError("combine: no terms");
  const std::size_t dim = terms.front().second.dim;
  bool all_spatial = true;
  for (const auto& [c, m] : terms) {
    if (m.dim != dim) throw DomainError("combine: dimension mismatch");
    all_spatial = all_spatial && static_cast<bool>(m.spatial);
  }
  auto shared = std::make_shared<std::vector<std::pair<Complex, SignalModel>>>(terms);
  SignalModel out;
  out.name = std::move(name);
  out.dim = dim;
  out.spectrum = [shared](std::span<const double> w) {
    Complex acc{};
    for (const auto& [c, m] : *shared) acc += c * m.spectrum(w);
    return acc;
  };
  if (all_spatial) {
    out.spatial = [shared](std::span<const double> x) {
      Complex acc{};
      for (const auto& [c, m] : *shared) acc += c * m.spatial(x);
      return acc;
    };
  }
  return out;
}

SignalModel model_from_samples(const SampledSignal& samples, std::string name) {
  auto spec = std::make_shared<Spectrum>(fourier(samples, 4));
  SignalModel out;
  out.name = std::move(name);
  out.dim = samples.lattice().dim();
  out.spectrum = [spec](std::span<const double> w) -> Complex {
    const Lattice& fl = spec->freq;
    const std::size_t dim = fl.dim();
    // Multilinear interpolation over the 2^dim surrounding frequency nodes.
    std::vector<std::size_t> base(dim);
    std::vector<double> frac(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const double pos = (w[a] - fl.origin[a]) / fl.spacing[a];
      if (pos < 0.0 || pos > static_cast<double>(fl.shape[a] - 1)) return {};
      base[a] = std::min(static_cast<std::size_t>(pos), fl.shape[a] - 2);
      frac[a] = pos - static_cast<double>(base[a]);
    }
    Complex acc{};
    for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
      double weight = 1.0;
      std::size_t flat = 0;
      for (std::size_t a = 0; a < dim; ++a) {
        const bool up = (corner >> a) & 1u;
        weight *= up ? frac[a] : 1.0 - frac[a];
        flat = flat * fl.shape[a] + base[a] + (up ? 1 : 0);
      }
      if (weight != 0.0) acc += weight * spec->values[flat];
    }
    return acc;
  };
  return out;
}

Wavelet make_wavelet(const SignalModel& model, const Lattice& lattice) {
  return Wavelet{model, model.sample(lattice)};
}

Wavelet make_wavelet(std::string_view catalog_name, const Lattice& lattice) {
  return make_wavelet(catalog_model(catalog_name, lattice.dim()), lattice);
}

Wavelet wavelet_from_samples(SampledSignal samples, std::string id) {
  SignalModel m = model_from_samples(samples, std::move(id));
  return Wavelet{std::move(m), std::move(samples)};
}

}  // namespace gcwt
