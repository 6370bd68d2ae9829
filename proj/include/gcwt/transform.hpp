// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gcwt/admissibility.hpp"
#include "gcwt/catalog.hpp"
#include "gcwt/group.hpp"
#include "gcwt/signal.hpp"

namespace gcwt {

/// W_psi f on the nodes of a transform grid; values[p * T + m] belongs to B-node p
/// and centred translation m (T = translation count).
struct CoefficientField {
  HaarGrid grid;
  std::vector<Complex> values;
  std::string wavelet_id;
  Lattice signal_lattice;
  std::vector<double> signal_origin;
  double signal_norm = 0.0;

  std::size_t pad() const;
  Complex at(std::size_t b_index, std::size_t t_index) const {
    return values[b_index * grid.translation_count() + t_index];
  }
  /// Haar-quadrature energy sum_i w_i |W(g_i)|^2.
  double energy() const;
};

/// Psi_b(w) = amp(b) psi^(L_b w) at the listed flat indices of `freq`
/// (every point when `indices` is empty).
std::vector<Complex> node_spectrum(const Wavelet& psi, const GroupModel& model, std::span<const double> b,
                                   const Lattice& freq, std::span<const std::size_t> indices = {});

/// Receives W_psi f along the translation lattice of one B-node (centred order).
/// Called concurrently for distinct B-nodes.
using RowSink = std::function<void(std::size_t b_index, std::span<const Complex> row)>;

/// Streams the coefficient rows of forward() without storing the field.
void forward_rows(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid, const RowSink& sink);

/// W_psi f(g) = <f, pi(g) psi> on every node of `grid`, one FFT correlation per B-node.
/// The grid must come from transform_grid() on f's lattice; throws LatticeMismatch.
CoefficientField forward(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid);
/// As above; throws NotAdmissible unless `report` marks psi admissible.
CoefficientField forward(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid,
                         const AdmissibilityReport& report);

/// C^{-1} sum_i w_i W(g_i) pi(g_i) psi2, synthesised spectrally and cropped to the
/// signal lattice. Throws NotAdmissiblePair unless `pair` is an admissible pair.
SampledSignal reconstruct(const CoefficientField& field, const Wavelet& psi2, const PairReport& pair);
/// Same sum with an explicit constant (no pair check).
SampledSignal reconstruct(const CoefficientField& field, const Wavelet& psi2, Complex constant);

/// forward() followed by reconstruct(), one B-node at a time (no stored field).
SampledSignal analyse_synthesise(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2,
                                 const HaarGrid& grid, Complex constant);

/// Flat indices of `freq` where any of the spectra exceeds rel * max |value|.
std::vector<std::size_t> spectral_support(const std::vector<const Spectrum*>& spectra, double rel = 1e-13);

/// Frame symbol S(w) = sum_p w_p conj(Psi1_p(w)) Psi2_p(w) over the B-nodes of `grid`,
/// at the listed indices of `freq`. `boundary` (optional) receives the part from edge cells.
std::vector<Complex> cross_symbol(const Wavelet& psi1, const Wavelet& psi2, const HaarGrid& grid,
                                  const Lattice& freq, std::span<const std::size_t> indices,
                                  std::vector<Complex>* boundary = nullptr);

/// Cross symbol tabulated once on a set of frequencies and reused across signals.
struct FrameSymbol {
  Lattice freq;
  std::vector<std::size_t> indices;  // flat indices of freq
  std::vector<Complex> values;
  std::vector<Complex> boundary;     // contribution of edge cells

  /// Position of flat index k in `indices`, or -1.
  std::ptrdiff_t position(std::size_t k) const;

 private:
  friend FrameSymbol frame_symbol(const Wavelet&, const Wavelet&, const HaarGrid&, const Lattice&,
                                  std::vector<std::size_t>);
  std::vector<std::ptrdiff_t> lookup_;
};

FrameSymbol frame_symbol(const Wavelet& psi1, const Wavelet& psi2, const HaarGrid& grid, const Lattice& freq,
                         std::vector<std::size_t> indices);

/// Fraction of ||f||^2 whose frequencies lie within `tube` of the group's singular set.
double singular_energy_fraction(const SampledSignal& f, const GroupModel& model, double tube);

struct IsometryReport {
  Complex transform_inner;   // <W f, W g> over the grid
  Complex signal_inner;      // <f, g>
  double constant = 0.0;
  double defect = 0.0;       // |<Wf, Wg> - C <f, g>| / (C ||f|| ||g||)
  double energy_ratio = 0.0; // ||W f||^2 / (C ||f||^2)
  double boundary_fraction = 0.0;
};

/// Isometry check through the frame symbol (equal to the field sums by Parseval).
/// Throws WindowTooSmall when edge cells carry more than `max_boundary` of the energy.
IsometryReport isometry(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi, const HaarGrid& grid,
                        double constant, double max_boundary = 1e-2);
/// Same check against a precomputed symbol of psi with itself; the symbol must cover
/// the spectra of f and g (DomainError otherwise).
IsometryReport isometry(const SampledSignal& f, const SampledSignal& g, const FrameSymbol& symbol, double constant,
                        double max_boundary = 1e-2);
double isometry_defect(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi, const HaarGrid& grid,
                       double constant);

/// Reconstruction from the scale band [a1, a2] only: forward and synthesis on a
/// transform grid whose scale window is the band. Throws BadBand unless 0 < a1 < a2.
SampledSignal truncated_reconstruct(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2, double a1,
                                    double a2, const GroupModel& model, Complex constant,
                                    const GridSpec& resolution = {}, std::size_t pad = 2);

/// Multiplier m(w) = int_{a1}^{a2} int conj(psi1^) psi2^ (L_b w) db, by adaptive quadrature.
Complex band_multiplier(const Wavelet& psi1, const Wavelet& psi2, double a1, double a2, const GroupModel& model,
                        std::span<const double> w, const AdmissibilityOptions& opt = {});

/// F^{-1}[f^ m / C] on f's lattice: the Fourier-multiplier form of truncated_reconstruct().
SampledSignal multiplier_reconstruct(const SampledSignal& f, const Wavelet& psi1, const Wavelet& psi2, double a1,
                                     double a2, const GroupModel& model, Complex constant,
                                     const AdmissibilityOptions& opt = {});

struct HapOptions {
  std::size_t scales_per_unit = 8;  // scale nodes per unit of log a
  std::size_t angles = 16;
  std::size_t shears = 64;
};

/// sup_x |pi(g) f - (pi(g) f)_{a1 a, a2 a}| on `lattice`, where a is the scale of g and
/// the truncated term uses the band grid. a1 == a2 gives the empty band.
double hap_error(const SignalModel& f, const Lattice& lattice, const Wavelet& psi1, const Wavelet& psi2,
                 const GroupPoint& g, double a1, double a2, const GroupModel& model, Complex constant,
                 const HapOptions& opt = {});

/// Tail bound p^{-n/2} |C|^{-1} int |f^(w)| T(w) dw with T the scale tail of |psi1^ psi2^|
/// outside [a1, a2]; valid for every g of scale a >= p.
double hap_bound(const SignalModel& f, const Lattice& lattice, const Wavelet& psi1, const Wavelet& psi2, double a1,
                 double a2, double p, const GroupModel& model, Complex constant,
                 const AdmissibilityOptions& opt = {});

}  // namespace gcwt
