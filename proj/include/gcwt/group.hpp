// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcwt/catalog.hpp"
#include "gcwt/signal.hpp"

namespace gcwt {

enum class GroupKind { Affine1D, Diag2D, UpperTri2D, Shear, Similitude, WeylHeisenberg, G51 };

/// Group element in the kind's coordinates:
///   Affine1D        (a, t)               a > 0
///   Diag2D          (a1, a2, x1, x2)     a1, a2 != 0
///   UpperTri2D      (a, b, x, y)         a != 0; matrix [[a, b], [0, 1]]
///   Shear           (a, s, t1, t2)       a > 0
///   Similitude      (a, theta, t1, t2)   a > 0, theta in [0, 2 pi)
///   WeylHeisenberg  (a_1..a_n, b_1..b_n, phi)  phi in [0, 2 pi) encodes t = e^{i phi}
///   G51             (phi, x2, x3, x4, x5)
struct GroupPoint {
  std::vector<double> params;
};

/// A concrete group G = B x| R^n acting on L^2(R^n). Every kind is handled through
/// the same spectral form
///   (pi(g) psi)^(w) = chi(g) e^{-2 pi i <x, w>} amp(b) psi^(L_b w),
/// where b is the B-part of g and x its translation.
class GroupModel {
 public:
  GroupModel() = default;
  GroupModel(GroupKind kind, std::size_t dim_base, bool full_domain = false);

  static GroupModel affine_1d() { return {GroupKind::Affine1D, 1}; }
  static GroupModel diag_2d(bool full_domain = false) { return {GroupKind::Diag2D, 2, full_domain}; }
  static GroupModel upper_tri_2d(bool full_domain = false) {
    return {GroupKind::UpperTri2D, 2, full_domain};
  }
  static GroupModel shear() { return {GroupKind::Shear, 2}; }
  static GroupModel similitude() { return {GroupKind::Similitude, 2}; }
  static GroupModel weyl_heisenberg(std::size_t n = 1) { return {GroupKind::WeylHeisenberg, n}; }
  static GroupModel g51() { return {GroupKind::G51, 2}; }

  /// Parses "affine-1d", "similitude", "weyl-heisenberg" ... (case and '-'/'_' insensitive).
  /// `n` selects the dimension where the kind allows a choice. Throws ConfigError.
  static GroupModel parse(std::string_view name, std::size_t n = 0, bool full_domain = false);
  static std::vector<std::string> kind_names();

  GroupKind kind() const { return kind_; }
  std::size_t dim_base() const { return n_; }
  bool full_domain() const { return full_; }
  std::string name() const;

  std::size_t param_count() const;
  /// Number of B-part coordinates (scales, angles, shears, modulations).
  std::size_t b_dim() const;
  /// True for WeylHeisenberg and G51, whose centre circle is integrated out.
  bool has_phase() const { return kind_ == GroupKind::WeylHeisenberg || kind_ == GroupKind::G51; }

  std::vector<double> b_part(const GroupPoint& g) const;
  std::vector<double> translation(const GroupPoint& g) const;
  double phase(const GroupPoint& g) const;
  GroupPoint assemble(std::span<const double> b, std::span<const double> x, double phase = 0.0) const;

  /// Throws DomainError unless g has the right arity and lies in the parameter domain.
  void check(const GroupPoint& g) const;
  bool valid(const GroupPoint& g) const;

  GroupPoint identity() const;
  GroupPoint compose(const GroupPoint& g, const GroupPoint& h) const;
  GroupPoint inverse(const GroupPoint& g) const;

  /// delta_tau(b) = 1 / |det M_b| for the affine kinds, 1 otherwise.
  double delta_tau(std::span<const double> b) const;
  /// Density of left Haar measure against Lebesgue measure in the kind's coordinates
  /// (the centre circle carries normalized measure).
  double haar_density(const GroupPoint& g) const;
  /// Density of left Haar measure of B in its own coordinates.
  double b_haar_density(std::span<const double> b) const;

  /// Writes L_b w: M_b^T w for the affine kinds, w - b (WeylHeisenberg), w + m (G51).
  void frequency_map(std::span<const double> b, std::span<const double> w, std::span<double> out) const;
  /// |det M_b|^{1/2} for the affine kinds, 1 otherwise.
  double amplitude(std::span<const double> b) const;
  /// Unimodular factor chi(g).
  Complex character(const GroupPoint& g) const;

  /// (pi(g) psi)^(w) evaluated through `spectrum`.
  Complex represent_spectrum(const GroupPoint& g, const PointFn& spectrum,
                             std::span<const double> w) const;
  /// (pi(g) f)(x) evaluated through the pointwise function f.
  Complex represent_spatial(const GroupPoint& g, const PointFn& f, std::span<const double> x) const;

  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  GroupKind kind_ = GroupKind::Affine1D;
  std::size_t n_ = 1;
  bool full_ = false;
};

/// pi(g) applied analytically (exact in the spectral domain).
SignalModel act(const GroupPoint& g, const SignalModel& f, const GroupModel& model);

/// pi(g) f resampled on f's lattice with multilinear interpolation and zero extension.
/// Throws ResampleError when more than half of the L^2 mass leaves the window.
SampledSignal act(const GroupPoint& g, const SampledSignal& f, const GroupModel& model);

/// Parameter box of a truncated group window.
struct WindowSpec {
  std::pair<double, double> scale{0.25, 8.0};   // a (every scale coordinate)
  std::pair<double, double> shear{-8.0, 8.0};   // UpperTri2D b, Shear s
  std::pair<double, double> modulation{-6.0, 6.0};  // WeylHeisenberg b, G51 (x2, x4), per axis
  std::vector<std::pair<double, double>> translation;  // per axis; haar_grid only
};

struct GridSpec {
  std::size_t scales = 32;
  std::size_t angles = 16;
  std::size_t shears = 64;
  std::size_t modulations = 24;   // per axis
  std::size_t translations = 16;  // per axis; haar_grid only
};

/// Quadrature for Haar measure on a window: the product of B-part cells and a
/// translation lattice. Node i = (b_nodes[i / T], translations point i % T).
struct HaarGrid {
  GroupModel model;
  WindowSpec window;
  std::vector<std::vector<double>> b_nodes;
  /// Integral of the full Haar density over each B-part cell (per unit translation volume).
  std::vector<double> b_weights;
  /// True for cells on the edge of a bounded (non-angular) B-axis.
  std::vector<bool> b_boundary;
  Lattice translations;

  std::size_t b_count() const { return b_nodes.size(); }
  std::size_t translation_count() const { return translations.size(); }
  std::size_t size() const { return b_count() * translation_count(); }
  GroupPoint node(std::size_t i) const;
  double weight(std::size_t i) const { return b_weights[i / translation_count()] * translations.cell_volume(); }
  double total_weight() const;
  std::vector<GroupPoint> nodes() const;
  std::vector<double> weights() const;
};

/// Haar grid on a box window (translation cells centred in window.translation).
/// Throws DomainError for a non-positive scale bound and EmptyGridError for an
/// empty box or zero resolution.
HaarGrid haar_grid(const GroupModel& model, const WindowSpec& window, const GridSpec& resolution);

/// Grid matched to signals on `lattice`: translations are the centred lattice
/// t_m = m h, m in [-P/2, P/2), P = pad * N per axis, so every B-node is one
/// FFT cross-correlation.
HaarGrid transform_grid(const GroupModel& model, const WindowSpec& window, const GridSpec& resolution,
                        const Lattice& lattice, std::size_t pad = 2);

}  // namespace gcwt
