// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gcwt/transform.hpp"

namespace gcwt {

/// Haar measure of {|W f| > threshold * max |W f|} inside nested translation boxes.
struct SupportProfile {
  std::vector<double> extents;         // half-widths of the translation boxes
  std::vector<double> window_measure;  // Haar measure of each window
  std::vector<double> support_measure;
  double threshold = 1e-6;
  double max_abs = 0.0;
};

/// Windows share the B-part of `grid` and keep translations with |t_i| < extent.
/// Extents must be positive and increasing (DomainError).
SupportProfile support_growth(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid,
                              const std::vector<double>& extents, double threshold = 1e-6);

struct ConcentrationCertificate {
  double set_measure = 0.0;    // mu(M)
  double measure_limit = 0.0;  // sqrt(C) / ||psi||
  bool applicable = false;     // set_measure <= measure_limit
  double lhs = 0.0;            // ||W f - chi_M W f||
  double rhs = 0.0;            // (sqrt(C) - ||psi|| mu(M)^{1/2}) ||f||
  double margin = 0.0;
  double transform_norm = 0.0; // ||W f||
  double signal_norm = 0.0;
};

/// M lists node indices of field.grid.
ConcentrationCertificate concentration(const CoefficientField& field, std::span<const std::size_t> M,
                                       double constant, double psi_norm);

/// Random node set: uniform draws kept while the accumulated measure stays below
/// budget * u, u uniform in (0, 1]. `allowed` (optional) restricts the B-nodes.
std::vector<std::size_t> random_node_set(const HaarGrid& grid, double budget, std::mt19937_64& rng,
                                         const std::vector<bool>* allowed = nullptr);

/// Per-B-node data for the reproducing kernel k(g, g') = C^{-1} <psi_g', psi_g>.
struct KernelTable {
  double constant = 0.0;
  double psi_norm_sq = 0.0;
  /// int_G |k(g, g')|^2 dg' over the grid, for g on B-node p (independent of translation).
  std::vector<double> row_norm_sq;
  /// sum_k |Psi_p|^2 dw / ||psi||^2: how well the frequency lattice resolves pi(g) psi.
  std::vector<double> resolved;
  /// Share of row_norm_sq carried by edge cells.
  std::vector<double> edge_fraction;

  /// Nodes whose kernel rows are resolved and captured by the window.
  std::vector<bool> interior(double resolve_tol = 1e-3, double edge_tol = 1e-2) const;
};

KernelTable kernel_table(const Wavelet& psi, const HaarGrid& grid, double constant);

struct KernelReport {
  double hs_norm_sq = 0.0;  // ||P_M P_R||_HS^2 by kernel quadrature
  double expected = 0.0;    // ||psi||^2 mu(M) / C
  double set_measure = 0.0;
  double rel_error = 0.0;
};

KernelReport kernel_projection_norm(const KernelTable& table, const HaarGrid& grid, std::span<const std::size_t> M);
KernelReport kernel_projection_norm(const Wavelet& psi, std::span<const std::size_t> M, const HaarGrid& grid,
                                    double constant);

struct UncertaintyCertificate {
  double time_dispersion = 0.0;  // (int_G |t|^2 |W f|^2 dmu)^{1/2}
  double freq_dispersion = 0.0;  // (int |2 pi gamma|^2 |f^|^2)^{1/2}
  double product = 0.0;
  double bound = 0.0;            // sqrt(C) ||f||^2 / 2
  double ratio = 0.0;            // product / bound
  double margin = 0.0;           // product - bound
  double outer_fraction = 0.0;   // |t|^2-weighted mass outside the central half of the translations
};

/// Throws WindowTooSmall when outer_fraction exceeds max_outer.
UncertaintyCertificate uncertainty(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid, double constant,
                                   double max_outer = 1e-2);

}  // namespace gcwt
