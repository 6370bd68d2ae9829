// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcwt/catalog.hpp"
#include "gcwt/group.hpp"
#include "gcwt/quadrature.hpp"

namespace gcwt {

struct AdmissibilityOptions {
  double tolerance = 2e-2;  // bound on rel_variation
  double scale_min = 1e-3;
  double scale_max = 1e3;
  double line_extent = 1e3;  // |b| range for shear and modulation coordinates
  std::size_t angle_nodes = 64;
  double divergence_growth = 1e6;  // relative to ||psi||^2
  double tail_ratio = 1e-6;        // endpoint density / integral that signals a non-decaying tail
  double nonzero = 1e-8;
  quad::Options quad{64, 1e-9, 20};  // outer adaptive rule
  std::size_t inner_panels = 512;     // fixed Simpson panels for nested integrals
};

struct FreqSample {
  std::vector<double> omega;
  double value = 0.0;
};

struct AdmissibilityReport {
  std::string group;
  std::string wavelet_id;
  std::string formula_id;
  double constant = 0.0;
  std::vector<FreqSample> per_freq;
  double rel_variation = 0.0;
  bool admissible = false;
  bool diverged = false;
  /// "L2", or "H2+" / "H2-" when an Affine1D wavelet lives on one half-line.
  std::string subspace = "L2";
  double tolerance = 0.0;
  double wavelet_norm_sq = 0.0;
  std::string reason;
};

struct CrossSample {
  std::vector<double> omega;
  Complex value;
};

struct PairReport {
  Complex cross_constant;
  Complex overlap;
  bool is_admissible_pair = false;
  std::vector<CrossSample> per_freq;
  double rel_variation = 0.0;
  AdmissibilityReport first;
  AdmissibilityReport second;
  std::string reason;
};

struct FeasibilityReport {
  std::string group;
  std::string wavelet_id;
  double constant = 0.0;
  std::vector<FreqSample> per_freq;
  double rel_variation = 0.0;
  bool feasible = false;
  bool diverged = false;
  std::string subspace = "L2";
  double admissibility_constant = 0.0;
  double rel_difference = 0.0;
  bool consistent = false;  // rel_difference <= 1e-3
  std::string reason;
};

/// Name of the Fourier-domain criterion used for the kind.
std::string formula_id(const GroupModel& model);

/// True when w lies within `tube` of the kind's singular set.
bool is_singular(const GroupModel& model, std::span<const double> w, double tube);

/// `count` deterministic probes on the annulus 0.5 <= |w| <= 4 outside the 0.1 tube.
std::vector<std::vector<double>> default_probes(const GroupModel& model, std::size_t count = 32);

/// Integral over B of conj(s1(L_b w)) s2(L_b w) against left Haar measure of B.
/// `tail` receives the largest endpoint density seen on a scale axis.
Complex cross_integral(const GroupModel& model, const PointFn& s1, const PointFn& s2, std::span<const double> w,
                       const AdmissibilityOptions& opt, double* tail = nullptr);

/// C_psi per probe (default probes when `probes` is empty). Throws SingularProbe.
AdmissibilityReport admissibility_constant(const Wavelet& psi, const GroupModel& model,
                                           const std::vector<std::vector<double>>& probes = {},
                                           const AdmissibilityOptions& opt = {});

/// Cross constant C_{psi1 psi2}. Throws LatticeMismatch.
PairReport pair_constant(const Wavelet& psi1, const Wavelet& psi2, const GroupModel& model,
                         const std::vector<std::vector<double>>& probes = {},
                         const AdmissibilityOptions& opt = {});

/// Fixed-grid trapezoid evaluation of int_B |psi^(gamma o tau_b)|^2 db at `probes`
/// random frequencies, compared with admissibility_constant().
FeasibilityReport feasibility_check(const Wavelet& psi, const GroupModel& model, std::size_t probes = 8,
                                    std::uint64_t seed = 1, const AdmissibilityOptions& opt = {});

}  // namespace gcwt
