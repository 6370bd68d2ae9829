// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gcwt/inequality.hpp"

namespace gcwt {

/// One randomized check and its outcome.
struct Certificate {
  std::string suite;
  std::string group;
  std::string wavelet;
  std::string signal;
  std::size_t trial = 0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> values;
  std::string note;

  double value(const std::string& key) const;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t trials = 50;
  double concentration_tol = 1e-2;  // margin >= -tol sqrt(C) ||f||
  double kernel_tol = 2e-2;
  double growth_min = 1.8;
  double heisenberg_min = 0.99;
  std::size_t sets_per_signal = 5;  // concentration: random M drawn per field
};

/// Working configuration of one group for the field-based suites.
struct GroupSetup {
  GroupModel model;
  std::string wavelet;
  WindowSpec window;
  GridSpec resolution;
  Lattice lattice;
  std::size_t pad = 1;
  /// Catalog signals away from the group's singular frequencies.
  std::vector<std::string> eligible;
};

std::vector<GroupModel> suite_groups();
GroupSetup concentration_setup(const GroupModel& model);

/// `trials` fields per group, every catalog signal of the group's dimension in turn,
/// randomly translated; growth >= growth_min on each of 4 doubling windows.
std::vector<Certificate> support_suite(const SuiteOptions& opt);
/// `trials` (f, M) pairs per group: f a random combination of two translated eligible
/// signals, mu(M) <= 0.5 sqrt(C) / ||psi||.
std::vector<Certificate> concentration_suite(const SuiteOptions& opt);
/// `trials` random sets M of interior nodes per group, projection-norm identity.
std::vector<Certificate> kernel_suite(const SuiteOptions& opt);
/// Affine1D: every 1-D catalog signal in `trials` random translated/dilated variants.
std::vector<Certificate> uncertainty_suite(const SuiteOptions& opt);

std::vector<std::string> suite_names();
/// "all" runs every suite in suite_names() order. Throws ConfigError for unknown names.
std::vector<Certificate> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gcwt
