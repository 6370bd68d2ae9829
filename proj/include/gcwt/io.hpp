// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <filesystem>

#include "json.hpp"

#include "gcwt/transform.hpp"

namespace gcwt {

/// Signal files: a JSON sidecar {shape, origin, spacing, dtype: "c128", payload} next to a
/// raw little-endian (re, im) float64 payload in row-major order.
/// save_signal writes `sidecar` and `sidecar` with extension ".c128".
void save_signal(const SampledSignal& f, const std::filesystem::path& sidecar);
/// Reads a sidecar, or a CSV file (extension .csv). Throws IoError.
SampledSignal load_signal(const std::filesystem::path& path);

/// CSV with one row per sample: coordinates x1..xn, re, im. An optional header line is
/// skipped. Coordinates must form a complete regular lattice. Throws IoError.
SampledSignal read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(const SampledSignal& f, const std::filesystem::path& path);

/// Coefficient fields use the signal format with shape [B-nodes, translations...] and a
/// "grid" object carrying the Haar grid.
void save_field(const CoefficientField& field, const std::filesystem::path& sidecar);
CoefficientField load_field(const std::filesystem::path& sidecar);

nlohmann::ordered_json lattice_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);
nlohmann::ordered_json grid_json(const HaarGrid& grid);
HaarGrid grid_from_json(const nlohmann::json& j);

}  // namespace gcwt
