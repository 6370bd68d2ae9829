// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcwt/types.hpp"

namespace gcwt::fft {

/// Unnormalized in-place multidimensional DFT in natural (unshifted) order.
/// sign = -1 computes sum x_j exp(-2 pi i jk/N); sign = +1 the conjugate kernel.
/// Safe to call concurrently; plans are cached per (shape, sign).
void transform(std::span<Complex> data, const std::vector<std::size_t>& shape, int sign);

/// Maps a centered index (0 <-> -n/2) to natural DFT order and back.
inline std::size_t centered_to_natural(std::size_t j, std::size_t n) {
  return (j + n - n / 2) % n;
}
inline std::size_t natural_to_centered(std::size_t k, std::size_t n) {
  return (k + n / 2) % n;
}

/// Signed frequency index of centered position j.
inline long centered_frequency(std::size_t j, std::size_t n) {
  return static_cast<long>(j) - static_cast<long>(n / 2);
}

/// Signed frequency index of natural position k.
inline long natural_frequency(std::size_t k, std::size_t n) {
  return k < (n + 1) / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

}  // namespace gcwt::fft
