// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cstddef>
#include <functional>

namespace gcwt {

/// Worker count: GCWT_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

/// Runs body(begin, end) over [0, n) split into fixed chunks of `chunk` items.
/// Chunk boundaries do not depend on the thread count, so callers that reduce
/// per chunk and then combine chunks in index order get bitwise-reproducible
/// results for any GCWT_THREADS value.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t chunk_index, std::size_t begin,
                                              std::size_t end)>& body);

/// Number of chunks parallel_chunks will create.
inline std::size_t chunk_count(std::size_t n, std::size_t chunk) {
  return chunk == 0 ? 0 : (n + chunk - 1) / chunk;
}

}  // namespace gcwt
