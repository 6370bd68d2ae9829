// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace gcwt::fft {
namespace {

struct PlanCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<std::size_t>, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(const std::vector<std::size_t>& shape, int sign) {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(shape, sign);
    if (auto it = plans.find(key); it != plans.end()) return it->second;
    std::vector<int> n(shape.begin(), shape.end());
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    // Planning scribbles on the buffers, so plan on scratch storage.
    std::vector<Complex> scratch(total);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    // ESTIMATE keeps plans (and therefore rounding) independent of timing.
    fftw_plan plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(), ptr, ptr,
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(key, plan);
    return plan;
  }
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void transform(std::span<Complex> data, const std::vector<std::size_t>& shape, int sign) {
  fftw_plan plan = cache().get(shape, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace gcwt::fft
