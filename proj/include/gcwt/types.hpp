// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gcwt {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GCWT_DECLARE_ERROR(Name)             \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

GCWT_DECLARE_ERROR(DomainError);
GCWT_DECLARE_ERROR(EmptyGridError);
GCWT_DECLARE_ERROR(ResampleError);
GCWT_DECLARE_ERROR(LatticeMismatch);
GCWT_DECLARE_ERROR(UnknownSignal);
GCWT_DECLARE_ERROR(SingularProbe);
GCWT_DECLARE_ERROR(NotAdmissible);
GCWT_DECLARE_ERROR(NotAdmissiblePair);
GCWT_DECLARE_ERROR(BadBand);
GCWT_DECLARE_ERROR(WindowTooSmall);
GCWT_DECLARE_ERROR(ConfigError);
GCWT_DECLARE_ERROR(IoError);

#undef GCWT_DECLARE_ERROR

}  // namespace gcwt
