// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gcwt/types.hpp"

namespace gcwt {

using Rational = boost::rational<std::int64_t>;

/// Exact element of the cyclotomic field Q(zeta_L), zeta_L = exp(2 pi i / L), stored as
/// rational coefficients of 1, zeta, ..., zeta^{phi(L)-1} (reduced modulo Phi_L).
class Cyclotomic {
 public:
  explicit Cyclotomic(std::size_t order = 12);
  static Cyclotomic rational(std::size_t order, Rational r);
  static Cyclotomic root(std::size_t order, std::int64_t k);  // zeta^k
  /// a + b i; needs 4 | order.
  static Cyclotomic gaussian(std::size_t order, Rational a, Rational b);

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  Cyclotomic conj() const;
  Complex value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  bool operator==(const Cyclotomic& o) const;
  std::string str() const;

 private:
  std::size_t order_;
  std::vector<Rational> c_;
};

using ExactVector = std::array<Cyclotomic, 2>;
using ExactMatrix = std::array<std::array<Cyclotomic, 2>, 2>;

/// D3 element x^r y^s is index r + 3 s: e, x, x^2, y, xy, x^2y.
inline constexpr std::size_t kD3Order = 6;
std::size_t d3_multiply(std::size_t u, std::size_t v);
std::size_t d3_inverse(std::size_t u);
std::string d3_name(std::size_t u);
inline bool d3_is_reflection(std::size_t u) { return u >= 3; }

/// pi(t, u) = e^{int} (x) rho(u) on C^2, rho(x) = diag(omega, omega^-1), rho(y) = [0 1; 1 0],
/// omega = exp(2 pi i / 3). The torus is sampled at t_k = 2 pi k / N.
class FiniteRep {
 public:
  explicit FiniteRep(std::int64_t n = 1, std::size_t t_samples = 12);

  std::int64_t n() const { return n_; }
  std::size_t t_samples() const { return N_; }
  /// Field order lcm(N, 12): holds omega, i and every e^{i n t_k}.
  std::size_t field_order() const { return order_; }
  const ExactMatrix& matrix(std::size_t u) const { return rho_[u]; }
  /// pi(t_k, u) exactly.
  ExactMatrix operator()(std::size_t k, std::size_t u) const;

  /// Exact checks of x^3 = e = y^2 and xy = yx^{-1} in the images, and rho(u) rho(u)^* = I.
  bool relations_hold() const;
  bool unitary() const;
  /// max |rho(u) rho(u)^* - I| in floating point.
  double unitarity_error() const;
  /// pi((t,u)(t',u')) == pi(t,u) pi(t',u') over all 36 pairs and all sampled t, t'.
  std::size_t homomorphism_failures() const;

 private:
  std::int64_t n_;
  std::size_t N_;
  std::size_t order_;
  std::array<ExactMatrix, kD3Order> rho_;
};

/// values[k * 6 + u] = W_xi eta(t_k, u) = <eta, pi(t_k, u) xi>.
struct FiniteTransform {
  std::size_t t_samples = 0;
  std::vector<Cyclotomic> values;
  const Cyclotomic& at(std::size_t k, std::size_t u) const { return values[k * kD3Order + u]; }
};

FiniteTransform finite_transform(const ExactVector& xi, const ExactVector& eta, const FiniteRep& rep);

/// Normalised Haar measure of {W != 0}: nonzero cells / (6 N).
Rational support_fraction(const FiniteTransform& w);

/// Parses "p/q", "a+bi", "1/2-3/4i", "i" into an element of Q(zeta_order) (4 | order).
Cyclotomic parse_gaussian_rational(const std::string& text, std::size_t order);

}  // namespace gcwt
