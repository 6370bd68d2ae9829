// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include <cmath>

#include "doctest.h"
#include "gcwt/finite_rep.hpp"

using namespace gcwt;

namespace {

ExactVector vec(const FiniteRep& rep, Rational a, Rational b) {
  const std::size_t L = rep.field_order();
  return {Cyclotomic::rational(L, a), Cyclotomic::rational(L, b)};
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const Cyclotomic z = Cyclotomic::root(12, 1);
  Cyclotomic p = Cyclotomic::rational(12, 1);
  for (int k = 0; k < 12; ++k) p = p * z;
  CHECK(p == Cyclotomic::rational(12, 1));
  CHECK((z * z.conj()) == Cyclotomic::rational(12, 1));
  CHECK((Cyclotomic::root(12, 6) + Cyclotomic::rational(12, 1)).is_zero());
  // 1 + omega + omega^2 = 0.
  CHECK((Cyclotomic::rational(12, 1) + Cyclotomic::root(12, 4) + Cyclotomic::root(12, 8)).is_zero());
  CHECK(std::abs(Cyclotomic::root(12, 5).value() - std::polar(1.0, 5.0 * kTwoPi / 12.0)) < 1e-15);
  // Other field orders reduce correctly too.
  const Cyclotomic w = Cyclotomic::root(60, 7);
  CHECK(std::abs((w * w.conj()).value() - 1.0) < 1e-14);
  CHECK((w * w.conj()) == Cyclotomic::rational(60, 1));
  CHECK_THROWS_AS(Cyclotomic::root(12, 1) + Cyclotomic::root(24, 1), DomainError);
}

TEST_CASE("Gaussian rational parsing") {
  CHECK(parse_gaussian_rational("1/2-3/4i", 12) == Cyclotomic::gaussian(12, Rational(1, 2), Rational(-3, 4)));
  CHECK(parse_gaussian_rational("i", 12) == Cyclotomic::gaussian(12, 0, 1));
  CHECK(parse_gaussian_rational("-2", 12) == Cyclotomic::rational(12, -2));
  CHECK(parse_gaussian_rational("0.25+0.5i", 12) == Cyclotomic::gaussian(12, Rational(1, 4), Rational(1, 2)));
  CHECK_THROWS_AS(parse_gaussian_rational("abc", 12), ConfigError);
  CHECK_THROWS_AS(parse_gaussian_rational("1/0", 12), ConfigError);
  CHECK_THROWS_AS(parse_gaussian_rational("", 12), ConfigError);
}

TEST_CASE("D3 multiplication table") {
  for (std::size_t u = 0; u < kD3Order; ++u) {
    CHECK(d3_multiply(u, 0) == u);
    CHECK(d3_multiply(0, u) == u);
    CHECK(d3_multiply(u, d3_inverse(u)) == 0);
    for (std::size_t v = 0; v < kD3Order; ++v)
      for (std::size_t w = 0; w < kD3Order; ++w)
        CHECK(d3_multiply(d3_multiply(u, v), w) == d3_multiply(u, d3_multiply(v, w)));
  }
  CHECK(d3_multiply(1, 3) == 4);                            // x y
  CHECK(d3_multiply(3, 2) == 4);                            // y x^{-1} = x y
  CHECK(d3_multiply(3, 1) != d3_multiply(1, 3));            // nonabelian
}

TEST_CASE("representation relations, unitarity and homomorphism") {
  for (std::int64_t n : {1, -2, 5}) {
    const FiniteRep rep(n);
    CHECK(rep.relations_hold());
    CHECK(rep.unitary());
    CHECK(rep.unitarity_error() <= 1e-14);
    CHECK(rep.homomorphism_failures() == 0);
  }
  const FiniteRep odd(1, 5);
  CHECK(odd.field_order() == 60);
  CHECK(odd.homomorphism_failures() == 0);
}

TEST_CASE("W vanishes on the reflection coset for xi = eta = e1") {
  const FiniteRep rep;
  const ExactVector e1 = vec(rep, 1, 0);
  const FiniteTransform w = finite_transform(e1, e1, rep);
  REQUIRE(w.values.size() == 72);
  for (std::size_t k = 0; k < 12; ++k) {
    for (std::size_t u = 3; u < 6; ++u) CHECK(w.at(k, u).is_zero());
    // W(t, e) = e^{-int}.
    CHECK(w.at(k, 0) == Cyclotomic::root(12, -static_cast<std::int64_t>(k)));
    CHECK(std::abs(w.at(k, 0).value() - std::polar(1.0, -kTwoPi * static_cast<double>(k) / 12.0)) < 1e-14);
  }
  CHECK(support_fraction(w) == Rational(1, 2));
}

TEST_CASE("orthogonal and balanced vectors") {
  const FiniteRep rep;
  const FiniteTransform w = finite_transform(vec(rep, 1, 0), vec(rep, 0, 1), rep);
  for (std::size_t k = 0; k < 12; ++k)
    for (std::size_t u = 0; u < 6; ++u) {
      if (d3_is_reflection(u))
        CHECK(std::abs(std::abs(w.at(k, u).value()) - 1.0) < 1e-14);
      else
        CHECK(w.at(k, u).is_zero());
    }
  CHECK(support_fraction(w) == Rational(1, 2));

  // (e1 + e2)/sqrt(2): the 1/2 normalisation does not change the support.
  const ExactVector b = vec(rep, 1, 1);
  CHECK(support_fraction(finite_transform(b, b, rep)) == Rational(1));
  CHECK(support_fraction(finite_transform(vec(rep, 0, 0), b, rep)) == Rational(0));
}

TEST_CASE("exact values match floating-point matrix evaluation") {
  const FiniteRep rep(2, 12);
  const std::size_t L = rep.field_order();
  const ExactVector xi = {parse_gaussian_rational("1/2+i", L), parse_gaussian_rational("-3", L)};
  const ExactVector eta = {parse_gaussian_rational("2-1/3i", L), parse_gaussian_rational("i", L)};
  const FiniteTransform w = finite_transform(xi, eta, rep);
  const Complex x0{0.5, 1.0}, x1{-3.0, 0.0}, e0{2.0, -1.0 / 3.0}, e1{0.0, 1.0};
  const Complex om = std::polar(1.0, kTwoPi / 3.0);
  for (std::size_t k = 0; k < 12; ++k)
    for (std::size_t u = 0; u < 6; ++u) {
      const std::size_t r = u % 3;
      Complex a = std::pow(om, static_cast<double>(r)), d = std::pow(std::conj(om), static_cast<double>(r));
      Complex v0 = a * x0, v1 = d * x1;  // rho(x^r) xi
      if (u >= 3) {                      // rho(x^r y) = rho(x^r) swap
        v0 = a * x1;
        v1 = d * x0;
      }
      const Complex phase = std::polar(1.0, 2.0 * kTwoPi * static_cast<double>(k) / 12.0);
      const Complex expect = e0 * std::conj(phase * v0) + e1 * std::conj(phase * v1);
      CHECK(std::abs(w.at(k, u).value() - expect) < 1e-13);
    }
}
