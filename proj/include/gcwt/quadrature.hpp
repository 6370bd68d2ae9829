// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "gcwt/types.hpp"

namespace gcwt::quad {

struct Options {
  std::size_t panels = 64;  // initial uniform panels; features narrower than a panel may be missed
  double rel_tol = 1e-10;
  int max_depth = 20;
};

namespace detail {

template <class T>
T simpson_rec(const std::function<T(double)>& f, double a, double b, T fa, T fm, T fb, T whole, double tol,
              int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const T flm = f(lm), frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive composite Simpson over [a, b]. The tolerance is relative to the
/// coarse estimate, so scaling f by c scales the result by exactly c.
template <class T>
T simpson(const std::function<T(double)>& f, double a, double b, const Options& opt = {}) {
  const std::size_t n = opt.panels;
  const double h = (b - a) / static_cast<double>(n);
  std::vector<T> nodes(2 * n + 1);
  for (std::size_t i = 0; i <= 2 * n; ++i) nodes[i] = f(a + 0.5 * h * static_cast<double>(i));
  std::vector<T> coarse(n);
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    coarse[k] = h / 6.0 * (nodes[2 * k] + 4.0 * nodes[2 * k + 1] + nodes[2 * k + 2]);
    scale += std::abs(coarse[k]);
  }
  if (scale == 0.0) return T{};
  const double tol = opt.rel_tol * scale / static_cast<double>(n);
  T total{};
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = a + h * static_cast<double>(k);
    total += detail::simpson_rec(f, lo, lo + h, nodes[2 * k], nodes[2 * k + 1], nodes[2 * k + 2], coarse[k],
                                 tol, opt.max_depth);
  }
  return total;
}

/// Composite Simpson with a fixed number of panels (smooth in any parameter of f).
template <class T>
T composite_simpson(const std::function<T(double)>& f, double a, double b, std::size_t panels) {
  const double h = (b - a) / static_cast<double>(2 * panels);
  T total = f(a) + f(b);
  for (std::size_t i = 1; i < 2 * panels; ++i) total += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  return total * (h / 3.0);
}

/// Trapezoid rule with `n` nodes on a full period [0, period).
template <class T>
T periodic_trapezoid(const std::function<T(double)>& f, double period, std::size_t n) {
  T total{};
  const double h = period / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) total += f(h * static_cast<double>(k));
  return total * h;
}

/// Integral over the real line through x = scale * sinh(s), s in [-asinh(extent / scale), +asinh(...)].
/// `fixed_panels` > 0 selects composite Simpson instead of the adaptive rule.
template <class T>
T real_line(const std::function<T(double)>& f, double scale, double extent, const Options& opt = {},
            std::size_t fixed_panels = 0) {
  const double smax = std::asinh(extent / scale);
  const std::function<T(double)> g = [&](double s) { return f(scale * std::sinh(s)) * (scale * std::cosh(s)); };
  return fixed_panels ? composite_simpson(g, -smax, smax, fixed_panels) : simpson(g, -smax, smax, opt);
}

}  // namespace gcwt::quad
