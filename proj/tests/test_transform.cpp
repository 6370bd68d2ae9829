// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include <cmath>

#include "doctest.h"
#include "gcwt/transform.hpp"

using namespace gcwt;

namespace {

const Lattice kLine = Lattice::centered(1, 256, 8.0);
const Lattice kPlane = Lattice::centered(2, 128, 8.0);

SampledSignal sample(std::string_view name, const Lattice& l) { return catalog_model(name, l.dim()).sample(l); }

double rel_l2(const SampledSignal& a, const SampledSignal& b) { return norm(a - b) / norm(b); }

// <f, pi(g) psi> from pointwise samples of the analytically moved wavelet.
Complex direct(const SampledSignal& f, const Wavelet& psi, const GroupPoint& g, const GroupModel& m) {
  return inner(f, act(g, psi.model, m).sample(f.lattice()));
}

// Checks a spread of nodes whose translations stay well inside the window.
void check_direct(const SampledSignal& f, const Wavelet& psi, const HaarGrid& grid, double tol) {
  const CoefficientField field = forward(f, psi, grid);
  const double scale = norm(f) * norm(psi.samples);
  const std::size_t T = grid.translation_count();
  std::size_t checked = 0;
  for (std::size_t p = 0; p < grid.b_count(); p += std::max<std::size_t>(1, grid.b_count() / 5)) {
    for (std::size_t m = 0; m < T; m += T / 200 + 1) {
      const GroupPoint g = grid.node(p * T + m);
      const auto x = grid.model.translation(g);
      bool inside = true;
      for (double v : x) inside = inside && std::abs(v) < 4.0;
      if (!inside) continue;
      CHECK(std::abs(field.at(p, m) - direct(f, psi, g, grid.model)) <= tol * scale);
      ++checked;
    }
  }
  CHECK(checked >= 5);
}

}  // namespace

TEST_CASE("forward coefficients equal direct inner products") {
  SUBCASE("affine-1d") {
    WindowSpec w;
    w.scale = {0.5, 2.0};
    const HaarGrid grid = transform_grid(GroupModel::affine_1d(), w, {.scales = 6}, kLine);
    check_direct(sample("bump_1d", kLine), make_wavelet("mexican_hat_1d", kLine), grid, 1e-8);
  }
  SUBCASE("weyl-heisenberg") {
    WindowSpec w;
    w.modulation = {-2.0, 2.0};
    const HaarGrid grid = transform_grid(GroupModel::weyl_heisenberg(1), w, {.modulations = 5}, kLine);
    check_direct(sample("chirp_1d", kLine), make_wavelet("gaussian", kLine), grid, 1e-8);
  }
  SUBCASE("similitude") {
    WindowSpec w;
    w.scale = {0.7, 1.4};
    const HaarGrid grid = transform_grid(GroupModel::similitude(), w, {.scales = 2, .angles = 3}, kPlane);
    check_direct(sample("separable_bump_2d", kPlane), make_wavelet("mexican_hat_2d", kPlane), grid, 1e-8);
  }
  SUBCASE("g51") {
    WindowSpec w;
    w.modulation = {-1.0, 1.0};
    const HaarGrid grid = transform_grid(GroupModel::g51(), w, {.modulations = 2}, kPlane);
    check_direct(sample("gaussian_2d", kPlane), make_wavelet("gaussian_2d", kPlane), grid, 1e-8);
  }
}

TEST_CASE("Gaussian Weyl-Heisenberg coefficients follow the ambiguity function") {
  const Wavelet g = make_wavelet("gaussian", kLine);
  const double n2 = std::pow(norm(g.samples), 2);
  WindowSpec w;
  w.modulation = {-3.0, 3.0};
  const HaarGrid grid = transform_grid(GroupModel::weyl_heisenberg(1), w, {.modulations = 12}, kLine);
  const CoefficientField field = forward(g.samples, g, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const GroupPoint p = grid.node(i);
    const double x = p.params[0], b = p.params[1];
    const double expect = n2 * std::exp(-kPi * (x * x + b * b) / 2.0);
    worst = std::max(worst, std::abs(std::abs(field.values[i]) - expect));
  }
  CHECK(worst <= 1e-10 * n2);
}

TEST_CASE("symbol route equals the coefficient field (discrete Parseval)") {
  struct Case {
    GroupModel model;
    Lattice lattice;
    GridSpec res;
    const char* f;
    const char* g;
    const char* psi;
  };
  const Lattice small = Lattice::centered(2, 32, 8.0);
  const Case cases[] = {
      {GroupModel::affine_1d(), kLine, {.scales = 12}, "bump_1d", "gaussian", "mexican_hat_1d"},
      {GroupModel::weyl_heisenberg(1), kLine, {.modulations = 8}, "chirp_1d", "analytic_1d", "gaussian"},
      {GroupModel::similitude(), small, {.scales = 4, .angles = 4}, "gaussian_2d", "mexican_hat_2d", "mexican_hat_2d"},
      {GroupModel::shear(), small, {.scales = 3, .shears = 4}, "gaussian_2d", "separable_bump_2d", "gaussian_2d"},
      {GroupModel::g51(), small, {.modulations = 3}, "gaussian_2d", "mexican_hat_2d", "gaussian_2d"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.model.name());
    const HaarGrid grid = transform_grid(c.model, {}, c.res, c.lattice);
    const SampledSignal f = sample(c.f, c.lattice), g = sample(c.g, c.lattice);
    const Wavelet psi = make_wavelet(c.psi, c.lattice);
    const CoefficientField wf = forward(f, psi, grid), wg = forward(g, psi, grid);
    Complex field_inner{};
    for (std::size_t i = 0; i < grid.size(); ++i) field_inner += grid.weight(i) * wf.values[i] * std::conj(wg.values[i]);
    const IsometryReport r = isometry(f, g, psi, grid, 1.0, 1.0);
    CHECK(std::abs(r.transform_inner - field_inner) <= 1e-10 * std::abs(field_inner) + 1e-14);
    const IsometryReport rf = isometry(f, f, psi, grid, 1.0, 1.0);
    CHECK(rf.energy_ratio * std::pow(norm(f), 2) == doctest::Approx(wf.energy()).epsilon(1e-10));
  }
}

TEST_CASE("stored and streamed reconstruction agree") {
  WindowSpec w;
  w.scale = {0.25, 8.0};
  const HaarGrid grid = transform_grid(GroupModel::affine_1d(), w, {.scales = 24}, kLine);
  const Wavelet psi1 = make_wavelet("bump_1d", kLine), psi2 = make_wavelet("mexican_hat_1d", kLine);
  const SampledSignal f = sample("bandlimited_1d", kLine);
  const Complex c{0.7, 0.2};
  const SampledSignal a = reconstruct(forward(f, psi1, grid), psi2, c);
  const SampledSignal b = analyse_synthesise(f, psi1, psi2, grid, c);
  CHECK(rel_l2(a, b) <= 1e-12);

  // G51 coefficients carry an x-dependent character that must cancel in synthesis.
  const Lattice small = Lattice::centered(2, 32, 8.0);
  const HaarGrid g51 = transform_grid(GroupModel::g51(), {}, {.modulations = 3}, small);
  const Wavelet gauss = make_wavelet("gaussian_2d", small);
  const SampledSignal h = sample("mexican_hat_2d", small);
  CHECK(rel_l2(reconstruct(forward(h, gauss, g51), gauss, 1.0), analyse_synthesise(h, gauss, gauss, g51, 1.0)) <=
        1e-12);
}

TEST_CASE("forward is linear") {
  const HaarGrid grid = transform_grid(GroupModel::affine_1d(), {}, {.scales = 8}, kLine);
  const Wavelet psi = make_wavelet("mexican_hat_1d", kLine);
  const SampledSignal f = sample("gaussian", kLine), g = sample("chirp_1d", kLine);
  const Complex alpha{1.5, -0.5}, beta{-0.25, 2.0};
  const CoefficientField wf = forward(f, psi, grid), wg = forward(g, psi, grid);
  const CoefficientField ws = forward(alpha * f + beta * g, psi, grid);
  double worst = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(ws.values[i] - alpha * wf.values[i] - beta * wg.values[i]));
    peak = std::max(peak, std::abs(ws.values[i]));
  }
  CHECK(worst <= 1e-12 * peak);
}

TEST_CASE("covariance W(pi(h) f)(g) = W f(h^-1 g)") {
  const GroupModel m = GroupModel::similitude();
  WindowSpec w;
  w.scale = {0.6, 1.6};
  const HaarGrid grid = transform_grid(m, w, {.scales = 2, .angles = 4}, kPlane);
  const Wavelet psi = make_wavelet("mexican_hat_2d", kPlane);
  const SignalModel f = catalog_model("mexican_hat_2d", 2);
  const GroupPoint h{{1.2, 0.4, 0.5, -0.25}};
  const CoefficientField moved = forward(act(h, f, m).sample(kPlane), psi, grid);
  const SampledSignal fs = f.sample(kPlane);
  const std::size_t T = grid.translation_count();
  REQUIRE(T == 256 * 256);
  const double scale = norm(fs) * norm(psi.samples);
  for (std::size_t p = 0; p < grid.b_count(); ++p)
    for (const auto [i, j] : {std::pair{136, 133}, {116, 137}, {128, 168}}) {
      const std::size_t t = static_cast<std::size_t>(i) * 256 + static_cast<std::size_t>(j);
      const GroupPoint g = grid.node(p * T + t);
      CHECK(std::abs(moved.at(p, t) - direct(fs, psi, m.compose(m.inverse(h), g), m)) <= 1e-7 * scale);
    }
}

TEST_CASE("isometry defect on a band-covering window") {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice line = Lattice::centered(1, 512, 16.0);
  const Wavelet psi = make_wavelet("bump_1d", line);
  const double c = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {.scales = 48}, line);
  const SampledSignal f = sample("bandlimited_1d", line);
  const SampledSignal g = act(GroupPoint{{1.3, 0.7}}, catalog_model("bandlimited_1d", 1), m).sample(line);
  const IsometryReport r = isometry(f, g, psi, grid, c);
  CHECK(r.defect <= 1e-2);
  CHECK(r.energy_ratio == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(r.boundary_fraction < 1e-6);

  WindowSpec narrow;
  narrow.scale = {0.5, 1.0};
  CHECK_THROWS_AS(isometry(f, g, psi, transform_grid(m, narrow, {.scales = 8}, line), c), WindowTooSmall);
}

TEST_CASE("isometry defect shrinks with grid resolution") {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice line = Lattice::centered(1, 512, 16.0);
  const Wavelet psi = make_wavelet("bump_1d", line);
  const double c = admissibility_constant(psi, m).constant;
  const SampledSignal f = sample("bandlimited_1d", line);
  double prev = 1.0;
  for (std::size_t s : {8u, 16u, 32u}) {
    const double d = isometry_defect(f, f, psi, transform_grid(m, {}, {.scales = s}, line), c);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("truncated reconstruction matches the Fourier multiplier") {
  SUBCASE("affine-1d") {
    const GroupModel m = GroupModel::affine_1d();
    const Wavelet psi1 = make_wavelet("bump_1d", kLine), psi2 = make_wavelet("bandlimited_1d", kLine);
    const Complex c = pair_constant(psi1, psi2, m).cross_constant;
    const SampledSignal f = sample("bandlimited_1d", kLine);
    const SampledSignal grid_route = truncated_reconstruct(f, psi1, psi2, 0.5, 2.0, m, c, {.scales = 32});
    const SampledSignal mult_route = multiplier_reconstruct(f, psi1, psi2, 0.5, 2.0, m, c);
    CHECK(rel_l2(grid_route, mult_route) <= 2e-3);
  }
  SUBCASE("similitude") {
    const GroupModel m = GroupModel::similitude();
    const Lattice plane = Lattice::centered(2, 64, 8.0);
    const Wavelet psi = make_wavelet("radial_bandlimited_2d", plane);
    const double c = admissibility_constant(psi, m).constant;
    const SampledSignal f = sample("radial_bandlimited_2d", plane);
    const SampledSignal grid_route = truncated_reconstruct(f, psi, psi, 0.7, 1.5, m, c, {.scales = 16, .angles = 8}, 1);
    const SampledSignal mult_route = multiplier_reconstruct(f, psi, psi, 0.7, 1.5, m, c);
    CHECK(rel_l2(grid_route, mult_route) <= 2e-3);
  }
  const SampledSignal f = sample("gaussian", kLine);
  const Wavelet psi = make_wavelet("bump_1d", kLine);
  CHECK_THROWS_AS(truncated_reconstruct(f, psi, psi, 2.0, 1.0, GroupModel::affine_1d(), 1.0), BadBand);
  CHECK_THROWS_AS(truncated_reconstruct(f, psi, psi, 0.0, 1.0, GroupModel::affine_1d(), 1.0), BadBand);
  CHECK_THROWS_AS(multiplier_reconstruct(f, psi, psi, 1.0, 1.0, GroupModel::affine_1d(), 1.0), BadBand);
}

TEST_CASE("approximation error decreases with the band and respects the tail bound") {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice line = Lattice::centered(1, 512, 16.0);
  const Wavelet psi = make_wavelet("bump_1d", line);
  const double c = admissibility_constant(psi, m).constant;
  const SignalModel f = catalog_model("bandlimited_1d", 1);
  const GroupPoint g{{1.4, 0.3}};
  const double peak = hap_error(f, line, psi, psi, g, 1.0, 1.0, m, c);
  CHECK(peak == doctest::Approx(sup_norm(act(g, f, m).sample(line))));
  double prev = peak;
  for (const auto [a1, a2] : {std::pair{0.7, 1.4}, {0.5, 2.0}, {0.25, 4.0}}) {
    const double e = hap_error(f, line, psi, psi, g, a1, a2, m, c);
    const double bound = hap_bound(f, line, psi, psi, a1, a2, 1.0, m, c);
    CAPTURE(a1);
    CHECK(e <= prev);
    // Slack covers the B-grid quadrature of the truncated term.
    CHECK(e <= bound + 5e-3 * peak);
    prev = e;
  }
  CHECK(prev <= 5e-3 * peak);
}

TEST_CASE("forward rejects mismatched grids and non-admissible wavelets") {
  const HaarGrid grid = transform_grid(GroupModel::affine_1d(), {}, {.scales = 4}, kLine);
  const Wavelet psi = make_wavelet("gaussian", kLine);
  CHECK_THROWS_AS(forward(sample("gaussian", Lattice::centered(1, 128, 8.0)), psi, grid), LatticeMismatch);
  AdmissibilityReport bad;
  bad.admissible = false;
  CHECK_THROWS_AS(forward(sample("gaussian", kLine), psi, grid, bad), NotAdmissible);
  PairReport pair;
  CHECK_THROWS_AS(reconstruct(forward(sample("gaussian", kLine), psi, grid), psi, pair), NotAdmissiblePair);
}
