// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include <cmath>

#include "doctest.h"
#include "gcwt/inequality.hpp"
#include "gcwt/quadrature.hpp"

using namespace gcwt;

namespace {

const Lattice kLine = Lattice::centered(1, 512, 16.0);

SampledSignal sample(std::string_view name, const Lattice& l) { return catalog_model(name, l.dim()).sample(l); }

}  // namespace

TEST_CASE("Gaussian Weyl-Heisenberg support fills every window") {
  const Lattice line = Lattice::centered(1, 256, 8.0);
  const Wavelet g = make_wavelet("gaussian", line);
  WindowSpec w;
  w.modulation = {-2.0, 2.0};
  const HaarGrid grid = transform_grid(GroupModel::weyl_heisenberg(1), w, {.modulations = 16}, line);
  // |W| = ||g||^2 exp(-pi (x^2 + b^2) / 2) > 1e-6 max whenever x^2 + b^2 <= 8.
  const SupportProfile s = support_growth(g.samples, g, grid, {0.5, 1.0, 2.0});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.window_measure[i] > 0.0);
    CHECK(s.support_measure[i] == doctest::Approx(s.window_measure[i]).epsilon(1e-12));
  }
  CHECK(s.window_measure[1] == doctest::Approx(2.0 * s.window_measure[0]).epsilon(0.05));
}

TEST_CASE("Affine support grows with the translation window") {
  const Lattice line = Lattice::centered(1, 256, 8.0);
  const Wavelet psi = make_wavelet("mexican_hat_1d", line);
  const HaarGrid grid = transform_grid(GroupModel::affine_1d(), {}, {}, line);
  const SupportProfile s = support_growth(sample("bandlimited_1d", line), psi, grid, {1.0, 2.0, 4.0, 8.0});
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(s.support_measure[i] >= s.support_measure[i - 1]);
    CHECK(s.support_measure[i] >= 1.6 * s.support_measure[i - 1]);
    CHECK(s.support_measure[i] <= s.window_measure[i]);
  }
  const SupportProfile zero = support_growth(SampledSignal::zeros(line), psi, grid, {1.0, 2.0});
  CHECK(zero.support_measure[0] == 0.0);
  CHECK(zero.support_measure[1] == 0.0);
  CHECK_THROWS_AS(support_growth(sample("gaussian", line), psi, grid, {2.0, 1.0}), DomainError);
}

TEST_CASE("concentration certificates at the extremes") {
  const GroupModel m = GroupModel::affine_1d();
  const Wavelet psi = make_wavelet("bump_1d", kLine);
  const double c = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {}, kLine);
  const SampledSignal f = sample("bandlimited_1d", kLine);
  const CoefficientField field = forward(f, psi, grid);
  const double scale = std::sqrt(c) * norm(f);

  const ConcentrationCertificate empty = concentration(field, {}, c, norm(psi.samples));
  CHECK(empty.set_measure == 0.0);
  CHECK(empty.applicable);
  CHECK(empty.lhs == doctest::Approx(scale).epsilon(2e-2));
  CHECK(empty.rhs == doctest::Approx(scale).epsilon(1e-12));
  CHECK(std::abs(empty.margin) <= 2e-2 * scale);

  std::vector<std::size_t> all(grid.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const ConcentrationCertificate full = concentration(field, all, c, norm(psi.samples));
  CHECK_FALSE(full.applicable);
  CHECK(full.lhs == 0.0);
}

TEST_CASE("random small sets obey the concentration bound") {
  const GroupModel m = GroupModel::affine_1d();
  const Wavelet psi = make_wavelet("bump_1d", kLine);
  const double c = admissibility_constant(psi, m).constant;
  WindowSpec w;
  w.scale = {1.0 / 16.0, 64.0};
  const HaarGrid grid = transform_grid(m, w, {.scales = 64}, kLine);
  const double budget = 0.5 * std::sqrt(c) / norm(psi.samples);
  std::mt19937_64 rng(11);
  for (const char* name : {"bump_1d", "chirp_1d", "mexican_hat_1d"}) {
    const SampledSignal f = sample(name, kLine);
    const CoefficientField field = forward(f, psi, grid);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<std::size_t> M = random_node_set(grid, budget, rng);
      const ConcentrationCertificate cert = concentration(field, M, c, norm(psi.samples));
      CHECK(cert.set_measure <= budget);
      CHECK(cert.applicable);
      CHECK(cert.margin >= -1e-2 * std::sqrt(c) * norm(f));
    }
  }
}

TEST_CASE("kernel projection norm") {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice line = Lattice::centered(1, 256, 8.0);
  const Wavelet psi = make_wavelet("bump_1d", line);
  const double c = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {}, line);
  const KernelTable table = kernel_table(psi, grid, c);
  const std::vector<bool> inside = table.interior();
  const std::size_t T = grid.translation_count();

  CHECK(kernel_projection_norm(table, grid, {}).hs_norm_sq == 0.0);

  // One node: compare with the field energy of W(pi(g) psi) computed directly.
  std::size_t p = 0;
  while (!inside[p]) ++p;
  p += 4;
  REQUIRE(inside[p]);
  const std::size_t node = p * T + T / 2 + 3;
  const std::size_t single[] = {node};
  const KernelReport one = kernel_projection_norm(table, grid, single);
  const SampledSignal moved = act(grid.node(node), psi.model, m).sample(line);
  const double direct = grid.weight(node) * forward(moved, psi, grid).energy() / (c * c);
  CHECK(one.hs_norm_sq == doctest::Approx(direct).epsilon(1e-6));
  CHECK(one.hs_norm_sq == doctest::Approx(one.expected).epsilon(2e-2));

  // Additivity over disjoint sets.
  std::mt19937_64 rng(5);
  const std::vector<std::size_t> a = random_node_set(grid, 0.3, rng, &inside);
  std::vector<std::size_t> b;
  for (std::size_t i : random_node_set(grid, 0.3, rng, &inside))
    if (!std::binary_search(a.begin(), a.end(), i)) b.push_back(i);
  std::vector<std::size_t> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const double sum = kernel_projection_norm(table, grid, a).hs_norm_sq + kernel_projection_norm(table, grid, b).hs_norm_sq;
  CHECK(kernel_projection_norm(table, grid, both).hs_norm_sq == doctest::Approx(sum).epsilon(1e-10));
  CHECK(kernel_projection_norm(table, grid, both).rel_error <= 2e-2);
}

TEST_CASE("Heisenberg-type product for a Gaussian") {
  const GroupModel m = GroupModel::affine_1d();
  const Wavelet psi = make_wavelet("mexican_hat_1d", kLine);
  const double c = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {}, kLine);
  const SignalModel gauss = catalog_model("gaussian", 1);
  const SampledSignal f = gauss.sample(kLine);
  const UncertaintyCertificate u = uncertainty(f, psi, grid, c);
  CHECK(u.product >= u.bound);
  CHECK(u.ratio == doctest::Approx(u.product / u.bound));

  // Oracle: int |2 pi w|^2 |f^(w)|^2 dw from the closed-form spectrum.
  const double fd = quad::simpson<double>(
      [&](double w) {
        const double p[1] = {w};
        return std::pow(kTwoPi * w, 2) * std::norm(gauss.spectrum(p));
      },
      -8.0, 8.0, {64, 1e-12, 30});
  CHECK(u.freq_dispersion == doctest::Approx(std::sqrt(fd)).epsilon(1e-9));

  // Homogeneity: product and bound scale by |c|^2.
  const UncertaintyCertificate s = uncertainty(Complex{0.0, 3.0} * f, psi, grid, c);
  CHECK(s.product == doctest::Approx(9.0 * u.product).epsilon(1e-10));
  CHECK(s.bound == doctest::Approx(9.0 * u.bound).epsilon(1e-10));
  CHECK(s.ratio == doctest::Approx(u.ratio).epsilon(1e-10));
}

TEST_CASE("high-frequency chirp keeps a large Heisenberg margin") {
  const GroupModel m = GroupModel::affine_1d();
  const Wavelet psi = make_wavelet("mexican_hat_1d", kLine);
  const double c = admissibility_constant(psi, m).constant;
  const HaarGrid grid = transform_grid(m, {}, {}, kLine);
  const UncertaintyCertificate u = uncertainty(sample("chirp_1d", kLine), psi, grid, c);
  CHECK(u.ratio > 2.0);
}

TEST_CASE("uncertainty rejects a translation window that cuts the coefficients") {
  const GroupModel m = GroupModel::affine_1d();
  const Lattice tiny = Lattice::centered(1, 64, 2.0);
  const Wavelet psi = make_wavelet("mexican_hat_1d", tiny);
  CHECK_THROWS_AS(uncertainty(sample("gaussian", tiny), psi, transform_grid(m, {}, {}, tiny), 1.0), WindowTooSmall);
}
