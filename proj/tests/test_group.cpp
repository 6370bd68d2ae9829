// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gcwt/group.hpp"

using namespace gcwt;

namespace {

std::vector<GroupModel> all_models() {
  return {GroupModel::affine_1d(),       GroupModel::diag_2d(),         GroupModel::diag_2d(true),
          GroupModel::upper_tri_2d(),    GroupModel::upper_tri_2d(true), GroupModel::shear(),
          GroupModel::similitude(),      GroupModel::weyl_heisenberg(1), GroupModel::weyl_heisenberg(2),
          GroupModel::g51()};
}

GroupPoint random_point(const GroupModel& m, std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::uniform_real_distribution<double> logs(-0.7 * spread, 0.7 * spread);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::bernoulli_distribution sign(0.5);
  auto scale = [&] { return std::exp(logs(rng)); };
  auto signed_scale = [&] { return (m.full_domain() && sign(rng) ? -1.0 : 1.0) * scale(); };
  switch (m.kind()) {
    case GroupKind::Affine1D: return {{scale(), u(rng)}};
    case GroupKind::Similitude: return {{scale(), ang(rng), u(rng), u(rng)}};
    case GroupKind::Diag2D: return {{signed_scale(), signed_scale(), u(rng), u(rng)}};
    case GroupKind::UpperTri2D: return {{signed_scale(), u(rng), u(rng), u(rng)}};
    case GroupKind::Shear: return {{scale(), u(rng), u(rng), u(rng)}};
    case GroupKind::WeylHeisenberg: {
      GroupPoint g{std::vector<double>(2 * m.dim_base() + 1)};
      for (std::size_t i = 0; i < 2 * m.dim_base(); ++i) g.params[i] = u(rng);
      g.params.back() = ang(rng);
      return g;
    }
    case GroupKind::G51: return {{ang(rng), u(rng), u(rng), u(rng), u(rng)}};
  }
  return {};
}

bool is_angle(const GroupModel& m, std::size_t i) {
  switch (m.kind()) {
    case GroupKind::Similitude: return i == 1;
    case GroupKind::WeylHeisenberg: return i == 2 * m.dim_base();
    case GroupKind::G51: return i == 0;
    default: return false;
  }
}

double coord_distance(const GroupModel& m, const GroupPoint& a, const GroupPoint& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    double diff = std::abs(a.params[i] - b.params[i]);
    if (is_angle(m, i)) diff = std::min(diff, kTwoPi - diff);
    d = std::max(d, diff / std::max(1.0, std::abs(b.params[i])));
  }
  return d;
}

// Independent oracle for the affine kinds: the group is {[[M, t], [0, 1]]} with M built
// directly from the coordinates.
using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 affine_matrix(const GroupModel& m, const GroupPoint& g) {
  const auto& p = g.params;
  Mat3 r{};
  r[2][2] = 1.0;
  switch (m.kind()) {
    case GroupKind::Affine1D:
      r = {{{p[0], p[1], 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
      return r;
    case GroupKind::Similitude:
      r[0] = {p[0] * std::cos(p[1]), -p[0] * std::sin(p[1]), p[2]};
      r[1] = {p[0] * std::sin(p[1]), p[0] * std::cos(p[1]), p[3]};
      return r;
    case GroupKind::Diag2D:
      r[0] = {p[0], 0.0, p[2]};
      r[1] = {0.0, p[1], p[3]};
      return r;
    case GroupKind::UpperTri2D:
      r[0] = {p[0], p[1], p[2]};
      r[1] = {0.0, 1.0, p[3]};
      return r;
    case GroupKind::Shear: {
      // S_s A_a with A_a = diag(a, sqrt a).
      const double q = std::sqrt(p[0]);
      r[0] = {p[0], p[1] * q, p[2]};
      r[1] = {0.0, q, p[3]};
      return r;
    }
    default: return r;
  }
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double rel_l2(const SampledSignal& a, const SampledSignal& b) { return norm(a - b) / norm(b); }

}  // namespace

TEST_CASE("compose examples") {
  const auto sim = GroupModel::similitude();
  const GroupPoint g{{1.7, 0.4, 0.3, -0.2}};
  CHECK(coord_distance(sim, sim.compose(sim.identity(), g), g) == 0.0);

  const GroupPoint h{{0.6, 5.9, -1.1, 0.8}};
  const auto gh = sim.compose(g, h);
  const double c = std::cos(0.4), s = std::sin(0.4);
  const GroupPoint expect{{1.7 * 0.6, std::fmod(0.4 + 5.9, kTwoPi), 0.3 + 1.7 * (c * -1.1 - s * 0.8),
                           -0.2 + 1.7 * (s * -1.1 + c * 0.8)}};
  CHECK(coord_distance(sim, gh, expect) <= 1e-14);

  // Shear law for n = 2: s + |a|^{1/2} s', t + S_s A_a t'.
  const auto sh = GroupModel::shear();
  const GroupPoint a{{2.0, 0.5, 1.0, -1.0}};
  const GroupPoint b{{3.0, -0.25, 0.5, 2.0}};
  const auto ab = sh.compose(a, b);
  const double r = std::sqrt(2.0);
  const GroupPoint expect_sh{{6.0, 0.5 - 0.25 * r, 1.0 + 2.0 * 0.5 + 0.5 * r * 2.0, -1.0 + r * 2.0}};
  CHECK(coord_distance(sh, ab, expect_sh) <= 1e-14);
}

TEST_CASE("inverse examples") {
  const auto aff = GroupModel::affine_1d();
  const auto gi = aff.inverse({{4.0, 2.0}});
  CHECK(gi.params[0] == doctest::Approx(0.25));
  CHECK(gi.params[1] == doctest::Approx(-0.5));

  const auto sim = GroupModel::similitude();
  CHECK(coord_distance(sim, sim.inverse(sim.identity()), sim.identity()) == 0.0);

  const auto d = GroupModel::diag_2d();
  const auto di = d.inverse({{2.0, 3.0, 1.0, 1.0}});
  CHECK(coord_distance(d, di, {{0.5, 1.0 / 3.0, -0.5, -1.0 / 3.0}}) <= 1e-15);
}

TEST_CASE("group laws: associativity, inverses, matrix oracle") {
  std::mt19937_64 rng(11);
  for (const auto& m : all_models()) {
    INFO(m.name());
    double assoc = 0.0, inv = 0.0, matrix = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_point(m, rng), h = random_point(m, rng), k = random_point(m, rng);
      assoc = std::max(assoc, coord_distance(m, m.compose(m.compose(g, h), k), m.compose(g, m.compose(h, k))));
      inv = std::max(inv, coord_distance(m, m.compose(g, m.inverse(g)), m.identity()));
      inv = std::max(inv, coord_distance(m, m.compose(m.inverse(g), g), m.identity()));
      CHECK(m.valid(m.compose(g, h)));
      if (!m.has_phase()) {
        const Mat3 lhs = affine_matrix(m, m.compose(g, h));
        const Mat3 rhs = mul(affine_matrix(m, g), affine_matrix(m, h));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) matrix = std::max(matrix, std::abs(lhs[i][j] - rhs[i][j]));
      }
    }
    CHECK(assoc <= 1e-12);
    CHECK(inv <= 1e-12);
    CHECK(matrix <= 1e-12);
  }
}

TEST_CASE("group law matches the representation pointwise") {
  // pi(gh) f = pi(g) pi(h) f evaluated exactly through closed-form f.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const auto& m : all_models()) {
    INFO(m.name());
    const auto f = catalog_model("chirp_1d");
    const PointFn base = m.dim_base() == 1
                             ? f.spatial
                             : PointFn([&](std::span<const double> x) {
                                 const double x0[1] = {x[0]}, x1[1] = {0.7 * x[1] - 0.2};
                                 return f.spatial(x0) * std::conj(f.spatial(x1));
                               });
    double err = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_point(m, rng), h = random_point(m, rng);
      const PointFn inner_fn = [&](std::span<const double> y) { return m.represent_spatial(h, base, y); };
      std::vector<double> x(m.dim_base());
      for (auto& xi : x) xi = u(rng);
      const Complex lhs = m.represent_spatial(m.compose(g, h), base, x);
      const Complex rhs = m.represent_spatial(g, inner_fn, x);
      err = std::max(err, std::abs(lhs - rhs));
    }
    CHECK(err <= 1e-10);
  }
}

TEST_CASE("modular data") {
  std::mt19937_64 rng(3);
  for (const auto& m : all_models()) {
    INFO(m.name());
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = random_point(m, rng), h = random_point(m, rng);
      const auto bg = m.b_part(g), bh = m.b_part(h), bgh = m.b_part(m.compose(g, h));
      const double lhs = m.delta_tau(bgh);
      const double rhs = m.delta_tau(bg) * m.delta_tau(bh);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
      CHECK(m.haar_density(g) > 0.0);
      // amplitude^2 * Haar density = B-part Haar density.
      CHECK(m.amplitude(bg) * m.amplitude(bg) * m.haar_density(g) ==
            doctest::Approx(m.b_haar_density(bg)).epsilon(1e-12));
    }
  }
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(GroupModel::affine_1d().check({{-1.0, 0.0}}), DomainError);
  CHECK_THROWS_AS(GroupModel::affine_1d().check({{1.0}}), DomainError);
  CHECK_THROWS_AS(GroupModel::similitude().check({{1.0, 7.0, 0.0, 0.0}}), DomainError);
  CHECK_THROWS_AS(GroupModel::diag_2d().check({{1.0, -2.0, 0.0, 0.0}}), DomainError);
  CHECK_NOTHROW(GroupModel::diag_2d(true).check({{1.0, -2.0, 0.0, 0.0}}));
  CHECK_THROWS_AS(GroupModel::parse("lorentz"), ConfigError);
  CHECK(GroupModel::parse("Weyl_Heisenberg") == GroupModel::weyl_heisenberg(1));
  CHECK(GroupModel::parse("weyl-heisenberg", 2).dim_base() == 2);
  CHECK_THROWS_AS(GroupModel::parse("shear", 3), ConfigError);
}

TEST_CASE("analytic action: spectral and spatial forms agree") {
  std::mt19937_64 rng(21);
  for (const auto& m : all_models()) {
    INFO(m.name());
    const std::size_t n = m.dim_base();
    const auto lattice = n == 1 ? Lattice::centered(1, 1024, 16.0) : Lattice::centered(2, 256, 8.0);
    const auto f = catalog_model(n == 1 ? "chirp_1d" : "gaussian_2d");
    for (int trial = 0; trial < 3; ++trial) {
      const auto g = random_point(m, rng, 0.8);
      const auto moved = act(g, f, m);
      const Spectrum s = fourier(moved.sample(lattice));
      std::vector<double> w(n);
      double err = 0.0, peak = 0.0;
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        s.freq.point(i, w);
        const Complex exact = moved.spectrum(w);
        err = std::max(err, std::abs(s.values[i] - exact));
        peak = std::max(peak, std::abs(exact));
      }
      CHECK(err <= 1e-6 * peak);
    }
  }
}

TEST_CASE("sampled action") {
  const auto l1 = Lattice::centered(1, 256, 8.0);
  const auto gauss = catalog("gaussian", l1);
  const auto aff = GroupModel::affine_1d();

  const auto same = act(aff.identity(), gauss, aff);
  for (std::size_t i = 0; i < same.size(); ++i) CHECK(same[i] == gauss[i]);

  // Dilation by 2 keeps the norm; oracle is the closed-form dilated Gaussian.
  const auto dilated = act(GroupPoint{{2.0, 0.0}}, gauss, aff);
  CHECK(norm(dilated) / norm(gauss) == doctest::Approx(1.0).epsilon(1e-3));
  const auto fine = Lattice::centered(1, 1024, 8.0);
  const auto exact = act(GroupPoint{{2.0, 0.0}}, catalog_model("gaussian"), aff).sample(fine);
  CHECK(rel_l2(act(GroupPoint{{2.0, 0.0}}, catalog("gaussian", fine), aff), exact) <= 1e-3);

  // Modulation only changes the phase.
  const auto wh = GroupModel::weyl_heisenberg();
  const auto mod = act(GroupPoint{{0.0, 1.3, 0.0}}, gauss, wh);
  for (std::size_t i = 0; i < mod.size(); ++i) CHECK(std::abs(mod[i]) == doctest::Approx(std::abs(gauss[i])));

  CHECK_THROWS_AS(act(GroupPoint{{1.0, 12.0}}, gauss, aff), ResampleError);
}

TEST_CASE("sampled representation property converges") {
  std::mt19937_64 rng(8);
  for (const auto& m : all_models()) {
    INFO(m.name());
    const std::size_t n = m.dim_base();
    std::vector<double> errs;
    const auto g = random_point(m, rng, 0.5), h = random_point(m, rng, 0.5);
    for (std::size_t N : {std::size_t{128}, std::size_t{256}}) {
      const auto l = Lattice::centered(n, N, 8.0);
      const auto f = catalog(n == 1 ? "gaussian" : "gaussian_2d", l);
      const auto lhs = act(m.compose(g, h), f, m);
      const auto rhs = act(g, act(h, f, m), m);
      errs.push_back(rel_l2(lhs, rhs));
      CHECK(norm(lhs) == doctest::Approx(norm(f)).epsilon(1e-2));
    }
    CHECK(errs[1] <= 5e-2);
    CHECK(errs[1] <= errs[0]);
  }
}

TEST_CASE("Haar grid totals") {
  WindowSpec w;
  w.scale = {1.0, std::exp(1.0)};
  w.translation = {{0.0, 1.0}};
  GridSpec r;
  r.scales = 7;
  r.translations = 5;
  const auto g1 = haar_grid(GroupModel::affine_1d(), w, r);
  CHECK(g1.size() == 35);
  CHECK(g1.total_weight() == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  auto ws = g1.weights();
  double sum = 0.0;
  for (double x : ws) {
    CHECK(x > 0.0);
    sum += x;
  }
  CHECK(sum == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

  w.scale = {1.0, 2.0};
  w.translation = {{0.0, 1.0}, {0.0, 1.0}};
  r.angles = 9;
  const auto g2 = haar_grid(GroupModel::similitude(), w, r);
  CHECK(g2.total_weight() == doctest::Approx(kTwoPi * 3.0 / 8.0).epsilon(1e-12));

  // Diag2D over the full scale domain doubles each scale axis.
  const auto g3 = haar_grid(GroupModel::diag_2d(true), w, r);
  CHECK(g3.total_weight() == doctest::Approx(4.0 * 0.25).epsilon(1e-12));

  WindowSpec empty = w;
  empty.translation[0] = {1.0, 1.0};
  CHECK_THROWS_AS(haar_grid(GroupModel::similitude(), empty, r), EmptyGridError);
  WindowSpec bad = w;
  bad.scale = {0.0, 1.0};
  CHECK_THROWS_AS(haar_grid(GroupModel::similitude(), bad, r), DomainError);
  GridSpec zero = r;
  zero.scales = 0;
  CHECK_THROWS_AS(haar_grid(GroupModel::similitude(), w, zero), EmptyGridError);
}

TEST_CASE("Haar grid is left invariant") {
  // F is a smooth bump in every coordinate, well inside the window.
  for (const auto& m : all_models()) {
    if (m.full_domain()) continue;
    INFO(m.name());
    const std::size_t n = m.dim_base();
    WindowSpec w;
    w.scale = {0.25, 4.0};
    w.shear = {-3.0, 3.0};
    w.modulation = {-3.0, 3.0};
    w.translation.assign(n, {-3.0, 3.0});
    GridSpec r;
    r.scales = 32;
    r.angles = 16;
    r.shears = 32;
    r.modulations = 32;
    r.translations = 32;
    const auto grid = haar_grid(m, w, r);
    auto F = [&](const GroupPoint& g) {
      double v = 1.0;
      const auto b = m.b_part(g);
      const auto x = m.translation(g);
      for (std::size_t i = 0; i < b.size(); ++i) {
        const bool scale = !m.has_phase() && (i == 0 || m.kind() == GroupKind::Diag2D);
        const bool angle = m.kind() == GroupKind::Similitude && i == 1;
        if (scale) v *= bump(std::log(b[i]), -0.8, 0.8);
        else if (!angle) v *= bump(b[i], -1.2, 1.2);
      }
      for (double xi : x) v *= bump(xi, -1.2, 1.2);
      return v;
    };
    std::mt19937_64 rng(2);
    const auto s = random_point(m, rng, 0.25);
    double base = 0.0, shifted = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto g = grid.node(i);
      base += grid.weight(i) * F(g);
      shifted += grid.weight(i) * F(m.compose(s, g));
    }
    CHECK(base > 0.0);
    CHECK(std::abs(shifted - base) <= 1e-2 * base);
  }
}

TEST_CASE("transform grid translations are the centred padded lattice") {
  const auto l = Lattice::centered(1, 64, 4.0);
  const auto g = transform_grid(GroupModel::affine_1d(), WindowSpec{}, GridSpec{}, l, 2);
  CHECK(g.translation_count() == 128);
  CHECK(g.translations.origin[0] == doctest::Approx(-64 * l.spacing[0]));
  const auto node = g.node(64);
  CHECK(node.params[1] == doctest::Approx(0.0));
  CHECK(g.b_count() == 32);
}
