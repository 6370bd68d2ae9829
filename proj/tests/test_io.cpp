// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gcwt/io.hpp"

using namespace gcwt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("gcwt_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

SampledSignal random_signal(const Lattice& l, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  std::vector<Complex> v(l.size());
  for (auto& z : v) z = {n(rng), n(rng)};
  return SampledSignal(l, std::move(v));
}

void expect_identical(const SampledSignal& a, const SampledSignal& b) {
  REQUIRE(a.lattice() == b.lattice());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

}  // namespace

TEST_CASE("sidecar round trip is bit exact") {
  TempDir dir;
  Lattice l;
  l.shape = {5, 7};
  l.origin = {-1.25, 0.5};
  l.spacing = {0.5, 0.125};
  const SampledSignal f = random_signal(l, 3);
  save_signal(f, dir.path / "f.json");
  CHECK(fs::file_size(dir.path / "f.c128") == 16 * 35);
  expect_identical(load_signal(dir.path / "f.json"), f);

  // Payload layout: little-endian interleaved (re, im), row-major.
  std::ifstream raw(dir.path / "f.c128", std::ios::binary);
  double first[2];
  raw.read(reinterpret_cast<char*>(first), sizeof first);
  CHECK(first[0] == f[0].real());
  CHECK(first[1] == f[0].imag());
}

TEST_CASE("CSV round trip and import errors") {
  TempDir dir;
  const SampledSignal f = random_signal(Lattice::centered(2, 4, 1.0), 9);
  write_signal_csv(f, dir.path / "f.csv");
  expect_identical(load_signal(dir.path / "f.csv"), f);

  {
    std::ofstream out(dir.path / "short.csv");
    out << "x,re,im\n0,1,0\n1,2,0\n3,3,0\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "short.csv"), IoError);
  {
    std::ofstream out(dir.path / "hole.csv");
    out << "0,0,1,0\n0,1,1,0\n1,0,1,0\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "hole.csv"), IoError);
  {
    std::ofstream out(dir.path / "bad.csv");
    out << "x,re,im\n0,1,0\n1,abc,0\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "bad.csv"), IoError);
  CHECK_THROWS_AS(load_signal(dir.path / "missing.json"), IoError);
}

TEST_CASE("truncated payload is rejected") {
  TempDir dir;
  const SampledSignal f = random_signal(Lattice::centered(1, 16, 1.0), 1);
  save_signal(f, dir.path / "f.json");
  fs::resize_file(dir.path / "f.c128", 100);
  CHECK_THROWS_AS(load_signal(dir.path / "f.json"), IoError);
}

TEST_CASE("coefficient field round trip reconstructs identically") {
  TempDir dir;
  const Lattice line = Lattice::centered(1, 64, 4.0);
  const GroupModel m = GroupModel::affine_1d();
  const Wavelet psi = make_wavelet("mexican_hat_1d", line);
  const HaarGrid grid = transform_grid(m, {}, {.scales = 8}, line);
  const CoefficientField field = forward(catalog_model("bump_1d", 1).sample(line), psi, grid);
  save_field(field, dir.path / "w.json");
  const CoefficientField back = load_field(dir.path / "w.json");
  CHECK(back.values == field.values);
  CHECK(back.grid.b_nodes == field.grid.b_nodes);
  CHECK(back.grid.b_weights == field.grid.b_weights);
  CHECK(back.grid.b_boundary == field.grid.b_boundary);
  CHECK(back.grid.translations == field.grid.translations);
  CHECK(back.grid.model == field.grid.model);
  CHECK(back.wavelet_id == field.wavelet_id);
  CHECK(back.signal_lattice == field.signal_lattice);
  expect_identical(reconstruct(back, psi, Complex{1.0}), reconstruct(field, psi, Complex{1.0}));
}
