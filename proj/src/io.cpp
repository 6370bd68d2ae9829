// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace gcwt {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
  return v;
}

void write_payload(const fs::path& path, std::span<const Complex> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  std::vector<std::uint64_t> buf(2 * values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double re = values[i].real(), im = values[i].imag();
    buf[2 * i] = to_little(std::bit_cast<std::uint64_t>(re));
    buf[2 * i + 1] = to_little(std::bit_cast<std::uint64_t>(im));
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 8));
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<Complex> read_payload(const fs::path& path, std::size_t count) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot read payload " + path.string());
  const auto bytes = static_cast<std::size_t>(in.tellg());
  if (bytes != 16 * count)
    throw IoError(path.string() + " holds " + std::to_string(bytes) + " bytes, expected " +
                  std::to_string(16 * count));
  in.seekg(0);
  std::vector<std::uint64_t> buf(2 * count);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes));
  if (!in) throw IoError("failed reading " + path.string());
  std::vector<Complex> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = {std::bit_cast<double>(to_little(buf[2 * i])), std::bit_cast<double>(to_little(buf[2 * i + 1]))};
  return v;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

fs::path payload_path(const fs::path& sidecar) {
  fs::path p = sidecar;
  return p.replace_extension(".c128");
}

template <class T>
T field_of(const json& j, const char* key, const fs::path& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(where.string() + ": bad or missing '" + key + "' (" + e.what() + ")");
  }
}

std::vector<Complex> load_values(const json& j, const fs::path& sidecar, std::size_t count) {
  if (field_of<std::string>(j, "dtype", sidecar) != "c128") throw IoError(sidecar.string() + ": dtype must be c128");
  const fs::path payload = sidecar.parent_path() / field_of<std::string>(j, "payload", sidecar);
  return read_payload(payload, count);
}

}  // namespace

ordered_json lattice_json(const Lattice& l) {
  return ordered_json{{"shape", l.shape}, {"origin", l.origin}, {"spacing", l.spacing}};
}

Lattice lattice_from_json(const json& j) {
  Lattice l;
  try {
    l.shape = j.at("shape").get<std::vector<std::size_t>>();
    l.origin = j.at("origin").get<std::vector<double>>();
    l.spacing = j.at("spacing").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw IoError(std::string("bad lattice description: ") + e.what());
  }
  if (l.origin.size() != l.shape.size() || l.spacing.size() != l.shape.size())
    throw IoError("lattice shape, origin and spacing differ in length");
  try {
    l.validate();
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
  return l;
}

void save_signal(const SampledSignal& f, const fs::path& sidecar) {
  const fs::path payload = payload_path(sidecar);
  ordered_json j = lattice_json(f.lattice());
  j["dtype"] = "c128";
  j["payload"] = payload.filename().string();
  write_payload(payload, f.values());
  write_json(sidecar, j);
}

SampledSignal load_signal(const fs::path& path) {
  if (path.extension() == ".csv") return read_signal_csv(path);
  const json j = read_json(path);
  const Lattice l = lattice_from_json(j);
  return SampledSignal(l, load_values(j, path, l.size()));
}

SampledSignal read_signal_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::vector<double> row;
    std::string tok;
    bool numeric = true;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) numeric = false;
      } catch (const std::logic_error&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty()) continue;  // header
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": non-numeric field");
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": inconsistent column count");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError(path.string() + ": no samples");
  if (rows.front().size() < 3) throw IoError(path.string() + ": need coordinate columns plus re, im");
  const std::size_t dim = rows.front().size() - 2;

  Lattice l;
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<double> c;
    for (const auto& r : rows) c.push_back(r[a]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.size() < 2) throw IoError(path.string() + ": axis " + std::to_string(a) + " has fewer than 2 points");
    const double h = (c.back() - c.front()) / static_cast<double>(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (std::abs(c[i] - (c.front() + static_cast<double>(i) * h)) > 1e-9 * std::max(1.0, std::abs(h) * c.size()))
        throw IoError(path.string() + ": axis " + std::to_string(a) + " is not evenly spaced");
    l.shape.push_back(c.size());
    l.origin.push_back(c.front());
    l.spacing.push_back(h);
  }
  if (rows.size() != l.size())
    throw IoError(path.string() + ": " + std::to_string(rows.size()) + " rows for a lattice of " +
                  std::to_string(l.size()) + " points");
  std::vector<Complex> v(l.size());
  std::vector<bool> seen(l.size(), false);
  for (const auto& r : rows) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dim; ++a) {
      const auto idx = static_cast<std::size_t>(std::llround((r[a] - l.origin[a]) / l.spacing[a]));
      flat = flat * l.shape[a] + idx;
    }
    if (seen[flat]) throw IoError(path.string() + ": duplicate sample");
    seen[flat] = true;
    v[flat] = {r[dim], r[dim + 1]};
  }
  return SampledSignal(l, std::move(v));
}

void write_signal_csv(const SampledSignal& f, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  const Lattice& l = f.lattice();
  for (std::size_t a = 0; a < l.dim(); ++a) out << 'x' << a + 1 << ',';
  out << "re,im\n";
  out.precision(17);
  std::vector<double> x(l.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    l.point(i, x);
    for (double c : x) out << c << ',';
    out << f[i].real() << ',' << f[i].imag() << '\n';
  }
}

ordered_json grid_json(const HaarGrid& grid) {
  ordered_json w;
  w["scale"] = {grid.window.scale.first, grid.window.scale.second};
  w["shear"] = {grid.window.shear.first, grid.window.shear.second};
  w["modulation"] = {grid.window.modulation.first, grid.window.modulation.second};
  ordered_json j;
  j["group"] = grid.model.name();
  j["n"] = grid.model.dim_base();
  j["full_domain"] = grid.model.full_domain();
  j["window"] = w;
  j["b_nodes"] = grid.b_nodes;
  j["b_weights"] = grid.b_weights;
  j["b_boundary"] = grid.b_boundary;
  j["translations"] = lattice_json(grid.translations);
  return j;
}

HaarGrid grid_from_json(const json& j) {
  HaarGrid g;
  try {
    g.model = GroupModel::parse(j.at("group").get<std::string>(), j.at("n").get<std::size_t>(),
                                j.at("full_domain").get<bool>());
    const json& w = j.at("window");
    g.window.scale = {w.at("scale").at(0).get<double>(), w.at("scale").at(1).get<double>()};
    g.window.shear = {w.at("shear").at(0).get<double>(), w.at("shear").at(1).get<double>()};
    g.window.modulation = {w.at("modulation").at(0).get<double>(), w.at("modulation").at(1).get<double>()};
    g.b_nodes = j.at("b_nodes").get<std::vector<std::vector<double>>>();
    g.b_weights = j.at("b_weights").get<std::vector<double>>();
    g.b_boundary = j.at("b_boundary").get<std::vector<bool>>();
  } catch (const json::exception& e) {
    throw IoError(std::string("bad grid description: ") + e.what());
  } catch (const ConfigError& e) {
    throw IoError(std::string("bad grid description: ") + e.what());
  }
  g.translations = lattice_from_json(j.at("translations"));
  if (g.b_weights.size() != g.b_nodes.size() || g.b_boundary.size() != g.b_nodes.size())
    throw IoError("grid node, weight and boundary lists differ in length");
  for (const auto& b : g.b_nodes)
    if (b.size() != g.model.b_dim()) throw IoError("grid B-node has the wrong arity");
  return g;
}

void save_field(const CoefficientField& field, const fs::path& sidecar) {
  const fs::path payload = payload_path(sidecar);
  std::vector<std::size_t> shape{field.grid.b_count()};
  for (std::size_t n : field.grid.translations.shape) shape.push_back(n);
  ordered_json j;
  j["shape"] = shape;
  j["dtype"] = "c128";
  j["payload"] = payload.filename().string();
  j["wavelet"] = field.wavelet_id;
  j["signal_lattice"] = lattice_json(field.signal_lattice);
  j["signal_origin"] = field.signal_origin;
  j["signal_norm"] = field.signal_norm;
  j["grid"] = grid_json(field.grid);
  write_payload(payload, field.values);
  write_json(sidecar, j);
}

CoefficientField load_field(const fs::path& sidecar) {
  const json j = read_json(sidecar);
  CoefficientField f;
  if (!j.contains("grid")) throw IoError(sidecar.string() + ": missing grid");
  f.grid = grid_from_json(j.at("grid"));
  f.wavelet_id = field_of<std::string>(j, "wavelet", sidecar);
  f.signal_lattice = lattice_from_json(j.at("signal_lattice"));
  f.signal_origin = field_of<std::vector<double>>(j, "signal_origin", sidecar);
  f.signal_norm = field_of<double>(j, "signal_norm", sidecar);
  const auto shape = field_of<std::vector<std::size_t>>(j, "shape", sidecar);
  std::size_t count = 1;
  for (std::size_t n : shape) count *= n;
  if (count != f.grid.size()) throw IoError(sidecar.string() + ": shape does not match the grid");
  f.values = load_values(j, sidecar, count);
  return f;
}

}  // namespace gcwt
