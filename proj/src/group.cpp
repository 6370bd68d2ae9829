// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>

namespace gcwt {

namespace {

double wrap_angle(double phi) {
  double r = phi - kTwoPi * std::floor(phi / kTwoPi);
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool finite_all(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string normalize_name(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_' && c != ' ') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// Integral of |a|^{-p} over the cell [lo, hi] (0 < lo < hi).
double power_integral(double lo, double hi, double p) {
  if (p == 1.0) return std::log(hi / lo);
  return (std::pow(lo, 1.0 - p) - std::pow(hi, 1.0 - p)) / (p - 1.0);
}

}  // namespace

GroupModel::GroupModel(GroupKind kind, std::size_t dim_base, bool full_domain)
    : kind_(kind), n_(dim_base), full_(full_domain) {
  switch (kind_) {
    case GroupKind::Affine1D:
      if (n_ != 1) throw DomainError("Affine1D acts on R^1");
      break;
    case GroupKind::Diag2D:
    case GroupKind::UpperTri2D:
    case GroupKind::G51:
      if (n_ != 2) throw DomainError(name() + " acts on R^2");
      break;
    case GroupKind::Shear:
    case GroupKind::Similitude:
      if (n_ != 2) throw DomainError(name() + " is implemented for n = 2 only");
      break;
    case GroupKind::WeylHeisenberg:
      if (n_ != 1 && n_ != 2) throw DomainError("weyl-heisenberg is implemented for n = 1, 2");
      break;
  }
  if (full_ && kind_ != GroupKind::Diag2D && kind_ != GroupKind::UpperTri2D)
    throw DomainError("full scale domain is available for diag-2d and upper-tri-2d only");
}

std::vector<std::string> GroupModel::kind_names() {
  return {"affine-1d", "diag-2d", "upper-tri-2d", "shear", "similitude", "weyl-heisenberg", "g51"};
}

GroupModel GroupModel::parse(std::string_view name, std::size_t n, bool full_domain) {
  const std::string key = normalize_name(name);
  try {
    if (key == "affine1d" || key == "affine") return {GroupKind::Affine1D, n ? n : 1, full_domain};
    if (key == "diag2d" || key == "diagonal") return {GroupKind::Diag2D, n ? n : 2, full_domain};
    if (key == "uppertri2d" || key == "uppertriangular")
      return {GroupKind::UpperTri2D, n ? n : 2, full_domain};
    if (key == "shear") return {GroupKind::Shear, n ? n : 2, full_domain};
    if (key == "similitude" || key == "sim") return {GroupKind::Similitude, n ? n : 2, full_domain};
    if (key == "weylheisenberg" || key == "wh")
      return {GroupKind::WeylHeisenberg, n ? n : 1, full_domain};
    if (key == "g51") return {GroupKind::G51, n ? n : 2, full_domain};
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown group kind '" + std::string(name) + "'");
}

std::string GroupModel::name() const {
  switch (kind_) {
    case GroupKind::Affine1D: return "affine-1d";
    case GroupKind::Diag2D: return "diag-2d";
    case GroupKind::UpperTri2D: return "upper-tri-2d";
    case GroupKind::Shear: return "shear";
    case GroupKind::Similitude: return "similitude";
    case GroupKind::WeylHeisenberg: return "weyl-heisenberg";
    case GroupKind::G51: return "g51";
  }
  return "?";
}

std::size_t GroupModel::b_dim() const {
  switch (kind_) {
    case GroupKind::Affine1D: return 1;
    case GroupKind::WeylHeisenberg: return n_;
    default: return 2;
  }
}

std::size_t GroupModel::param_count() const {
  if (kind_ == GroupKind::WeylHeisenberg) return 2 * n_ + 1;
  if (kind_ == GroupKind::G51) return 5;
  return b_dim() + n_;
}

std::vector<double> GroupModel::b_part(const GroupPoint& g) const {
  const auto& p = g.params;
  switch (kind_) {
    case GroupKind::WeylHeisenberg: return {p.begin() + static_cast<long>(n_), p.begin() + static_cast<long>(2 * n_)};
    case GroupKind::G51: return {p[1], p[3]};
    default: return {p.begin(), p.begin() + static_cast<long>(b_dim())};
  }
}

std::vector<double> GroupModel::translation(const GroupPoint& g) const {
  const auto& p = g.params;
  switch (kind_) {
    case GroupKind::WeylHeisenberg: return {p.begin(), p.begin() + static_cast<long>(n_)};
    case GroupKind::G51: return {p[2], p[4]};
    default: return {p.begin() + static_cast<long>(b_dim()), p.end()};
  }
}

double GroupModel::phase(const GroupPoint& g) const {
  switch (kind_) {
    case GroupKind::WeylHeisenberg: return g.params[2 * n_];
    case GroupKind::G51: return g.params[0];
    default: return 0.0;
  }
}

GroupPoint GroupModel::assemble(std::span<const double> b, std::span<const double> x, double phase) const {
  GroupPoint g;
  switch (kind_) {
    case GroupKind::WeylHeisenberg:
      g.params.assign(x.begin(), x.end());
      g.params.insert(g.params.end(), b.begin(), b.end());
      g.params.push_back(wrap_angle(phase));
      break;
    case GroupKind::G51:
      g.params = {wrap_angle(phase), b[0], x[0], b[1], x[1]};
      break;
    default:
      g.params.assign(b.begin(), b.end());
      g.params.insert(g.params.end(), x.begin(), x.end());
      break;
  }
  return g;
}

bool GroupModel::valid(const GroupPoint& g) const {
  const auto& p = g.params;
  if (p.size() != param_count() || !finite_all(p)) return false;
  auto in_circle = [](double t) { return t >= 0.0 && t < kTwoPi; };
  switch (kind_) {
    case GroupKind::Affine1D:
    case GroupKind::Shear: return p[0] > 0.0;
    case GroupKind::Similitude: return p[0] > 0.0 && in_circle(p[1]);
    case GroupKind::Diag2D: return full_ ? (p[0] != 0.0 && p[1] != 0.0) : (p[0] > 0.0 && p[1] > 0.0);
    case GroupKind::UpperTri2D: return full_ ? p[0] != 0.0 : p[0] > 0.0;
    case GroupKind::WeylHeisenberg: return in_circle(p[2 * n_]);
    case GroupKind::G51: return in_circle(p[0]);
  }
  return false;
}

void GroupModel::check(const GroupPoint& g) const {
  if (!valid(g)) {
    std::string s = "invalid " + name() + " point (";
    for (std::size_t i = 0; i < g.params.size(); ++i) s += (i ? ", " : "") + std::to_string(g.params[i]);
    throw DomainError(s + ")");
  }
}

GroupPoint GroupModel::identity() const {
  switch (kind_) {
    case GroupKind::Affine1D: return {{1.0, 0.0}};
    case GroupKind::Diag2D: return {{1.0, 1.0, 0.0, 0.0}};
    case GroupKind::UpperTri2D: return {{1.0, 0.0, 0.0, 0.0}};
    case GroupKind::Shear: return {{1.0, 0.0, 0.0, 0.0}};
    case GroupKind::Similitude: return {{1.0, 0.0, 0.0, 0.0}};
    case GroupKind::WeylHeisenberg: return {std::vector<double>(2 * n_ + 1, 0.0)};
    case GroupKind::G51: return {std::vector<double>(5, 0.0)};
  }
  return {};
}

GroupPoint GroupModel::compose(const GroupPoint& g, const GroupPoint& h) const {
  check(g);
  check(h);
  const auto& p = g.params;
  const auto& q = h.params;
  switch (kind_) {
    case GroupKind::Affine1D:
      return {{p[0] * q[0], p[1] + p[0] * q[1]}};
    case GroupKind::Similitude: {
      const double c = std::cos(p[1]), s = std::sin(p[1]);
      return {{p[0] * q[0], wrap_angle(p[1] + q[1]), p[2] + p[0] * (c * q[2] - s * q[3]),
               p[3] + p[0] * (s * q[2] + c * q[3])}};
    }
    case GroupKind::Diag2D:
      return {{p[0] * q[0], p[1] * q[1], p[2] + p[0] * q[2], p[3] + p[1] * q[3]}};
    case GroupKind::UpperTri2D:
      return {{p[0] * q[0], p[0] * q[1] + p[1], p[2] + p[0] * q[2] + p[1] * q[3], p[3] + q[3]}};
    case GroupKind::Shear: {
      const double r = std::sqrt(p[0]);
      return {{p[0] * q[0], p[1] + r * q[1], p[2] + p[0] * q[2] + p[1] * r * q[3], p[3] + r * q[3]}};
    }
    case GroupKind::WeylHeisenberg: {
      GroupPoint out{std::vector<double>(2 * n_ + 1)};
      double ba = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        out.params[i] = p[i] + q[i];
        out.params[n_ + i] = p[n_ + i] + q[n_ + i];
        ba += p[n_ + i] * q[i];
      }
      out.params[2 * n_] = wrap_angle(p[2 * n_] + q[2 * n_] + kTwoPi * ba);
      return out;
    }
    case GroupKind::G51:
      return {{wrap_angle(p[0] + q[0] + kTwoPi * (q[1] * p[2] + q[3] * p[4])), p[1] + q[1], p[2] + q[2],
               p[3] + q[3], p[4] + q[4]}};
  }
  return {};
}

GroupPoint GroupModel::inverse(const GroupPoint& g) const {
  check(g);
  const auto& p = g.params;
  switch (kind_) {
    case GroupKind::Affine1D:
      return {{1.0 / p[0], -p[1] / p[0]}};
    case GroupKind::Similitude: {
      const double c = std::cos(p[1]), s = std::sin(p[1]);
      return {{1.0 / p[0], wrap_angle(-p[1]), -(c * p[2] + s * p[3]) / p[0], -(-s * p[2] + c * p[3]) / p[0]}};
    }
    case GroupKind::Diag2D:
      return {{1.0 / p[0], 1.0 / p[1], -p[2] / p[0], -p[3] / p[1]}};
    case GroupKind::UpperTri2D:
      return {{1.0 / p[0], -p[1] / p[0], -(p[2] - p[1] * p[3]) / p[0], -p[3]}};
    case GroupKind::Shear: {
      const double r = std::sqrt(p[0]);
      return {{1.0 / p[0], -p[1] / r, -(p[2] - p[1] * p[3]) / p[0], -p[3] / r}};
    }
    case GroupKind::WeylHeisenberg: {
      GroupPoint out{std::vector<double>(2 * n_ + 1)};
      double ab = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        out.params[i] = -p[i];
        out.params[n_ + i] = -p[n_ + i];
        ab += p[i] * p[n_ + i];
      }
      out.params[2 * n_] = wrap_angle(-p[2 * n_] + kTwoPi * ab);
      return out;
    }
    case GroupKind::G51:
      return {{wrap_angle(-p[0] + kTwoPi * (p[1] * p[2] + p[3] * p[4])), -p[1], -p[2], -p[3], -p[4]}};
  }
  return {};
}

double GroupModel::delta_tau(std::span<const double> b) const {
  switch (kind_) {
    case GroupKind::Affine1D: return 1.0 / b[0];
    case GroupKind::Similitude: return 1.0 / (b[0] * b[0]);
    case GroupKind::Diag2D: return 1.0 / std::abs(b[0] * b[1]);
    case GroupKind::UpperTri2D: return 1.0 / std::abs(b[0]);
    case GroupKind::Shear: return std::pow(b[0], -1.5);
    default: return 1.0;
  }
}

double GroupModel::b_haar_density(std::span<const double> b) const {
  switch (kind_) {
    case GroupKind::Affine1D:
    case GroupKind::Similitude: return 1.0 / b[0];
    case GroupKind::Diag2D: return 1.0 / std::abs(b[0] * b[1]);
    case GroupKind::UpperTri2D: return 1.0 / (b[0] * b[0]);
    case GroupKind::Shear: return std::pow(b[0], -1.5);
    default: return 1.0;
  }
}

double GroupModel::haar_density(const GroupPoint& g) const {
  const auto b = b_part(g);
  return b_haar_density(b) * delta_tau(b);
}

double GroupModel::amplitude(std::span<const double> b) const {
  if (has_phase()) return 1.0;
  return 1.0 / std::sqrt(delta_tau(b));
}

void GroupModel::frequency_map(std::span<const double> b, std::span<const double> w,
                               std::span<double> out) const {
  switch (kind_) {
    case GroupKind::Affine1D:
      out[0] = b[0] * w[0];
      break;
    case GroupKind::Similitude: {
      const double c = std::cos(b[1]), s = std::sin(b[1]);
      const double w0 = w[0], w1 = w[1];
      out[0] = b[0] * (c * w0 + s * w1);
      out[1] = b[0] * (-s * w0 + c * w1);
      break;
    }
    case GroupKind::Diag2D:
      out[0] = b[0] * w[0];
      out[1] = b[1] * w[1];
      break;
    case GroupKind::UpperTri2D: {
      const double w0 = w[0], w1 = w[1];
      out[0] = b[0] * w0;
      out[1] = b[1] * w0 + w1;
      break;
    }
    case GroupKind::Shear: {
      const double w0 = w[0], w1 = w[1];
      out[0] = b[0] * w0;
      out[1] = std::sqrt(b[0]) * (b[1] * w0 + w1);
      break;
    }
    case GroupKind::WeylHeisenberg:
      for (std::size_t i = 0; i < n_; ++i) out[i] = w[i] - b[i];
      break;
    case GroupKind::G51:
      out[0] = w[0] + b[0];
      out[1] = w[1] + b[1];
      break;
  }
}

Complex GroupModel::character(const GroupPoint& g) const {
  switch (kind_) {
    case GroupKind::WeylHeisenberg: return std::polar(1.0, phase(g));
    case GroupKind::G51: {
      const auto& p = g.params;
      return std::polar(1.0, p[0] - kTwoPi * (p[2] * p[1] + p[4] * p[3]));
    }
    default: return 1.0;
  }
}

Complex GroupModel::represent_spectrum(const GroupPoint& g, const PointFn& spectrum,
                                       std::span<const double> w) const {
  const auto b = b_part(g);
  const auto x = translation(g);
  double xw = 0.0;
  for (std::size_t i = 0; i < n_; ++i) xw += x[i] * w[i];
  double mapped[2];
  frequency_map(b, w, std::span<double>(mapped, n_));
  return character(g) * std::polar(amplitude(b), -kTwoPi * xw) *
         spectrum(std::span<const double>(mapped, n_));
}

Complex GroupModel::represent_spatial(const GroupPoint& g, const PointFn& f, std::span<const double> x) const {
  const auto& p = g.params;
  double y[2];
  Complex factor = 1.0;
  switch (kind_) {
    case GroupKind::Affine1D:
      y[0] = (x[0] - p[1]) / p[0];
      factor = 1.0 / std::sqrt(p[0]);
      break;
    case GroupKind::Similitude: {
      const double c = std::cos(p[1]), s = std::sin(p[1]);
      const double u = x[0] - p[2], v = x[1] - p[3];
      y[0] = (c * u + s * v) / p[0];
      y[1] = (-s * u + c * v) / p[0];
      factor = 1.0 / p[0];
      break;
    }
    case GroupKind::Diag2D:
      y[0] = (x[0] - p[2]) / p[0];
      y[1] = (x[1] - p[3]) / p[1];
      factor = 1.0 / std::sqrt(std::abs(p[0] * p[1]));
      break;
    case GroupKind::UpperTri2D: {
      const double u = x[0] - p[2], v = x[1] - p[3];
      y[0] = (u - p[1] * v) / p[0];
      y[1] = v;
      factor = 1.0 / std::sqrt(std::abs(p[0]));
      break;
    }
    case GroupKind::Shear: {
      const double u = x[0] - p[2], v = x[1] - p[3];
      y[0] = (u - p[1] * v) / p[0];
      y[1] = v / std::sqrt(p[0]);
      factor = std::pow(p[0], -0.75);
      break;
    }
    case GroupKind::WeylHeisenberg: {
      double bx = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        y[i] = x[i] - p[i];
        bx += p[n_ + i] * y[i];
      }
      factor = std::polar(1.0, p[2 * n_] + kTwoPi * bx);
      break;
    }
    case GroupKind::G51:
      y[0] = x[0] - p[2];
      y[1] = x[1] - p[4];
      factor = std::polar(1.0, p[0] - kTwoPi * (p[1] * x[0] + p[3] * x[1]));
      break;
  }
  return factor * f(std::span<const double>(y, n_));
}

SignalModel act(const GroupPoint& g, const SignalModel& f, const GroupModel& model) {
  model.check(g);
  if (f.dim != model.dim_base()) throw DomainError("act: signal dimension differs from the group's");
  auto src = std::make_shared<SignalModel>(f);
  SignalModel out;
  out.name = "pi(g)" + f.name;
  out.dim = f.dim;
  out.spectrum = [src, g, model](std::span<const double> w) {
    return model.represent_spectrum(g, src->spectrum, w);
  };
  if (f.spatial) {
    out.spatial = [src, g, model](std::span<const double> x) {
      return model.represent_spatial(g, src->spatial, x);
    };
  }
  return out;
}

namespace {

// Multilinear interpolation of lattice samples with zero extension.
Complex interpolate(const SampledSignal& f, std::span<const double> y) {
  const Lattice& l = f.lattice();
  const std::size_t dim = l.dim();
  std::size_t base[8];
  double frac[8];
  for (std::size_t a = 0; a < dim; ++a) {
    const double pos = (y[a] - l.origin[a]) / l.spacing[a];
    const double last = static_cast<double>(l.shape[a] - 1);
    if (!(pos >= 0.0 && pos <= last)) return {};
    base[a] = std::min(static_cast<std::size_t>(pos), l.shape[a] - 2);
    frac[a] = pos - static_cast<double>(base[a]);
  }
  Complex acc{};
  for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
    double weight = 1.0;
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dim; ++a) {
      const bool up = (corner >> a) & 1u;
      weight *= up ? frac[a] : 1.0 - frac[a];
      flat = flat * l.shape[a] + base[a] + (up ? 1 : 0);
    }
    if (weight != 0.0) acc += weight * f[flat];
  }
  return acc;
}

}  // namespace

SampledSignal act(const GroupPoint& g, const SampledSignal& f, const GroupModel& model) {
  model.check(g);
  const Lattice& l = f.lattice();
  if (l.dim() != model.dim_base()) throw DomainError("act: signal dimension differs from the group's");
  const PointFn source = [&f](std::span<const double> y) { return interpolate(f, y); };
  auto out = SampledSignal::sample(l, [&](std::span<const double> x) {
    return model.represent_spatial(g, source, x);
  });
  const double before = norm(f);
  if (before > 0.0 && norm(out) < std::sqrt(0.5) * before)
    throw ResampleError("act: more than half of the signal's mass left the lattice window");
  return out;
}

GroupPoint HaarGrid::node(std::size_t i) const {
  const std::size_t t = translation_count();
  std::vector<double> x(translations.dim());
  translations.point(i % t, x);
  return model.assemble(b_nodes[i / t], x, 0.0);
}

double HaarGrid::total_weight() const {
  double s = 0.0;
  for (double w : b_weights) s += w;
  return s * translations.cell_volume() * static_cast<double>(translation_count());
}

std::vector<GroupPoint> HaarGrid::nodes() const {
  std::vector<GroupPoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(node(i));
  return out;
}

std::vector<double> HaarGrid::weights() const {
  std::vector<double> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(weight(i));
  return out;
}

namespace {

struct Axis {
  std::vector<double> nodes;
  std::vector<double> weights;  // integral of the axis density over each cell
  bool periodic = false;
  bool mirrored = false;
};

// Geometric cells on [lo, hi] with weights int |a|^{-p} da; mirrored to negative
// scales when `mirror` is set.
Axis scale_axis(std::pair<double, double> range, std::size_t count, double p, bool mirror) {
  const auto [lo, hi] = range;
  if (!(lo > 0.0)) throw DomainError("scale window must satisfy a_min > 0");
  if (!(hi > lo) || count == 0) throw EmptyGridError("empty scale window");
  Axis axis;
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(count));
  for (std::size_t k = 0; k < count; ++k) {
    const double a0 = lo * std::pow(ratio, static_cast<double>(k));
    const double a1 = k + 1 == count ? hi : lo * std::pow(ratio, static_cast<double>(k + 1));
    axis.nodes.push_back(std::sqrt(a0 * a1));
    axis.weights.push_back(power_integral(a0, a1, p));
  }
  if (mirror) {
    axis.mirrored = true;
    const std::size_t m = axis.nodes.size();
    for (std::size_t k = 0; k < m; ++k) {
      axis.nodes.insert(axis.nodes.begin(), -axis.nodes[2 * k]);
      axis.weights.insert(axis.weights.begin(), axis.weights[2 * k]);
    }
  }
  return axis;
}

Axis uniform_axis(std::pair<double, double> range, std::size_t count) {
  const auto [lo, hi] = range;
  if (!(hi > lo) || count == 0) throw EmptyGridError("empty window");
  Axis axis;
  const double h = (hi - lo) / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    axis.nodes.push_back(lo + (static_cast<double>(k) + 0.5) * h);
    axis.weights.push_back(h);
  }
  return axis;
}

Axis angle_axis(std::size_t count) {
  if (count == 0) throw EmptyGridError("zero angles");
  Axis axis;
  axis.periodic = true;
  const double h = kTwoPi / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    axis.nodes.push_back(static_cast<double>(k) * h);
    axis.weights.push_back(h);
  }
  return axis;
}

void fill_b_part(HaarGrid& grid, const WindowSpec& window, const GridSpec& res) {
  const GroupModel& m = grid.model;
  std::vector<Axis> axes;
  switch (m.kind()) {
    case GroupKind::Affine1D:
      axes = {scale_axis(window.scale, res.scales, 2.0, false)};
      break;
    case GroupKind::Similitude:
      axes = {scale_axis(window.scale, res.scales, 3.0, false), angle_axis(res.angles)};
      break;
    case GroupKind::Diag2D:
      axes = {scale_axis(window.scale, res.scales, 2.0, m.full_domain()),
              scale_axis(window.scale, res.scales, 2.0, m.full_domain())};
      break;
    case GroupKind::UpperTri2D:
      axes = {scale_axis(window.scale, res.scales, 3.0, m.full_domain()), uniform_axis(window.shear, res.shears)};
      break;
    case GroupKind::Shear:
      axes = {scale_axis(window.scale, res.scales, 3.0, false), uniform_axis(window.shear, res.shears)};
      break;
    case GroupKind::WeylHeisenberg:
    case GroupKind::G51:
      axes.assign(m.b_dim(), uniform_axis(window.modulation, res.modulations));
      break;
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.nodes.size();
  grid.b_nodes.reserve(total);
  grid.b_weights.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> b(axes.size());
    double w = 1.0;
    bool edge = false;
    std::size_t rest = flat;
    for (std::size_t k = axes.size(); k-- > 0;) {
      const std::size_t m = axes[k].nodes.size();
      const std::size_t idx = rest % m;
      rest /= m;
      b[k] = axes[k].nodes[idx];
      w *= axes[k].weights[idx];
      // Mirrored scale axes have edges at both ends of each sign component.
      if (!axes[k].periodic) {
        const std::size_t half = m / 2;
        edge = edge || idx == 0 || idx + 1 == m || (axes[k].mirrored && (idx + 1 == half || idx == half));
      }
    }
    grid.b_nodes.push_back(std::move(b));
    grid.b_weights.push_back(w);
    grid.b_boundary.push_back(edge);
  }
}

}  // namespace

HaarGrid haar_grid(const GroupModel& model, const WindowSpec& window, const GridSpec& resolution) {
  HaarGrid grid;
  grid.model = model;
  grid.window = window;
  fill_b_part(grid, window, resolution);
  const std::size_t n = model.dim_base();
  if (window.translation.size() != n)
    throw DomainError("translation window needs " + std::to_string(n) + " axis ranges");
  if (resolution.translations == 0) throw EmptyGridError("zero translations");
  grid.translations.shape.assign(n, resolution.translations);
  for (const auto& [lo, hi] : window.translation) {
    if (!(hi > lo)) throw EmptyGridError("empty translation window");
    const double h = (hi - lo) / static_cast<double>(resolution.translations);
    grid.translations.origin.push_back(lo + 0.5 * h);
    grid.translations.spacing.push_back(h);
  }
  return grid;
}

HaarGrid transform_grid(const GroupModel& model, const WindowSpec& window, const GridSpec& resolution,
                        const Lattice& lattice, std::size_t pad) {
  lattice.validate();
  if (lattice.dim() != model.dim_base()) throw LatticeMismatch("lattice dimension differs from the group's");
  if (pad == 0) throw DomainError("padding factor must be >= 1");
  HaarGrid grid;
  grid.model = model;
  grid.window = window;
  fill_b_part(grid, window, resolution);
  for (std::size_t a = 0; a < lattice.dim(); ++a) {
    const std::size_t p = pad * lattice.shape[a];
    const double h = lattice.spacing[a];
    grid.translations.shape.push_back(p);
    grid.translations.spacing.push_back(h);
    grid.translations.origin.push_back(-static_cast<double>(p / 2) * h);
  }
  grid.window.translation.clear();
  for (std::size_t a = 0; a < lattice.dim(); ++a) {
    const double lo = grid.translations.origin[a];
    grid.window.translation.emplace_back(lo, lo + static_cast<double>(grid.translations.shape[a]) *
                                                      grid.translations.spacing[a]);
  }
  return grid;
}

}  // namespace gcwt
