// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gcwt/parallel.hpp"

namespace gcwt {

std::string formula_id(const GroupModel& model) {
  switch (model.kind()) {
    case GroupKind::Affine1D: return "affine-1d:int|psi^(a w)|^2 da/a";
    case GroupKind::Similitude: return "similitude:int int|psi^(a r_theta^-1 w)|^2 da/a dtheta";
    case GroupKind::Diag2D: return "diag-2d:int int|psi^(a1 w1, a2 w2)|^2 da1/|a1| da2/|a2|";
    case GroupKind::UpperTri2D: return "upper-tri-2d:int int|psi^(a w1, b w1 + w2)|^2 da db/a^2";
    case GroupKind::Shear: return "shear:int int|psi^(a w1, a^1/2 (s w1 + w2))|^2 da ds/a^3/2";
    case GroupKind::WeylHeisenberg: return "weyl-heisenberg:int|psi^(w - b)|^2 db";
    case GroupKind::G51: return "g51:int|psi^(w + m)|^2 dm";
  }
  return "?";
}

bool is_singular(const GroupModel& model, std::span<const double> w, double tube) {
  switch (model.kind()) {
    case GroupKind::Affine1D: return std::abs(w[0]) < tube || w[0] == 0.0;
    case GroupKind::Similitude: return std::hypot(w[0], w[1]) < tube || (w[0] == 0.0 && w[1] == 0.0);
    case GroupKind::Diag2D: return std::min(std::abs(w[0]), std::abs(w[1])) < tube || w[0] == 0.0 || w[1] == 0.0;
    case GroupKind::UpperTri2D:
    case GroupKind::Shear: return std::abs(w[0]) < tube || w[0] == 0.0;
    default: return false;
  }
}

std::vector<std::vector<double>> default_probes(const GroupModel& model, std::size_t count) {
  std::vector<std::vector<double>> out;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  if (model.dim_base() == 1) {
    // Geometric radii, alternating sign.
    const std::size_t half = (count + 1) / 2;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t j = k / 2;
      const double r = 0.5 * std::pow(8.0, (static_cast<double>(j) + 0.5) / static_cast<double>(half));
      out.push_back({k % 2 == 0 ? r : -r});
    }
    return out;
  }
  for (std::size_t j = 0; out.size() < count; ++j) {
    const double t = std::fmod((static_cast<double>(j) + 0.5) * golden, 1.0);
    const double r = 0.5 * std::pow(8.0, t);
    const double phi = kTwoPi * std::fmod(static_cast<double>(j) * golden * golden, 1.0) + 0.3;
    std::vector<double> w{r * std::cos(phi), r * std::sin(phi)};
    if (model.dim_base() == 2 && !is_singular(model, w, 0.1)) out.push_back(std::move(w));
  }
  return out;
}

namespace {

using CFn = std::function<Complex(double)>;

struct Integrator {
  const AdmissibilityOptions& opt;
  double tail = 0.0;
  int depth = 0;  // nesting level; inner integrals use a fixed rule so they vary smoothly

  template <class F>
  Complex nested(F&& body) {
    ++depth;
    const Complex v = body();
    --depth;
    return v;
  }

  // Integral over log-scale u in [log a_min, log a_max]; records the density at
  // window ends where the tail does not decay.
  Complex scale(const CFn& g) {
    const double lo = std::log(opt.scale_min), hi = std::log(opt.scale_max);
    const Complex v = depth > 0 ? quad::composite_simpson<Complex>(g, lo, hi, opt.inner_panels)
                                : quad::simpson<Complex>(g, lo, hi, opt.quad);
    // A decaying tail drops by a clear factor over the last unit of log-scale.
    for (const auto& [end, inward] : {std::pair{lo, lo + 1.0}, std::pair{hi, hi - 1.0}}) {
      const double e = std::abs(g(end));
      if (e > 0.0 && e >= 0.5 * std::abs(g(inward))) tail = std::max(tail, e);
    }
    return v;
  }
  Complex line(const CFn& g, double sigma) {
    return quad::real_line<Complex>(g, sigma, opt.line_extent, opt.quad, depth > 0 ? opt.inner_panels : 0);
  }
  Complex circle(const CFn& g) { return quad::periodic_trapezoid<Complex>(g, kTwoPi, opt.angle_nodes); }
};

}  // namespace

Complex cross_integral(const GroupModel& model, const PointFn& s1, const PointFn& s2, std::span<const double> w,
                       const AdmissibilityOptions& opt, double* tail) {
  Integrator in{opt};
  const std::size_t n = model.dim_base();
  auto prod = [&](std::span<const double> b) {
    double m[2];
    model.frequency_map(b, w, std::span<double>(m, n));
    const std::span<const double> ms(m, n);
    return std::conj(s1(ms)) * s2(ms);
  };
  auto direct = [&](std::span<const double> u) { return std::conj(s1(u)) * s2(u); };
  const std::vector<double> both{1.0, -1.0}, pos{1.0};
  const auto& signs = model.full_domain() ? both : pos;
  Complex total{};
  switch (model.kind()) {
    case GroupKind::Affine1D:
      total = in.scale([&](double u) {
        const double b[1] = {std::exp(u)};
        return prod(b);
      });
      break;
    case GroupKind::Similitude:
      total = in.scale([&](double u) {
        return in.circle([&](double th) {
          const double b[2] = {std::exp(u), th};
          return prod(b);
        });
      });
      break;
    case GroupKind::Diag2D:
      for (double e1 : signs)
        for (double e2 : signs)
          total += in.scale([&](double u1) {
            return in.nested([&] {
              return in.scale([&](double u2) {
                const double b[2] = {e1 * std::exp(u1), e2 * std::exp(u2)};
                return prod(b);
              });
            });
          });
      break;
    case GroupKind::UpperTri2D:
      for (double e : signs)
        total += in.scale([&](double u) {
          return std::exp(-u) * in.nested([&] {
            return in.line(
                [&](double bb) {
                  const double b[2] = {e * std::exp(u), bb};
                  return prod(b);
                },
                1.0 / std::abs(w[0]));
          });
        });
      break;
    case GroupKind::Shear:
      total = in.scale([&](double u) {
        return std::exp(-0.5 * u) * in.nested([&] {
          return in.line(
              [&](double s) {
                const double b[2] = {std::exp(u), s};
                return prod(b);
              },
              1.0 / (std::exp(0.5 * u) * std::abs(w[0])));
        });
      });
      break;
    case GroupKind::WeylHeisenberg:
    case GroupKind::G51:
      // Shifted variable: int |psi^(w -/+ b)|^2 db = int |psi^(u)|^2 du.
      if (n == 1) {
        total = in.line([&](double u) {
          const double p[1] = {u};
          return direct(p);
        }, 1.0);
      } else {
        total = in.line([&](double u0) {
          return in.nested([&] {
            return in.line([&](double u1) {
              const double p[2] = {u0, u1};
              return direct(p);
            }, 1.0);
          });
        }, 1.0);
      }
      break;
  }
  if (tail) *tail = in.tail;
  return total;
}

namespace {

std::vector<std::vector<double>> resolve_probes(const GroupModel& model,
                                                const std::vector<std::vector<double>>& probes) {
  if (probes.empty()) return default_probes(model);
  for (const auto& w : probes) {
    if (w.size() != model.dim_base()) throw DomainError("probe dimension differs from the group's");
    if (is_singular(model, w, 1e-12)) throw SingularProbe("probe frequency lies on the singular set");
  }
  return probes;
}

// Accumulated as offsets from the first sample: identical samples give their exact value.
double mean_of(const std::vector<FreqSample>& s) {
  if (s.empty()) return 0.0;
  double acc = 0.0;
  for (const auto& x : s) acc += x.value - s[0].value;
  return s[0].value + acc / static_cast<double>(s.size());
}

double cv_of(const std::vector<FreqSample>& s, double mean) {
  if (s.empty() || mean == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& x : s) acc += (x.value - mean) * (x.value - mean);
  return std::sqrt(acc / static_cast<double>(s.size())) / std::abs(mean);
}

// Affine1D wavelets vanishing on a half-line analyse the Hardy space of the other.
std::string half_line_restrict(const GroupModel& model, std::vector<FreqSample>& samples) {
  if (model.kind() != GroupKind::Affine1D) return "L2";
  double pos = 0.0, neg = 0.0;
  for (const auto& s : samples) (s.omega[0] > 0.0 ? pos : neg) = std::max(s.omega[0] > 0.0 ? pos : neg, std::abs(s.value));
  std::string sub = "L2";
  if (pos > 0.0 && neg <= 1e-12 * pos) sub = "H2+";
  else if (neg > 0.0 && pos <= 1e-12 * neg) sub = "H2-";
  if (sub == "L2") return sub;
  const bool keep_pos = sub == "H2+";
  std::erase_if(samples, [&](const FreqSample& s) { return (s.omega[0] > 0.0) != keep_pos; });
  return sub;
}

}  // namespace

AdmissibilityReport admissibility_constant(const Wavelet& psi, const GroupModel& model,
                                           const std::vector<std::vector<double>>& probes,
                                           const AdmissibilityOptions& opt) {
  if (psi.model.dim != model.dim_base()) throw DomainError("wavelet dimension differs from the group's");
  const auto ws = resolve_probes(model, probes);
  AdmissibilityReport r;
  r.group = model.name();
  r.wavelet_id = psi.id();
  r.formula_id = formula_id(model);
  r.tolerance = opt.tolerance;
  r.wavelet_norm_sq = psi.samples.size() ? std::pow(norm(psi.samples), 2) : 0.0;

  std::vector<FreqSample> samples(ws.size());
  std::vector<double> tails(ws.size());
  // In the shifted variable the central-extension kinds give one value for every probe.
  const std::size_t distinct = model.has_phase() ? 1 : ws.size();
  parallel_chunks(distinct, 1, [&](std::size_t, std::size_t i, std::size_t) {
    samples[i].value = cross_integral(model, psi.model.spectrum, psi.model.spectrum, ws[i], opt, &tails[i]).real();
  });
  for (std::size_t i = 0; i < ws.size(); ++i) {
    samples[i].omega = ws[i];
    if (i >= distinct) {
      samples[i].value = samples[0].value;
      tails[i] = tails[0];
    }
  }
  r.subspace = half_line_restrict(model, samples);
  r.per_freq = std::move(samples);
  r.constant = mean_of(r.per_freq);
  r.rel_variation = cv_of(r.per_freq, r.constant);

  const double tail = *std::max_element(tails.begin(), tails.end());
  const double scale = r.wavelet_norm_sq > 0.0 ? r.wavelet_norm_sq : 1.0;
  if (r.constant > 0.0 && tail > opt.tail_ratio * r.constant) {
    r.diverged = true;
    r.reason = "scale integral does not decay at the window ends (divergent)";
  } else if (r.constant > opt.divergence_growth * scale) {
    r.diverged = true;
    r.reason = "scale integral exceeds the divergence threshold";
  } else if (!(r.constant > 1e-10 * r.wavelet_norm_sq) || r.wavelet_norm_sq == 0.0) {
    r.reason = "constant is zero";
  } else if (r.rel_variation > opt.tolerance) {
    r.reason = "constant depends on the frequency";
  }
  r.admissible = r.reason.empty();
  return r;
}

PairReport pair_constant(const Wavelet& psi1, const Wavelet& psi2, const GroupModel& model,
                         const std::vector<std::vector<double>>& probes, const AdmissibilityOptions& opt) {
  PairReport p;
  p.first = admissibility_constant(psi1, model, probes, opt);
  p.second = admissibility_constant(psi2, model, probes, opt);
  p.overlap = inner(psi1.samples, psi2.samples);

  std::vector<std::vector<double>> ws;
  for (const auto& s : p.first.per_freq) ws.push_back(s.omega);
  p.per_freq.resize(ws.size());
  std::vector<double> tails(ws.size());
  const std::size_t distinct = model.has_phase() ? std::min<std::size_t>(1, ws.size()) : ws.size();
  parallel_chunks(distinct, 1, [&](std::size_t, std::size_t i, std::size_t) {
    p.per_freq[i].value = cross_integral(model, psi1.model.spectrum, psi2.model.spectrum, ws[i], opt, &tails[i]);
  });
  for (std::size_t i = 0; i < ws.size(); ++i) {
    p.per_freq[i].omega = ws[i];
    if (i >= distinct) p.per_freq[i].value = p.per_freq[0].value;
  }
  Complex mean{};
  if (!p.per_freq.empty()) {
    for (const auto& s : p.per_freq) mean += s.value - p.per_freq[0].value;
    mean = p.per_freq[0].value + mean / static_cast<double>(p.per_freq.size());
  }
  p.cross_constant = mean;
  if (std::abs(mean) > 0.0) {
    double acc = 0.0;
    for (const auto& s : p.per_freq) acc += std::norm(s.value - mean);
    p.rel_variation = std::sqrt(acc / static_cast<double>(p.per_freq.size())) / std::abs(mean);
  }

  const double n1 = std::sqrt(p.first.wavelet_norm_sq), n2 = std::sqrt(p.second.wavelet_norm_sq);
  if (!p.first.admissible || !p.second.admissible) p.reason = "a wavelet of the pair is not admissible";
  else if (!(std::abs(p.overlap) > opt.nonzero * n1 * n2)) p.reason = "<psi1, psi2> vanishes";
  else if (!(std::abs(p.cross_constant) > opt.nonzero * std::sqrt(p.first.constant * p.second.constant)))
    p.reason = "cross constant vanishes";
  else if (p.rel_variation > opt.tolerance) p.reason = "cross constant depends on the frequency";
  p.is_admissible_pair = p.reason.empty();
  return p;
}

namespace {

// Independent fixed-grid route: trapezoid rules with the B-part Haar measure written out per kind.
struct Trapezoid {
  std::vector<double> x, w;
};

Trapezoid trapezoid(double lo, double hi, std::size_t n) {
  Trapezoid t;
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    t.x.push_back(lo + h * static_cast<double>(i));
    t.w.push_back(i == 0 || i + 1 == n ? 0.5 * h : h);
  }
  return t;
}

// b = sigma sinh(s) with the Jacobian folded into the weights.
Trapezoid sinh_line(double sigma, double extent, std::size_t n) {
  const double smax = std::asinh(extent / sigma);
  Trapezoid t = trapezoid(-smax, smax, n);
  for (std::size_t i = 0; i < n; ++i) {
    t.w[i] *= sigma * std::cosh(t.x[i]);
    t.x[i] = sigma * std::sinh(t.x[i]);
  }
  return t;
}

double sq_abs(const PointFn& f, double a, double b) {
  const double p[2] = {a, b};
  return std::norm(f(std::span<const double>(p, 2)));
}

double feasible_integral(const GroupModel& model, const PointFn& f, std::span<const double> g,
                         const AdmissibilityOptions& opt, double& tail) {
  const double lo = std::log(opt.scale_min), hi = std::log(opt.scale_max);
  const bool two = model.dim_base() == 2;
  const std::size_t nu = two ? 801 : 4001;
  const Trapezoid u = trapezoid(lo, hi, nu);
  double total = 0.0;
  tail = 0.0;
  // Endpoint densities along a log-scale axis, compared with the value one unit inward.
  const std::size_t step = static_cast<std::size_t>(std::ceil(1.0 / (u.x[1] - u.x[0])));
  auto check_ends = [&](const std::vector<double>& d) {
    const std::size_t last = d.size() - 1;
    for (const auto& [end, inward] : {std::pair{std::size_t{0}, step}, std::pair{last, last - step}})
      if (d[end] > 0.0 && d[end] >= 0.5 * d[inward]) tail = std::max(tail, d[end]);
  };
  std::vector<double> dens(nu), inner_dens(nu);
  auto note_tail = [&](std::size_t i, double density) {
    dens[i] = density;
    if (i + 1 == nu) check_ends(dens);
  };
  switch (model.kind()) {
    case GroupKind::Affine1D:
      // d mu_B = da / a = du.
      for (std::size_t i = 0; i < nu; ++i) {
        const double p[1] = {std::exp(u.x[i]) * g[0]};
        const double v = std::norm(f(std::span<const double>(p, 1)));
        note_tail(i, v);
        total += u.w[i] * v;
      }
      break;
    case GroupKind::Similitude: {
      // d mu_B = da / a dtheta.
      const std::size_t na = opt.angle_nodes;
      for (std::size_t i = 0; i < nu; ++i) {
        const double a = std::exp(u.x[i]);
        double ring = 0.0;
        for (std::size_t k = 0; k < na; ++k) {
          const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(na);
          const double c = std::cos(th), s = std::sin(th);
          ring += sq_abs(f, a * (c * g[0] + s * g[1]), a * (-s * g[0] + c * g[1]));
        }
        ring *= kTwoPi / static_cast<double>(na);
        note_tail(i, ring);
        total += u.w[i] * ring;
      }
      break;
    }
    case GroupKind::Diag2D: {
      // d mu_B = da1 da2 / |a1 a2| = du1 du2 on each sign component.
      const int comps = model.full_domain() ? 2 : 1;
      for (int e1 = 0; e1 < comps; ++e1)
        for (int e2 = 0; e2 < comps; ++e2)
          for (std::size_t i = 0; i < nu; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < nu; ++j) {
              inner_dens[j] = sq_abs(f, (e1 ? -1.0 : 1.0) * std::exp(u.x[i]) * g[0],
                                     (e2 ? -1.0 : 1.0) * std::exp(u.x[j]) * g[1]);
              row += u.w[j] * inner_dens[j];
            }
            check_ends(inner_dens);
            note_tail(i, row);
            total += u.w[i] * row;
          }
      break;
    }
    case GroupKind::UpperTri2D: {
      // d mu_B = da db / a^2 = e^{-u} du db.
      const Trapezoid line = sinh_line(1.0 / std::abs(g[0]), opt.line_extent, 1601);
      const int comps = model.full_domain() ? 2 : 1;
      for (int e = 0; e < comps; ++e)
        for (std::size_t i = 0; i < nu; ++i) {
          const double a = (e ? -1.0 : 1.0) * std::exp(u.x[i]);
          double row = 0.0;
          for (std::size_t j = 0; j < line.x.size(); ++j) row += line.w[j] * sq_abs(f, a * g[0], line.x[j] * g[0] + g[1]);
          row *= std::exp(-u.x[i]);
          note_tail(i, row);
          total += u.w[i] * row;
        }
      break;
    }
    case GroupKind::Shear: {
      // d mu_B = da ds / a^{3/2} = e^{-u/2} du ds.
      for (std::size_t i = 0; i < nu; ++i) {
        const double a = std::exp(u.x[i]), r = std::sqrt(a);
        const Trapezoid line = sinh_line(1.0 / (r * std::abs(g[0])), opt.line_extent, 1601);
        double row = 0.0;
        for (std::size_t j = 0; j < line.x.size(); ++j)
          row += line.w[j] * sq_abs(f, a * g[0], r * (line.x[j] * g[0] + g[1]));
        row /= r;
        note_tail(i, row);
        total += u.w[i] * row;
      }
      break;
    }
    case GroupKind::WeylHeisenberg:
    case GroupKind::G51: {
      // Haar measure db on the modulations, integrated without shifting.
      const double sign = model.kind() == GroupKind::G51 ? 1.0 : -1.0;
      const Trapezoid line = sinh_line(1.0, opt.line_extent, two ? 1601 : 8001);
      if (!two) {
        for (std::size_t j = 0; j < line.x.size(); ++j) {
          const double p[1] = {g[0] + sign * line.x[j]};
          total += line.w[j] * std::norm(f(std::span<const double>(p, 1)));
        }
      } else {
        for (std::size_t i = 0; i < line.x.size(); ++i)
          for (std::size_t j = 0; j < line.x.size(); ++j)
            total += line.w[i] * line.w[j] * sq_abs(f, g[0] + sign * line.x[i], g[1] + sign * line.x[j]);
      }
      break;
    }
  }
  return total;
}

}  // namespace

FeasibilityReport feasibility_check(const Wavelet& psi, const GroupModel& model, std::size_t probes,
                                    std::uint64_t seed, const AdmissibilityOptions& opt) {
  if (psi.model.dim != model.dim_base()) throw DomainError("wavelet dimension differs from the group's");
  FeasibilityReport r;
  r.group = model.name();
  r.wavelet_id = psi.id();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logr(std::log(0.5), std::log(4.0));
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<std::vector<double>> ws;
  while (ws.size() < probes) {
    const double rad = std::exp(logr(rng));
    std::vector<double> w;
    if (model.dim_base() == 1) w = {ws.size() % 2 == 0 ? rad : -rad};
    else {
      const double phi = ang(rng);
      w = {rad * std::cos(phi), rad * std::sin(phi)};
    }
    if (!is_singular(model, w, 0.1)) ws.push_back(std::move(w));
  }

  std::vector<FreqSample> samples(ws.size());
  std::vector<double> tails(ws.size());
  parallel_chunks(ws.size(), 1, [&](std::size_t, std::size_t i, std::size_t) {
    samples[i].omega = ws[i];
    samples[i].value = feasible_integral(model, psi.model.spectrum, ws[i], opt, tails[i]);
  });
  r.subspace = half_line_restrict(model, samples);
  r.per_freq = std::move(samples);
  r.constant = mean_of(r.per_freq);
  r.rel_variation = cv_of(r.per_freq, r.constant);
  const double norm_sq = psi.samples.size() ? std::pow(norm(psi.samples), 2) : 0.0;
  const double tail = tails.empty() ? 0.0 : *std::max_element(tails.begin(), tails.end());
  if (r.constant > 0.0 && (tail > opt.tail_ratio * r.constant ||
                           r.constant > opt.divergence_growth * (norm_sq > 0.0 ? norm_sq : 1.0))) {
    r.diverged = true;
    r.reason = "integral over B diverges";
  } else if (!(r.constant > 1e-10 * norm_sq) || norm_sq == 0.0) {
    r.reason = "constant is zero";
  } else if (r.rel_variation > opt.tolerance) {
    r.reason = "integral depends on gamma";
  }
  r.feasible = r.reason.empty();

  const auto adm = admissibility_constant(psi, model, {}, opt);
  r.admissibility_constant = adm.constant;
  r.rel_difference = adm.constant > 0.0 ? std::abs(r.constant - adm.constant) / adm.constant
                                        : (r.constant == 0.0 ? 0.0 : 1.0);
  r.consistent = r.rel_difference <= 1e-3 && adm.admissible == r.feasible;
  return r;
}

}  // namespace gcwt
