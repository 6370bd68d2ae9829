// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gcwt Authors

#include "gcwt/finite_rep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gcwt {

namespace {

using Poly = std::vector<std::int64_t>;  // integer coefficients, low degree first

// Exact division of monic integer polynomials.
Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const Poly& cyclotomic_poly(std::size_t L) {
  static std::mutex mu;
  static std::map<std::size_t, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(L); it != cache.end()) return it->second;
  }
  Poly p(L + 1, 0);
  p[0] = -1;
  p[L] = 1;
  for (std::size_t d = 1; d < L; ++d)
    if (L % d == 0) p = divide(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(L, std::move(p)).first->second;
}

// Reduces a full-length coefficient vector modulo Phi_L.
std::vector<Rational> reduce(std::vector<Rational> c, std::size_t L) {
  const Poly& phi = cyclotomic_poly(L);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    const Rational lead = c[i];
    if (lead.numerator() == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi[j];
  }
  c.resize(deg, Rational(0));
  return c;
}

std::size_t degree_of(std::size_t L) { return cyclotomic_poly(L).size() - 1; }

void require_same(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) throw DomainError("cyclotomic elements from different fields");
}

}  // namespace

Cyclotomic::Cyclotomic(std::size_t order) : order_(order) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
  c_.assign(degree_of(order), Rational(0));
}

Cyclotomic Cyclotomic::rational(std::size_t order, Rational r) {
  Cyclotomic z(order);
  z.c_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::root(std::size_t order, std::int64_t k) {
  const auto L = static_cast<std::int64_t>(order);
  const auto e = static_cast<std::size_t>(((k % L) + L) % L);
  std::vector<Rational> full(std::max(e + 1, degree_of(order)), Rational(0));
  full[e] = Rational(1);
  Cyclotomic z(order);
  z.c_ = reduce(std::move(full), order);
  return z;
}

Cyclotomic Cyclotomic::gaussian(std::size_t order, Rational a, Rational b) {
  if (order % 4 != 0) throw DomainError("Q(zeta_L) holds i only when 4 divides L");
  Cyclotomic i = root(order, static_cast<std::int64_t>(order / 4));
  return rational(order, a) + rational(order, b) * i;
}

bool Cyclotomic::is_zero() const {
  for (const Rational& r : c_)
    if (r.numerator() != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> full(order_, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) full[(order_ - j) % order_] += c_[j];
  Cyclotomic z(order_);
  z.c_ = reduce(std::move(full), order_);
  return z;
}

Complex Cyclotomic::value() const {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(order_);
    s += boost::rational_cast<double>(c_[j]) * Complex{std::cos(ang), std::sin(ang)};
  }
  return s;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same(*this, o);
  Cyclotomic z = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) z.c_[j] += o.c_[j];
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same(*this, o);
  Cyclotomic z = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) z.c_[j] -= o.c_[j];
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same(*this, o);
  std::vector<Rational> full(2 * c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < c_.size(); ++j) full[i + j] += c_[i] * o.c_[j];
  }
  Cyclotomic z(order_);
  z.c_ = reduce(std::move(full), order_);
  return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return order_ == o.order_ && c_ == o.c_; }

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].numerator() == 0) continue;
    if (any) os << " + ";
    os << c_[j];
    if (j > 0) os << " z^" << j;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

std::size_t d3_multiply(std::size_t u, std::size_t v) {
  const std::size_t r1 = u % 3, s1 = u / 3, r2 = v % 3, s2 = v / 3;
  // y x^r = x^{-r} y.
  const std::size_t r = (r1 + (s1 ? 3 - r2 : r2)) % 3;
  return r + 3 * ((s1 + s2) % 2);
}

std::size_t d3_inverse(std::size_t u) {
  for (std::size_t v = 0; v < kD3Order; ++v)
    if (d3_multiply(u, v) == 0) return v;
  throw DomainError("not a D3 element");
}

std::string d3_name(std::size_t u) {
  static const char* names[kD3Order] = {"e", "x", "x^2", "y", "xy", "x^2y"};
  if (u >= kD3Order) throw DomainError("not a D3 element");
  return names[u];
}

namespace {

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c = a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

ExactMatrix adjoint(const ExactMatrix& a) {
  ExactMatrix c = a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c[i][j] = a[j][i].conj();
  return c;
}

ExactMatrix scaled(const ExactMatrix& a, const Cyclotomic& s) {
  ExactMatrix c = a;
  for (auto& row : c)
    for (auto& v : row) v = s * v;
  return c;
}

ExactMatrix identity(std::size_t L) {
  const Cyclotomic one = Cyclotomic::rational(L, 1), zero(L);
  return {{{one, zero}, {zero, one}}};
}

}  // namespace

FiniteRep::FiniteRep(std::int64_t n, std::size_t t_samples) : n_(n), N_(t_samples) {
  if (t_samples == 0) throw DomainError("finite transform needs at least one torus sample");
  order_ = std::lcm(t_samples, std::size_t{12});
  const auto L = static_cast<std::int64_t>(order_);
  const Cyclotomic zero(order_), one = Cyclotomic::rational(order_, 1);
  const ExactMatrix x = {{{Cyclotomic::root(order_, L / 3), zero}, {zero, Cyclotomic::root(order_, -L / 3)}}};
  const ExactMatrix y = {{{zero, one}, {one, zero}}};
  for (std::size_t u = 0; u < kD3Order; ++u) {
    ExactMatrix m = identity(order_);
    for (std::size_t r = 0; r < u % 3; ++r) m = mat_mul(m, x);
    if (u >= 3) m = mat_mul(m, y);
    rho_[u] = m;
  }
}

ExactMatrix FiniteRep::operator()(std::size_t k, std::size_t u) const {
  // e^{i n t_k} = zeta_N^{n k} = zeta_L^{n k L / N}.
  const auto step = static_cast<std::int64_t>(order_ / N_);
  return scaled(rho_[u], Cyclotomic::root(order_, n_ * static_cast<std::int64_t>(k) * step));
}

bool FiniteRep::relations_hold() const {
  const ExactMatrix I = identity(order_);
  const ExactMatrix& x = rho_[1];
  const ExactMatrix& y = rho_[3];
  return mat_mul(mat_mul(x, x), x) == I && mat_mul(y, y) == I && mat_mul(x, y) == mat_mul(y, rho_[2]);
}

bool FiniteRep::unitary() const {
  const ExactMatrix I = identity(order_);
  for (const ExactMatrix& m : rho_)
    if (!(mat_mul(m, adjoint(m)) == I)) return false;
  return true;
}

double FiniteRep::unitarity_error() const {
  double err = 0.0;
  for (const ExactMatrix& m : rho_)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const Complex s = m[i][0].value() * std::conj(m[j][0].value()) + m[i][1].value() * std::conj(m[j][1].value());
        err = std::max(err, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
  return err;
}

std::size_t FiniteRep::homomorphism_failures() const {
  std::size_t failures = 0;
  for (std::size_t k1 = 0; k1 < N_; ++k1)
    for (std::size_t k2 = 0; k2 < N_; ++k2)
      for (std::size_t u = 0; u < kD3Order; ++u)
        for (std::size_t v = 0; v < kD3Order; ++v)
          if (!((*this)((k1 + k2) % N_, d3_multiply(u, v)) == mat_mul((*this)(k1, u), (*this)(k2, v)))) ++failures;
  return failures;
}

FiniteTransform finite_transform(const ExactVector& xi, const ExactVector& eta, const FiniteRep& rep) {
  const std::size_t L = rep.field_order();
  for (const auto* v : {&xi, &eta})
    for (const Cyclotomic& c : *v)
      if (c.order() != L) throw DomainError("vector entries must live in the representation's field");
  FiniteTransform w;
  w.t_samples = rep.t_samples();
  w.values.reserve(w.t_samples * kD3Order);
  for (std::size_t k = 0; k < w.t_samples; ++k)
    for (std::size_t u = 0; u < kD3Order; ++u) {
      const ExactMatrix m = rep(k, u);
      Cyclotomic s(L);
      for (std::size_t i = 0; i < 2; ++i) s = s + eta[i] * (m[i][0] * xi[0] + m[i][1] * xi[1]).conj();
      w.values.push_back(s);
    }
  return w;
}

Rational support_fraction(const FiniteTransform& w) {
  std::int64_t nonzero = 0;
  for (const Cyclotomic& v : w.values)
    if (!v.is_zero()) ++nonzero;
  if (w.values.empty()) return Rational(0);
  return Rational(nonzero, static_cast<std::int64_t>(w.values.size()));
}

namespace {

Rational parse_real(const std::string& s, const std::string& whole) {
  auto fail = [&]() -> Rational { throw ConfigError("cannot parse '" + whole + "' as a Gaussian rational"); };
  if (s.empty()) return Rational(1);
  try {
    std::size_t used = 0;
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const std::int64_t p = std::stoll(s.substr(0, slash), &used);
      if (used != slash) return fail();
      const std::string qs = s.substr(slash + 1);
      const std::int64_t q = std::stoll(qs, &used);
      if (used != qs.size() || q == 0) return fail();
      return Rational(p, q);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::int64_t p = std::stoll(digits, &used);
      if (used != digits.size() || s.size() - dot - 1 > 15) return fail();
      std::int64_t q = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) q *= 10;
      return Rational(p, q);
    }
    const std::int64_t p = std::stoll(s, &used);
    if (used != s.size()) return fail();
    return Rational(p);
  } catch (const std::logic_error&) {
    return fail();
  }
}

}  // namespace

Cyclotomic parse_gaussian_rational(const std::string& text, std::size_t order) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw ConfigError("empty Gaussian rational");
  Rational re(0), im(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    Rational sign(1);
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-') sign = Rational(-1);
      term.erase(0, 1);
    }
    if (!term.empty() && term.back() == 'i') {
      term.pop_back();
      im += sign * parse_real(term, text);
    } else {
      if (term.empty()) throw ConfigError("cannot parse '" + text + "' as a Gaussian rational");
      re += sign * parse_real(term, text);
    }
    pos = end;
  }
  return Cyclotomic::gaussian(order, re, im);
}

}  // namespace gcwt
