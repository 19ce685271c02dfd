#include "permod/exact.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace permod {

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

namespace {

using QPoly = std::vector<Rational>;  // ascending degree, may carry trailing zeros

void strip(QPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

// remainder of a by monic-leading b
QPoly qmod(QPoly a, const QPoly& b) {
  strip(a);
  const size_t db = b.size() - 1;
  const Rational lead_inv = b.back().inverse();
  while (a.size() > db) {
    Rational c = a.back() * lead_inv;
    size_t off = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) a[off + i] = a[off + i] - c * b[i];
    strip(a);
  }
  return a;
}

// exact quotient (remainder known zero)
QPoly qdiv_exact(QPoly a, const QPoly& b) {
  strip(a);
  if (a.empty()) return {};
  const size_t db = b.size() - 1;
  QPoly q(a.size() - db);
  const Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a.back() * lead_inv;
    size_t off = a.size() - 1 - db;
    q[off] = c;
    for (size_t i = 0; i <= db; ++i) a[off + i] = a[off + i] - c * b[i];
    strip(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

CycloField::CycloField(uint32_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("conductor must be >= 2");
  // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d, built up over divisors of n.
  std::vector<QPoly> phis(n + 1);
  phis[1] = {Rational(-1), Rational(1)};
  for (uint32_t m = 2; m <= n; ++m) {
    if (n % m != 0) continue;
    QPoly g(m + 1);
    g[0] = Rational(-1);
    g[m] = Rational(1);
    for (uint32_t d = 1; d < m; ++d)
      if (m % d == 0) g = qdiv_exact(std::move(g), phis[d]);
    phis[m] = std::move(g);
  }
  const QPoly& phi = phis[n];
  phi_.reserve(phi.size());
  for (const auto& c : phi) {
    // Phi_n has integer coefficients
    assert(c.value().get_den() == 1);
    phi_.push_back(c.value().get_num());
  }

  // X^e mod Phi_n for e < n
  const uint32_t deg = uint32_t(phi.size() - 1);
  powers_.resize(n);
  for (uint32_t e = 0; e < n; ++e) {
    if (e < deg) {
      std::vector<Rational> r(deg);
      r[e] = Rational(1);
      powers_[e] = std::move(r);
    } else {
      QPoly xe(e + 1);
      xe[e] = Rational(1);
      QPoly red = qmod(std::move(xe), phi);
      red.resize(deg);
      powers_[e] = std::move(red);
    }
  }
}

CycloPtr CycloField::make(uint32_t n) { return CycloPtr(new CycloField(n)); }

Cyclotomic::Cyclotomic(const CycloField* field, std::vector<Rational> rep)
    : field_(field), rep_(std::move(rep)) {
  assert(field_ && rep_.size() == field_->degree());
}

bool Cyclotomic::is_zero() const {
  return std::all_of(rep_.begin(), rep_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_one() const {
  if (!rep_[0].is_one()) return false;
  return std::all_of(rep_.begin() + 1, rep_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> r(rep_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = rep_[i] + o.rep_[i];
  return Cyclotomic(field_, std::move(r));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> r(rep_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = rep_[i] - o.rep_[i];
  return Cyclotomic(field_, std::move(r));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> r(rep_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = -rep_[i];
  return Cyclotomic(field_, std::move(r));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  assert(field_ == o.field_);
  const uint32_t deg = field_->degree();
  std::vector<Rational> prod(2 * deg - 1);
  for (uint32_t i = 0; i < deg; ++i) {
    if (rep_[i].is_zero()) continue;
    for (uint32_t j = 0; j < deg; ++j) {
      if (o.rep_[j].is_zero()) continue;
      prod[i + j] = prod[i + j] + rep_[i] * o.rep_[j];
    }
  }
  // fold the overflow part with the precomputed X^e table (X^n = 1)
  std::vector<Rational> r(prod.begin(), prod.begin() + deg);
  for (uint32_t e = deg; e < prod.size(); ++e) {
    if (prod[e].is_zero()) continue;
    const auto& pw = field_->power_rep(e % field_->conductor());
    for (uint32_t i = 0; i < deg; ++i)
      if (!pw[i].is_zero()) r[i] = r[i] + prod[e] * pw[i];
  }
  return Cyclotomic(field_, std::move(r));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  // extended Euclid of rep against Phi_n over Q
  QPoly a(rep_.begin(), rep_.end());
  strip(a);
  QPoly b;
  b.reserve(field_->modulus().size());
  for (const auto& c : field_->modulus()) b.push_back(Rational(mpq_class(c)));
  // invariants: a = u * rep mod Phi, b = v * rep mod Phi
  QPoly u{Rational(1)}, v{};
  QPoly ra = a, rb = b;
  while (true) {
    strip(rb);
    if (rb.empty()) break;
    // q, r of ra by rb
    QPoly q(ra.size() > rb.size() - 1 ? ra.size() - rb.size() + 1 : 1);
    QPoly rem = ra;
    strip(rem);
    const Rational lead_inv = rb.back().inverse();
    while (rem.size() >= rb.size() && !rem.empty()) {
      Rational c = rem.back() * lead_inv;
      size_t off = rem.size() - rb.size();
      if (q.size() < off + 1) q.resize(off + 1);
      q[off] = c;
      for (size_t i = 0; i < rb.size(); ++i)
        rem[off + i] = rem[off + i] - c * rb[i];
      strip(rem);
    }
    QPoly nu = qmul(q, v);
    // u - q*v
    QPoly w = u;
    if (w.size() < nu.size()) w.resize(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) w[i] = w[i] - nu[i];
    ra = std::move(rb);
    rb = std::move(rem);
    u = std::move(v);
    v = std::move(w);
  }
  // ra = gcd = u_final * rep + (...) * Phi ; gcd is a nonzero constant
  strip(ra);
  if (ra.size() != 1)
    throw std::logic_error("element not invertible mod Phi_n");
  Rational scale = ra[0].inverse();
  std::vector<Rational> out(field_->degree());
  QPoly red = qmod(std::move(u), b);
  for (size_t i = 0; i < red.size() && i < out.size(); ++i)
    out[i] = red[i] * scale;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::zero() const {
  return Cyclotomic(field_, std::vector<Rational>(field_->degree()));
}

Cyclotomic Cyclotomic::one() const {
  std::vector<Rational> r(field_->degree());
  r[0] = Rational(1);
  return Cyclotomic(field_, std::move(r));
}

Cyclotomic Cyclotomic::conjugate(uint32_t a) const {
  const uint32_t n = field_->conductor();
  a %= n;
  std::vector<Rational> out(field_->degree());
  for (uint32_t i = 0; i < field_->degree(); ++i) {
    if (rep_[i].is_zero()) continue;
    const auto& pw = field_->power_rep(uint32_t(uint64_t(i) * a % n));
    for (uint32_t j = 0; j < field_->degree(); ++j)
      if (!pw[j].is_zero()) out[j] = out[j] + rep_[i] * pw[j];
  }
  return Cyclotomic(field_, std::move(out));
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rep_.size(); ++i) {
    if (i) os << ",";
    os << rep_[i].str();
  }
  os << "]";
  return os.str();
}

Cyclotomic cyclo_from_power(const CycloPtr& field, int64_t e) {
  const int64_t n = field->conductor();
  uint32_t em = uint32_t(((e % n) + n) % n);
  return Cyclotomic(field.get(), field->power_rep(em));
}

Cyclotomic cyclo_scalar(const CycloPtr& field, const Rational& r) {
  std::vector<Rational> rep(field->degree());
  rep[0] = r;
  return Cyclotomic(field.get(), std::move(rep));
}

}  // namespace permod
