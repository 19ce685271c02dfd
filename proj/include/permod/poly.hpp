#ifndef PERMOD_POLY_HPP
#define PERMOD_POLY_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permod/ff.hpp"

namespace permod {

/// Dense univariate polynomial over a field element type K (FF, Rational or
/// Cyclotomic).  Coefficients ascending degree, no trailing zeros; the zero
/// polynomial has an empty coefficient list.  An exemplar zero element pins
/// the coefficient field.
template <class K>
class Poly {
public:
  Poly() = default;  // placeholder only; assign before use
  explicit Poly(const K& exemplar) : zero_(exemplar.zero()) {}
  Poly(std::vector<K> coeffs, const K& exemplar) : zero_(exemplar.zero()) {
    c_ = std::move(coeffs);
    strip();
  }

  static Poly x_power(size_t e, const K& exemplar) {
    std::vector<K> c(e + 1, exemplar.zero());
    c[e] = exemplar.one();
    return Poly(std::move(c), exemplar);
  }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const K& zero_coeff() const { return zero_; }
  const K& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly operator+(const Poly& o) const {
    std::vector<K> r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), zero_);
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(std::move(r), zero_);
  }

  Poly operator-(const Poly& o) const {
    std::vector<K> r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), zero_);
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Poly(std::move(r), zero_);
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(zero_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(r), zero_);
  }

  Poly scaled(const K& s) const {
    std::vector<K> r = c_;
    for (auto& x : r) x = x * s;
    return Poly(std::move(r), zero_);
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(c_.back().inverse());
  }

  /// f = q*g + r with deg r < deg g.
  std::pair<Poly, Poly> divrem(const Poly& g) const {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly r = *this;
    if (r.degree() < g.degree()) return {Poly(zero_), r};
    std::vector<K> q(r.c_.size() - g.c_.size() + 1, zero_);
    const K lead_inv = g.c_.back().inverse();
    while (!r.is_zero() && r.c_.size() >= g.c_.size()) {
      K c = r.c_.back() * lead_inv;
      size_t off = r.c_.size() - g.c_.size();
      q[off] = c;
      for (size_t i = 0; i < g.c_.size(); ++i)
        r.c_[off + i] = r.c_[off + i] - c * g.c_[i];
      r.strip();
    }
    return {Poly(std::move(q), zero_), r};
  }

  K evaluate(const K& x) const {
    K acc = zero_;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

private:
  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
  K zero_;
};

/// Monic gcd via Euclid.  Errors when both arguments are zero.
template <class K>
Poly<K> poly_gcd(Poly<K> f, Poly<K> g) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  while (!g.is_zero()) {
    Poly<K> r = f.divrem(g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

/// Number of nonzero coefficients, t(f).
template <class K>
int term_count(const Poly<K>& f) {
  int t = 0;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) ++t;
  return t;
}

/// X^p - 1 over the coefficient field of the exemplar.
template <class K>
Poly<K> x_pow_minus_one(uint32_t p, const K& exemplar) {
  std::vector<K> c(p + 1, exemplar.zero());
  c[0] = -exemplar.one();
  c[p] = exemplar.one();
  return Poly<K>(std::move(c), exemplar);
}

/// Partition of {0..p-1} into {0} and the q-cyclotomic cosets, cosets sorted
/// by minimal element.
struct CosetPartition {
  uint32_t p;
  uint64_t q_mod_p;
  std::vector<std::vector<uint32_t>> cosets;
};

CosetPartition cyclotomic_cosets(uint32_t p, uint64_t q);

/// Monic irreducible factors of X^p - 1 over the given field (characteristic
/// coprime to p), one factor per cyclotomic coset, sorted by (degree,
/// coefficient list).  The product of the factors is checked against X^p - 1.
std::vector<Poly<FF>> factor_cyclic(uint32_t p, const FieldPtr& field);

/// All 2^(#factors) subset-product divisors, visited in increasing
/// subset-bitmask order over the factor list.  Returns false from the
/// callback to stop early.
template <class K>
void enumerate_divisors(const std::vector<Poly<K>>& factors,
                        const std::function<bool(uint64_t, const Poly<K>&)>& visit) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  if (factors.size() >= 63) throw std::invalid_argument("too many factors");
  const uint64_t total = uint64_t(1) << factors.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    Poly<K> d = Poly<K>::x_power(0, factors[0].zero_coeff());
    for (size_t i = 0; i < factors.size(); ++i)
      if (mask >> i & 1) d = d * factors[i];
    if (!visit(mask, d)) return;
  }
}

template <class K>
std::vector<Poly<K>> all_divisors(const std::vector<Poly<K>>& factors) {
  std::vector<Poly<K>> out;
  enumerate_divisors<K>(factors, [&](uint64_t, const Poly<K>& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

struct MultiplicityReport {
  uint32_t multiplicity;  // exact multiplicity of the root 1
  bool divisible;         // (X-1)^m | f
  int t;                  // term count of f
};

/// Exact multiplicity of the root 1 in f, with the Lemma "t(f) > multiplicity"
/// asserted.  In prime characteristic p the degree of f must be < p.
template <class K>
MultiplicityReport multiplicity_check(const Poly<K>& f, uint32_t m,
                                      uint32_t characteristic) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (characteristic != 0 && f.degree() >= int(characteristic))
    throw std::invalid_argument("degree must be < p in characteristic p");
  Poly<K> xm1({-f.zero_coeff().one(), f.zero_coeff().one()}, f.zero_coeff());
  uint32_t mu = 0;
  Poly<K> g = f;
  while (true) {
    auto [q, r] = g.divrem(xm1);
    if (!r.is_zero()) break;
    ++mu;
    g = std::move(q);
    if (g.is_zero()) break;
  }
  MultiplicityReport rep{mu, m <= mu, term_count(f)};
  if (rep.t <= int(mu))
    throw invariant_violation("term count does not exceed root-1 multiplicity");
  return rep;
}

std::string poly_str(const Poly<FF>& f);

}  // namespace permod

#endif
