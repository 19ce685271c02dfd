#include "permod/ff.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <map>
#include <sstream>

namespace permod {

namespace {

u128 ipow_checked(uint64_t b, uint32_t e) {
  u128 r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > (u128(1) << 120) / b)
      throw std::invalid_argument("field order exceeds 2^120");
    r *= b;
  }
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomial helpers over Z_p, coefficients ascending, trailing zeros
// stripped.  Used for modulus search and inversion only.
using PolyP = std::vector<uint32_t>;

void strip(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  strip(r);
  return r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  // p prime, a != 0
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return uint32_t((t % p + p) % p);
}

PolyP pmod(PolyP a, const PolyP& m, uint32_t p) {
  strip(a);
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
    size_t off = a.size() - 1 - dm;
    if (c) {
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t sub = uint64_t(c) * m[i] % p;
        a[off + i] = uint32_t((a[off + i] + p - sub) % p);
      }
    }
    strip(a);
    if (a.size() <= dm) break;
  }
  return a;
}

PolyP pgcd(PolyP a, PolyP b, uint32_t p) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    PolyP r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP ppowmod(PolyP base, uint64_t e, const PolyP& m, uint32_t p) {
  PolyP r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PolyP psub(PolyP a, const PolyP& b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  strip(a);
  return a;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p) {
  PolyP m = f;
  strip(m);
  if (m.size() < 2) return false;
  const uint32_t k = uint32_t(m.size() - 1);
  if (k == 1) return true;
  // gcd(X^{p^i} - X, f) = 1 for i < k and X^{p^k} = X mod f.
  PolyP x{0, 1};
  PolyP t = x;
  for (uint32_t i = 1; i < k; ++i) {
    t = ppowmod(std::move(t), p, m, p);
    PolyP g = pgcd(psub(t, x, p), m, p);
    if (g.size() != 1) return false;
  }
  t = ppowmod(std::move(t), p, m, p);
  return psub(std::move(t), x, p).empty();
}

FiniteField::FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), q_(ipow_checked(p, k)), modulus_(std::move(modulus)) {}

FieldPtr make_field(uint64_t p, uint32_t k,
                    std::optional<std::vector<uint32_t>> modulus) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  if (p > (uint64_t(1) << 30)) throw std::invalid_argument("characteristic too large");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (k > kMaxExtensionDegree)
    throw std::invalid_argument("extension degree exceeds cap " +
                                std::to_string(kMaxExtensionDegree));
  ipow_checked(p, k);
  const uint32_t pp = uint32_t(p);

  std::vector<uint32_t> m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c %= pp;
    if (m.size() != size_t(k) + 1 || m.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree k");
    if (!is_irreducible_mod_p(m, pp))
      throw std::invalid_argument("modulus is reducible over GF(p)");
  } else if (k == 1) {
    m = {0, 1};  // X
  } else {
    // Lexicographically smallest monic irreducible: scan coefficient tuples
    // (c_0,...,c_{k-1}) with c_0 compared first.
    m.assign(size_t(k) + 1, 0);
    m[k] = 1;
    // c_0 = 0 would make X a factor, so the scan starts at (1,0,...,0)
    std::vector<uint32_t> c(k, 0);
    c[0] = 1;
    bool found = false;
    while (!found) {
      for (uint32_t i = 0; i < k; ++i) m[i] = c[i];
      uint64_t s = 1;  // value at 1; skip candidates with root 1
      for (uint32_t i = 0; i < k; ++i) s += c[i];
      if (s % pp != 0 && is_irreducible_mod_p(m, pp)) {
        found = true;
        break;
      }
      // increment tuple with c_{k-1} varying fastest; c_0 stays >= 1
      int i = int(k) - 1;
      while (i > 0 && c[i] == pp - 1) c[i--] = 0;
      if (i == 0 && c[0] == pp - 1)
        throw invariant_violation("no irreducible polynomial found");
      ++c[i];
    }
  }
  return FieldPtr(new FiniteField(pp, k, std::move(m)));
}

FF::FF(const FiniteField* field, std::vector<uint32_t> rep)
    : field_(field), rep_(std::move(rep)) {
  assert(field_ && rep_.size() == field_->k());
}

bool FF::is_zero() const {
  return std::all_of(rep_.begin(), rep_.end(), [](uint32_t c) { return c == 0; });
}

bool FF::is_one() const {
  if (rep_[0] != 1) return false;
  return std::all_of(rep_.begin() + 1, rep_.end(),
                     [](uint32_t c) { return c == 0; });
}

FF FF::operator+(const FF& o) const {
  assert(field_ == o.field_);
  std::vector<uint32_t> r(rep_.size());
  const uint32_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) r[i] = (rep_[i] + o.rep_[i]) % p;
  return FF(field_, std::move(r));
}

FF FF::operator-(const FF& o) const {
  assert(field_ == o.field_);
  std::vector<uint32_t> r(rep_.size());
  const uint32_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) r[i] = (rep_[i] + p - o.rep_[i]) % p;
  return FF(field_, std::move(r));
}

FF FF::operator-() const {
  std::vector<uint32_t> r(rep_.size());
  const uint32_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) r[i] = (p - rep_[i]) % p;
  return FF(field_, std::move(r));
}

std::vector<uint32_t> FiniteField::mul_reps(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) const {
  std::vector<uint32_t> prod(2 * k_ - 1, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (uint32_t j = 0; j < k_; ++j)
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p_);
  }
  // reduce by the monic modulus
  for (int d = int(prod.size()) - 1; d >= int(k_); --d) {
    uint32_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t sub = uint64_t(c) * modulus_[i] % p_;
      prod[d - k_ + i] = uint32_t((prod[d - k_ + i] + p_ - sub) % p_);
    }
  }
  prod.resize(k_);
  return prod;
}

FF FF::operator*(const FF& o) const {
  assert(field_ == o.field_);
  return FF(field_, field_->mul_reps(rep_, o.rep_));
}

FF FF::pow(u128 e) const {
  FF r = one();
  FF b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FF FF::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  return pow(field_->order() - 2);
}

FF FF::zero() const { return field_->zero(); }
FF FF::one() const { return field_->one(); }

uint64_t FF::index() const {
  uint64_t idx = 0;
  for (uint32_t c : rep_) idx = idx * field_->p() + c;
  return idx;
}

std::string FF::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rep_.size(); ++i) {
    if (i) os << ';';
    os << rep_[i];
  }
  return os.str();
}

FF FiniteField::zero() const { return FF(this, std::vector<uint32_t>(k_, 0)); }

FF FiniteField::one() const {
  std::vector<uint32_t> r(k_, 0);
  r[0] = 1;
  return FF(this, std::move(r));
}

FF FiniteField::scalar(uint64_t a) const {
  std::vector<uint32_t> r(k_, 0);
  r[0] = uint32_t(a % p_);
  return FF(this, std::move(r));
}

FF FiniteField::from_rep(std::vector<uint32_t> rep) const {
  if (rep.size() > k_) throw std::invalid_argument("rep longer than degree");
  rep.resize(k_, 0);
  for (auto& c : rep) c %= p_;
  return FF(this, std::move(rep));
}

FF FiniteField::from_index(uint64_t i) const {
  if (i >= q_) throw std::invalid_argument("element index out of range");
  std::vector<uint32_t> rep(k_, 0);
  for (int j = int(k_) - 1; j >= 0; --j) {
    rep[j] = uint32_t(i % p_);
    i /= p_;
  }
  return FF(this, std::move(rep));
}

std::string FiniteField::spec() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

uint64_t multiplicative_order_mod(u128 q, uint64_t p) {
  uint64_t qm = uint64_t(q % p);
  if (qm == 0) throw std::invalid_argument("q divisible by p");
  uint64_t o = 1, x = qm;
  while (x != 1) {
    x = x * qm % p;
    ++o;
  }
  return o;
}

namespace {

bool has_order_exactly(const FF& x, uint64_t n,
                       const std::vector<uint64_t>& n_primes) {
  if (!x.pow(n).is_one()) return false;
  for (uint64_t l : n_primes)
    if (x.pow(n / l).is_one()) return false;
  return true;
}

}  // namespace

FF find_element_of_order(const FiniteField& field, uint64_t n) {
  const u128 q = field.order();
  if (n == 0 || (q - 1) % n != 0)
    throw std::invalid_argument("n does not divide p^k - 1");
  if (n == 1) return field.one();

  const auto n_primes = prime_factors(n);
  constexpr u128 kScanThreshold = 4096;

  if (q > kScanThreshold) {
    // The order-n elements are exactly the generators of the unique cyclic
    // subgroup of order n, so the canonical-first one is the rep-lex minimum
    // over the generators of <y> for any y of order n.  Such a y is found in
    // O(1) expected tries as x^((q-1)/n).
    const uint64_t tries = 1000000;
    for (uint64_t i = 1; i < tries; ++i) {
      FF y = field.from_index(i).pow((q - 1) / n);
      if (!has_order_exactly(y, n, n_primes)) continue;
      FF best = y;
      FF cur = y;
      for (uint64_t e = 2; e < n; ++e) {
        cur = cur * y;
        if (std::gcd(e, n) == 1 && cur.rep_less(best)) best = cur;
      }
      return best;
    }
    throw invariant_violation("no element of the requested order found");
  }

  for (uint64_t i = 1; i < uint64_t(q); ++i) {
    FF x = field.from_index(i);
    if (has_order_exactly(x, n, n_primes)) return x;
  }
  throw invariant_violation("no element of the requested order found");
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup)
    : sub_(std::move(sub)), sup_(std::move(sup)) {
  if (sub_->p() != sup_->p())
    throw std::invalid_argument("embedding requires equal characteristic");
  if (sup_->k() % sub_->k() != 0)
    throw std::invalid_argument("subfield degree must divide");
  if (sub_->order() > (u128(1) << 20))
    throw std::invalid_argument("subfield too large to tabulate");

  FF root = sup_->zero();
  if (sub_->k() == 1) {
    root = sup_->one();  // unused; scalars embed directly
  } else {
    // Enumerate the subfield of order q inside sup as {0} u <theta>, theta of
    // order q-1, then take the lex-smallest root of the subfield modulus.
    const uint64_t q = uint64_t(sub_->order());
    FF theta = find_element_of_order(*sup_, q - 1);
    std::optional<FF> best;
    FF cand = sup_->one();
    for (uint64_t i = 0; i < q - 1; ++i) {
      // evaluate modulus at cand (coefficients are prime-field scalars)
      FF acc = sup_->zero();
      FF pw = sup_->one();
      for (uint32_t c : sub_->modulus()) {
        if (c) acc = acc + sup_->scalar(c) * pw;
        pw = pw * cand;
      }
      if (acc.is_zero() && (!best || cand.rep_less(*best))) best = cand;
      cand = cand * theta;
    }
    if (!best) throw invariant_violation("subfield modulus has no root");
    root = *best;
  }

  image_.reserve(size_t(sub_->order()));
  for (uint64_t i = 0; i < uint64_t(sub_->order()); ++i) {
    FF a = sub_->from_index(i);
    FF acc = sup_->zero();
    if (sub_->k() == 1) {
      acc = sup_->scalar(a.rep()[0]);
    } else {
      FF pw = sup_->one();
      for (uint32_t c : a.rep()) {
        if (c) acc = acc + sup_->scalar(c) * pw;
        pw = pw * root;
      }
    }
    image_.push_back(acc);
  }
}

FF Embedding::up(const FF& a) const { return image_[a.index()]; }

std::optional<FF> Embedding::down(const FF& b) const {
  for (uint64_t i = 0; i < image_.size(); ++i)
    if (image_[i] == b) return sub_->from_index(i);
  return std::nullopt;
}

}  // namespace permod
