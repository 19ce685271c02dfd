#include "permod/uncertainty.hpp"

#include <algorithm>
#include <map>

namespace permod {

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

Poly<FF> x_minus_one_power(uint32_t mu, const FF& ex) {
  Poly<FF> xm1({-ex.one(), ex.one()}, ex);
  Poly<FF> h = Poly<FF>::x_power(0, ex);
  for (uint32_t i = 0; i < mu; ++i) h = h * xm1;
  return h;
}

}  // namespace

Criterion63Report criterion_6_3(const Poly<FF>& f, uint32_t p, bool cross_check) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() >= int(p)) throw std::invalid_argument("deg f must be < p");
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  const FiniteField& fld = f.zero_coeff().field();

  Criterion63Report rep;
  rep.p = p;
  rep.f = f;
  if (fld.p() == p) {
    // X^p - 1 = (X-1)^p: h is (X-1)^mu with mu the multiplicity of the root 1
    auto mult = multiplicity_check(f, 0, fld.p());
    rep.h = x_minus_one_power(mult.multiplicity, f.zero_coeff());
  } else {
    rep.h = poly_gcd(x_pow_minus_one(p, f.zero_coeff()), f);
  }
  rep.t_f = term_count(f);
  rep.deg_h = std::max(rep.h.degree(), 0);
  rep.fails = rep.t_f <= rep.deg_h;
  rep.implied_t_plus_d = rep.t_f + (int(p) - rep.deg_h);

  if (cross_check) {
    static thread_local std::map<uint32_t, std::shared_ptr<PermGroup>> cyc_cache;
    auto& grp = cyc_cache[p];
    if (!grp) grp = std::make_shared<PermGroup>(cyclic_group(p));
    ModVector<FF> v{grp.get(), std::vector<FF>(p, f.zero_coeff().zero())};
    for (uint32_t i = 0; i < p; ++i) v.coeffs[i] = f.coeff(i);
    rep.d_check = dim_generated(v);
    if (rep.d_check != size_t(int(p) - rep.deg_h))
      throw invariant_violation("d(v) != p - deg h");
    const bool le = rep.t_f + int(rep.d_check) <= int(p);
    if (le != rep.fails)
      throw invariant_violation("criterion mismatch with t(v) + d(v) <= p");
  }
  return rep;
}

std::optional<TableEntry> search_counterexample(uint32_t p, const FieldPtr& field,
                                                SearchMode mode, DivisorScan scan) {
  if (field->p() == p)
    throw std::invalid_argument("q must not be a power of p");
  auto factors = factor_cyclic(p, field);
  const uint64_t full = (uint64_t(1) << factors.size()) - 1;

  // proper nontrivial divisors in scan order
  auto for_each_divisor = [&](const std::function<bool(const Poly<FF>&)>& visit) {
    if (scan == DivisorScan::IrreducibleFactors) {
      for (const auto& f : factors)
        if (!visit(f)) return;
    } else {
      enumerate_divisors<FF>(factors, [&](uint64_t mask, const Poly<FF>& d) {
        if (mask == 0 || mask == full) return true;
        return visit(d);
      });
    }
  };

  std::optional<TableEntry> hit;
  for_each_divisor([&](const Poly<FF>& d) {
    if (term_count(d) <= d.degree()) {
      hit = TableEntry{p, uint64_t(field->order()), TableEntry::Kind::MissingTermDivisor, d};
      return false;
    }
    return true;
  });
  if (hit || mode == SearchMode::DivisorsOnly) return hit;

  // multiples f = g*h, deg f < p, t(f) <= deg h; g monic in (degree, lex) order
  std::optional<TableEntry> mhit;
  for_each_divisor([&](const Poly<FF>& h) {
    const int dh = h.degree();
    if (dh < 2) return true;  // f = g*h keeps >= 2 terms, never <= deg h <= 1
    const uint64_t q = uint64_t(field->order());
    for (int dg = 0; dg < int(p) - dh; ++dg) {
      // monic g of degree dg, the constant coefficient most significant
      uint64_t combos = 1;
      for (int i = 0; i < dg; ++i) combos *= q;
      for (uint64_t ci = 0; ci < combos; ++ci) {
        std::vector<FF> gc(dg + 1, field->zero());
        uint64_t rest = ci;
        for (int i = dg - 1; i >= 0; --i) {
          gc[i] = field->from_index(rest % q);
          rest /= q;
        }
        gc[dg] = field->one();
        Poly<FF> g(std::move(gc), field->zero());
        Poly<FF> f = g * h;
        if (term_count(f) <= dh) {
          mhit = TableEntry{p, field->order(), TableEntry::Kind::Multiple, f};
          return false;
        }
      }
    }
    return true;
  });
  return mhit;
}

std::vector<TableRow> minimal_table(const std::vector<uint32_t>& primes,
                                    uint64_t q_max, SearchMode mode,
                                    DivisorScan scan) {
  std::vector<TableRow> out;
  for (uint32_t p : primes) {
    TableRow row{p, {}};
    std::map<uint64_t, bool> has_hit;
    for (uint64_t q = 2; q <= q_max; ++q) {
      uint64_t base = 0;
      for (uint64_t b = 2; b * b <= q; ++b) {
        if (q % b == 0) {
          base = b;
          break;
        }
      }
      uint32_t k = 1;
      if (base == 0) {
        base = q;
      } else {
        uint64_t r = q;
        k = 0;
        while (r % base == 0) {
          r /= base;
          ++k;
        }
        if (r != 1) continue;  // not a prime power
      }
      if (!is_prime_u64(base)) continue;
      if (base == p) continue;
      // subfield-minimality short-circuit: GF(q) is skipped entirely when a
      // proper subfield already has a counterexample
      bool subfield_hit = false;
      for (uint32_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        uint64_t sq = 1;
        for (uint32_t i = 0; i < d; ++i) sq *= base;
        if (has_hit.count(sq) && has_hit[sq]) subfield_hit = true;
      }
      if (subfield_hit) continue;
      FieldPtr field = make_field(base, k);
      auto hit = search_counterexample(p, field, mode, scan);
      has_hit[q] = hit.has_value();
      if (hit) row.fields.push_back(*hit);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Cyclotomic chebotarev_minor_det(const CycloPtr& field,
                                const std::vector<uint32_t>& rows,
                                const std::vector<uint32_t>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor not square");
  const uint32_t p = field->conductor();
  Matrix<Cyclotomic> m(rows.size(), cols.size(), cyclo_scalar(field, Rational(0)));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m.at(i, j) = cyclo_from_power(field, int64_t(rows[i]) * cols[j] % p);
  return det_exact(std::move(m));
}

namespace {

// next k-subset of {0..n-1} in lexicographic (combinadic) order
bool next_subset(std::vector<uint32_t>& s, uint32_t n) {
  const uint32_t k = uint32_t(s.size());
  int i = int(k) - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (uint32_t j = uint32_t(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

std::vector<std::vector<uint32_t>> all_subsets(uint32_t n, uint32_t k) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> s(k);
  for (uint32_t i = 0; i < k; ++i) s[i] = i;
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

}  // namespace

ChebotarevReport chebotarev_verify_serial(uint32_t p, std::optional<uint32_t> k_max) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  const uint32_t kmax = k_max.value_or(p);
  CycloPtr field = CycloField::make(p);
  ChebotarevReport rep;
  rep.p = p;
  rep.max_size = kmax;
  for (uint32_t k = 1; k <= kmax; ++k) {
    auto rowsets = all_subsets(p, k);
    for (const auto& r : rowsets) {
      std::vector<uint32_t> c(k);
      for (uint32_t i = 0; i < k; ++i) c[i] = i;
      do {
        ++rep.minors_checked;
        if (chebotarev_minor_det(field, r, c).is_zero())
          rep.failures.push_back(MinorWitness{k, r, c});
      } while (next_subset(c, p));
    }
  }
  if (!rep.failures.empty())
    throw invariant_violation("Chebotarev minor with zero determinant found");
  return rep;
}

RefutationWitness chebotarev_refute_mod_q(uint32_t p, const FieldPtr& field,
                                          const Poly<FF>& f) {
  auto crit = criterion_6_3(f, p, /*cross_check=*/true);
  if (!crit.fails)
    throw std::invalid_argument("criterion does not fail for this polynomial");
  if (field->p() == p) throw std::invalid_argument("field characteristic equals p");

  const uint64_t m = multiplicative_order_mod(field->order(), p);
  FieldPtr ext = (m == 1) ? field
                          : make_field(field->p(), uint32_t(field->k() * m));
  Embedding emb(field, ext);
  FF zeta = find_element_of_order(*ext, p);

  // embed f into the extension
  std::vector<FF> fc;
  fc.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) fc.push_back(emb.up(c));
  Poly<FF> fe(std::move(fc), ext->zero());

  RefutationWitness w;
  w.p = p;
  w.q = field->order();
  w.ext_degree = ext->k();
  for (uint32_t i = 0; i < f.coeffs().size(); ++i)
    if (!f.coeff(i).is_zero()) w.rows.push_back(i);
  for (uint32_t y = 0; y < p && w.cols.size() < w.rows.size(); ++y)
    if (fe.evaluate(zeta.pow(y)).is_zero()) w.cols.push_back(y);
  if (w.cols.size() < w.rows.size())
    throw invariant_violation("not enough vanishing characters; deg h >= t(f) failed");

  Matrix<FF> sub(w.rows.size(), w.cols.size(), ext->zero());
  for (size_t i = 0; i < w.rows.size(); ++i)
    for (size_t j = 0; j < w.cols.size(); ++j)
      sub.at(i, j) = zeta.pow(uint64_t(w.rows[i]) * w.cols[j] % p);
  w.det_zero = det_exact(sub).is_zero();
  w.submatrix = sub;
  if (!w.det_zero)
    throw invariant_violation("refutation submatrix is nonsingular");
  return w;
}

size_t fourier_support(const ModVector<Rational>& v) {
  const PermGroup& g = *v.group;
  const uint32_t n = g.degree();
  if (n == 1) return v.coeffs[0].is_zero() ? 0 : 1;
  const auto& elems = g.elements();
  if (elems.size() != n)
    throw std::invalid_argument("group is not regular cyclic of order n");
  // first element of order n in discovery order generates
  std::optional<Permutation> gen;
  for (const auto& e : elems) {
    if (e.order() == n) {
      gen = e;
      break;
    }
  }
  if (!gen) throw std::invalid_argument("group is not cyclic");
  if (!is_transitive(g)) throw std::invalid_argument("group is not transitive");

  // relabel points by the powers of the generator acting on 0
  std::vector<uint32_t> point_at(n);
  uint32_t pt = 0;
  for (uint32_t i = 0; i < n; ++i) {
    point_at[i] = pt;
    pt = gen->apply(pt);
  }

  CycloPtr field = CycloField::make(n);
  size_t support = 0;
  for (uint32_t j = 0; j < n; ++j) {
    Cyclotomic sum = cyclo_scalar(field, Rational(0));
    for (uint32_t i = 0; i < n; ++i) {
      const Rational& c = v.coeffs[point_at[i]];
      if (c.is_zero()) continue;
      sum = sum + cyclo_scalar(field, c) *
                      cyclo_from_power(field, int64_t(i) * j % n);
    }
    if (!sum.is_zero()) ++support;
  }
  return support;
}

Exhaustive64Report exhaustive_6_4_serial(uint32_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  FieldPtr field = make_field(p, 1);
  uint64_t total = 1;
  for (uint32_t i = 0; i < p; ++i) total *= p;
  Exhaustive64Report rep;
  rep.p = p;
  for (uint64_t idx = 1; idx < total; ++idx) {
    std::vector<FF> c(p, field->zero());
    uint64_t rest = idx;
    for (uint32_t i = 0; i < p; ++i) {
      c[i] = field->scalar(rest % p);
      rest /= p;
    }
    Poly<FF> f(std::move(c), field->zero());
    auto crit = criterion_6_3(f, p, /*cross_check=*/false);
    ++rep.vectors_checked;
    if (crit.fails) {
      ++rep.violations;
      if (!rep.first_violation) {
        std::vector<uint32_t> lit;
        for (uint32_t i = 0; i < p; ++i) lit.push_back(f.coeff(i).rep()[0]);
        rep.first_violation = lit;
      }
    }
  }
  if (rep.violations)
    throw invariant_violation("Theorem 6.4 violated in characteristic p");
  return rep;
}

}  // namespace permod
