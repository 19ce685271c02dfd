#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permod/parse.hpp"
#include "permod/poly.hpp"
#include "test_util.hpp"

using namespace permod;
using namespace permod::testutil;

namespace {

Poly<FF> make(const std::string& csv, const FieldPtr& f) {
  return parse_poly(csv, f);
}

}  // namespace

TEST_CASE("poly_gcd examples") {
  auto f2 = make_field(2);
  // gcd(X^7 - 1, X^3 + X + 1) = X^3 + X + 1; oracle: division is exact
  auto f = make("1,1,0,1", f2);
  auto g = poly_gcd(x_pow_minus_one(7, f2->zero()), f);
  CHECK(g == f);
  auto [q, r] = x_pow_minus_one(7, f2->zero()).divrem(f);
  CHECK(r.is_zero());

  CHECK(poly_gcd(f, make("1", f2)).degree() == 0);

  auto f5 = make_field(5);
  auto h = make("4,1,1,4,2,1", f5);  // the paper's quintic divisor
  CHECK(poly_gcd(x_pow_minus_one(11, f5->zero()), h) == h);
}

TEST_CASE("term_count examples") {
  auto f5 = make_field(5);
  CHECK(term_count(make("2,2,4,3,0,0,1", f5)) == 5);
  CHECK(term_count(Poly<FF>(f5->zero())) == 0);
  auto f2 = make_field(2);
  CHECK(term_count(make("1,1,0,1", f2)) == 3);
}

TEST_CASE("cyclotomic_cosets examples") {
  auto c1 = cyclotomic_cosets(7, 2);
  CHECK(c1.cosets == std::vector<std::vector<uint32_t>>{{0}, {1, 2, 4}, {3, 5, 6}});
  auto c2 = cyclotomic_cosets(3, 2);
  CHECK(c2.cosets == std::vector<std::vector<uint32_t>>{{0}, {1, 2}});
  auto c3 = cyclotomic_cosets(11, 5);
  CHECK(c3.cosets ==
        std::vector<std::vector<uint32_t>>{{0}, {1, 3, 4, 5, 9}, {2, 6, 7, 8, 10}});
  CHECK_THROWS_AS(cyclotomic_cosets(7, 14), std::invalid_argument);
  // every nontrivial coset has size ord_p(q)
  for (auto [p, q] : {std::pair<uint32_t, uint64_t>{13, 3}, {17, 2}, {19, 7}}) {
    auto part = cyclotomic_cosets(p, q);
    uint64_t m = multiplicative_order_mod(q, p);
    for (size_t i = 1; i < part.cosets.size(); ++i)
      CHECK(part.cosets[i].size() == m);
  }
}

TEST_CASE("factor_cyclic examples") {
  auto f2 = make_field(2);
  auto fs = factor_cyclic(7, f2);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == make("1,1", f2));
  CHECK(fs[1] == make("1,1,0,1", f2));  // X^3 + X + 1
  CHECK(fs[2] == make("1,0,1,1", f2));  // X^3 + X^2 + 1
  Poly<FF> prod = Poly<FF>::x_power(0, f2->zero());
  for (const auto& f : fs) prod = prod * f;
  CHECK(prod == x_pow_minus_one(7, f2->zero()));

  // GF(4) contains the cube roots of unity: three linear factors
  auto f4 = make_field(2, 2);
  auto fs4 = factor_cyclic(3, f4);
  REQUIRE(fs4.size() == 3);
  for (const auto& f : fs4) CHECK(f.degree() == 1);

  auto f5 = make_field(5);
  auto fs11 = factor_cyclic(11, f5);
  REQUIRE(fs11.size() == 3);
  CHECK(fs11[0] == make("4,1", f5));
  CHECK(fs11[1].degree() == 5);
  CHECK(fs11[2].degree() == 5);
  CHECK(fs11[1] == make("4,1,1,4,2,1", f5));  // the paper's h

  CHECK_THROWS_AS(factor_cyclic(5, f5), std::invalid_argument);
}

TEST_CASE("factor degrees equal coset sizes and factors are irreducible") {
  for (auto [p, pq, k] : {std::tuple<uint32_t, uint64_t, uint32_t>{13, 3, 1},
                          {7, 3, 1},
                          {5, 2, 2},
                          {11, 3, 1}}) {
    auto field = make_field(pq, k);
    auto fs = factor_cyclic(p, field);
    auto cosets = cyclotomic_cosets(p, uint64_t(field->order()));
    REQUIRE(fs.size() == cosets.cosets.size());
    std::vector<size_t> degs, sizes;
    for (const auto& f : fs) degs.push_back(size_t(f.degree()));
    for (const auto& c : cosets.cosets) sizes.push_back(c.size());
    std::sort(degs.begin(), degs.end());
    std::sort(sizes.begin(), sizes.end());
    CHECK(degs == sizes);
    // no roots in any proper subextension: it suffices that each factor has
    // no root among field elements when its degree exceeds 1
    for (const auto& f : fs) {
      if (f.degree() < 2) continue;
      for (uint64_t i = 0; i < uint64_t(field->order()); ++i)
        CHECK(!f.evaluate(field->from_index(i)).is_zero());
    }
  }
}

TEST_CASE("enumerate_divisors bitmask order") {
  auto f2 = make_field(2);
  auto fs = factor_cyclic(7, f2);
  auto divs = all_divisors(fs);
  CHECK(divs.size() == 8);
  CHECK(divs[0].degree() == 0);
  CHECK(divs.back() == x_pow_minus_one(7, f2->zero()));
  // divisor (X+1)(X^3+X+1) = X^4+X^3+X^2+1: direct multiplication oracle
  CHECK(divs[3] == make("1,1", f2) * make("1,1,0,1", f2));
  CHECK(divs[3] == make("1,0,1,1,1", f2));

  auto f5 = make_field(5);
  CHECK(all_divisors(factor_cyclic(11, f5)).size() == 8);
}

TEST_CASE("multiplicity_check examples") {
  // f = (X-1)^2 (X+2) = X^3 - 3X + 2 over Q: divisible by (X-1)^2, t = 3 > 2
  Poly<Rational> f({Rational(2), Rational(-3), Rational(0), Rational(1)},
                   Rational());
  auto rep = multiplicity_check(f, 2, 0);
  CHECK(rep.divisible);
  CHECK(rep.multiplicity == 2);
  CHECK(rep.t == 3);

  Poly<Rational> xm1({Rational(-1), Rational(1)}, Rational());
  auto rep2 = multiplicity_check(xm1, 1, 0);
  CHECK(rep2.divisible);
  CHECK(rep2.t == 2);

  // X^4+X^3+X^2+X+1 = (X-1)^4 over GF(5)
  auto f5 = make_field(5);
  auto phi5 = make("1,1,1,1,1", f5);
  auto rep3 = multiplicity_check(phi5, 4, 5);
  CHECK(rep3.divisible);
  CHECK(rep3.multiplicity == 4);
  CHECK(rep3.t == 5);

  CHECK_THROWS_AS(multiplicity_check(Poly<FF>(f5->zero()), 1, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_check(make("1,1,1,1,1,1", f5), 1, 5),
                  std::invalid_argument);  // degree 5 = p
}

TEST_CASE("term count exceeds root-1 multiplicity (exhaustive small p)") {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto f = make_field(p);
    uint64_t total = 1;
    for (uint32_t i = 0; i < p; ++i) total *= p;
    for (uint64_t idx = 1; idx < total; ++idx) {
      std::vector<FF> c;
      uint64_t rest = idx;
      for (uint32_t i = 0; i < p; ++i) {
        c.push_back(f->scalar(rest % p));
        rest /= p;
      }
      Poly<FF> poly(std::move(c), f->zero());
      CHECK_NOTHROW(multiplicity_check(poly, 0, p));  // throws when t <= mu
    }
  }
}

TEST_CASE("term count exceeds multiplicity (random p <= 13)") {
  auto g = rng(3003);
  for (uint32_t p : {7u, 11u, 13u}) {
    auto f = make_field(p);
    for (int it = 0; it < 300; ++it) {
      std::vector<FF> c;
      for (uint32_t i = 0; i < p; ++i) c.push_back(f->scalar(draw(g, p)));
      Poly<FF> poly(std::move(c), f->zero());
      if (poly.is_zero()) continue;
      CHECK_NOTHROW(multiplicity_check(poly, 0, p));
    }
  }
}

TEST_CASE("divrem invariant on random polynomials") {
  auto g = rng(3004);
  for (auto spec : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto fld = make_field(spec.first, spec.second);
    const uint64_t q = uint64_t(fld->order());
    for (int it = 0; it < 100; ++it) {
      std::vector<FF> fc, gc;
      for (int i = 0; i < 8; ++i) fc.push_back(fld->from_index(draw(g, q)));
      for (int i = 0; i < 4; ++i) gc.push_back(fld->from_index(draw(g, q)));
      Poly<FF> f(std::move(fc), fld->zero());
      Poly<FF> d(std::move(gc), fld->zero());
      if (d.is_zero()) continue;
      auto [quot, rem] = f.divrem(d);
      CHECK(quot * d + rem == f);
      CHECK(rem.degree() < d.degree());
      if (!f.is_zero()) {
        auto gc2 = poly_gcd(f, d);
        CHECK(f.divrem(gc2).second.is_zero());
        CHECK(d.divrem(gc2).second.is_zero());
        CHECK(gc2.leading().is_one());
      }
    }
  }
}
