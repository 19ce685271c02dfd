#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permod/exact.hpp"
#include "test_util.hpp"

using namespace permod;
using namespace permod::testutil;

TEST_CASE("rational wrapper") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a * b) == Rational(1, 18));
  CHECK((-a) == Rational(-1, 3));
  CHECK(a.inverse() == Rational(3));
  CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
  CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
}

TEST_CASE("cyclo_from_power") {
  auto q5 = CycloField::make(5);
  CHECK(cyclo_from_power(q5, 0).is_one());
  // zeta^4 = -1 - z - z^2 - z^3 under Phi_5
  Cyclotomic z4 = cyclo_from_power(q5, 4);
  for (int i = 0; i < 4; ++i) CHECK(z4.rep()[i] == Rational(-1));
  auto q3 = CycloField::make(3);
  CHECK(cyclo_from_power(q3, 7) == cyclo_from_power(q3, 1));
  // zeta^p = 1 and 1 + zeta + ... + zeta^(p-1) = 0
  Cyclotomic sum = cyclo_scalar(q5, Rational(0));
  for (int e = 0; e < 5; ++e) sum = sum + cyclo_from_power(q5, e);
  CHECK(sum.is_zero());
  Cyclotomic z = cyclo_from_power(q5, 1);
  Cyclotomic pw = z;
  for (int e = 1; e < 5; ++e) pw = pw * z;
  CHECK(pw.is_one());
}

TEST_CASE("cyclo inverse") {
  auto q7 = CycloField::make(7);
  CHECK(cyclo_from_power(q7, 1).inverse() == cyclo_from_power(q7, 6));
  // p = 3: (1 + zeta)^(-1) = -zeta since (1+z)(-z) = -z - z^2 = 1
  auto q3 = CycloField::make(3);
  Cyclotomic one_plus_z = cyclo_from_power(q3, 0) + cyclo_from_power(q3, 1);
  CHECK(one_plus_z.inverse() == -cyclo_from_power(q3, 1));
  CHECK_THROWS_AS(cyclo_scalar(q3, Rational(0)).inverse(), std::domain_error);
}

TEST_CASE("ring axioms and inverses on random values") {
  auto g = rng(2001);
  for (uint32_t p : {3u, 5u, 7u}) {
    auto f = CycloField::make(p);
    auto random_elem = [&] {
      std::vector<Rational> rep(f->degree());
      for (auto& c : rep)
        c = Rational(long(draw(g, 7)) - 3, long(draw(g, 3)) + 1);
      return Cyclotomic(f.get(), rep);
    };
    for (int it = 0; it < 50; ++it) {
      Cyclotomic x = random_elem(), y = random_elem(), z = random_elem();
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * (y * z) == (x * y) * z);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("norm of a nonzero element is a nonzero rational") {
  auto g = rng(2002);
  auto f = CycloField::make(7);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> rep(f->degree());
    for (auto& c : rep) c = Rational(long(draw(g, 5)) - 2);
    Cyclotomic x(f.get(), rep);
    if (x.is_zero()) continue;
    Cyclotomic norm = x;
    for (uint32_t a = 2; a < 7; ++a) norm = norm * x.conjugate(a);
    CHECK(!norm.is_zero());
    for (uint32_t i = 1; i < f->degree(); ++i) CHECK(norm.rep()[i].is_zero());
  }
}

TEST_CASE("powers multiply by exponent addition") {
  auto f = CycloField::make(11);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      CHECK(cyclo_from_power(f, i) * cyclo_from_power(f, j) ==
            cyclo_from_power(f, i + j));
}

TEST_CASE("composite conductors") {
  // Phi_4 = X^2 + 1, Phi_6 = X^2 - X + 1, Phi_8 = X^4 + 1
  CHECK(CycloField::make(4)->degree() == 2);
  CHECK(CycloField::make(6)->degree() == 2);
  CHECK(CycloField::make(8)->degree() == 4);
  auto q6 = CycloField::make(6);
  Cyclotomic z = cyclo_from_power(q6, 1);
  Cyclotomic pw = z;
  for (int e = 1; e < 6; ++e) pw = pw * z;
  CHECK(pw.is_one());
  CHECK(!cyclo_from_power(q6, 3).is_one());
  CHECK((cyclo_from_power(q6, 3) + cyclo_from_power(q6, 0)).is_zero());  // z^3 = -1
}
