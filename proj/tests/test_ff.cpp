#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permod/ff.hpp"
#include "test_util.hpp"

using namespace permod;
using namespace permod::testutil;

TEST_CASE("make_field basics") {
  auto f2 = make_field(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->p() == 2);

  auto f4 = make_field(2, 2);
  CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});  // X^2+X+1

  auto f5 = make_field(5, 1);
  CHECK(f5->order() == 5);

  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 2, std::vector<uint32_t>{1, 0, 1}),
                  std::invalid_argument);  // X^2+1 = (X+1)^2 over GF(2)
}

TEST_CASE("canonical enumeration is lexicographic on reps") {
  auto f9 = make_field(3, 2);
  CHECK(f9->from_index(0).rep() == std::vector<uint32_t>{0, 0});
  CHECK(f9->from_index(1).rep() == std::vector<uint32_t>{0, 1});
  CHECK(f9->from_index(3).rep() == std::vector<uint32_t>{1, 0});
  for (uint64_t i = 0; i + 1 < 9; ++i)
    CHECK(f9->from_index(i).rep_less(f9->from_index(i + 1)));
}

TEST_CASE("find_element_of_order examples") {
  auto f4 = make_field(2, 2);
  CHECK(find_element_of_order(*f4, 3).rep() == std::vector<uint32_t>{0, 1});

  auto f243 = make_field(3, 5);
  FF z = find_element_of_order(*f243, 11);
  CHECK(z.pow(11).is_one());
  CHECK(!z.is_one());
  // oracle: exponentiate every element, take the first of order exactly 11
  bool seen = false;
  for (uint64_t i = 1; i < 243; ++i) {
    FF x = f243->from_index(i);
    if (x.pow(11).is_one() && !x.is_one()) {
      CHECK(x == z);
      seen = true;
      break;
    }
  }
  CHECK(seen);

  auto f2 = make_field(2, 1);
  CHECK_THROWS_AS(find_element_of_order(*f2, 3), std::invalid_argument);
}

TEST_CASE("order witness has exact order") {
  for (auto [p, k, n] : {std::tuple<int, int, int>{2, 4, 5},
                         {3, 2, 8},
                         {5, 2, 24},
                         {7, 1, 6}}) {
    auto f = make_field(p, k);
    FF x = find_element_of_order(*f, n);
    CHECK(x.pow(n).is_one());
    for (int l = 2; l <= n; ++l)
      if (n % l == 0 && is_prime_u64(l)) CHECK(!x.pow(n / l).is_one());
  }
}

TEST_CASE("field axioms on random triples") {
  auto g = rng(1001);
  for (auto spec : {std::pair<int, int>{2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
    auto f = make_field(spec.first, spec.second);
    const uint64_t q = uint64_t(f->order());
    for (int it = 0; it < 200; ++it) {
      FF x = f->from_index(draw(g, q));
      FF y = f->from_index(draw(g, q));
      FF z = f->from_index(draw(g, q));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
    CHECK_THROWS_AS(f->zero().inverse(), std::domain_error);
  }
}

TEST_CASE("Frobenius is a field automorphism fixing exactly GF(p)") {
  auto f = make_field(3, 3);
  auto g = rng(1002);
  const uint64_t q = uint64_t(f->order());
  for (int it = 0; it < 100; ++it) {
    FF x = f->from_index(draw(g, q));
    FF y = f->from_index(draw(g, q));
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
    CHECK((x * y).pow(3) == x.pow(3) * y.pow(3));
  }
  size_t fixed = 0;
  for (uint64_t i = 0; i < q; ++i) {
    FF x = f->from_index(i);
    if (x.pow(3) == x) ++fixed;
  }
  CHECK(fixed == 3);
  // and x^(p^k) = x for everyone
  for (uint64_t i = 0; i < q; ++i) {
    FF x = f->from_index(i);
    CHECK(x.pow(q) == x);
  }
}

TEST_CASE("embedding carries arithmetic into the subfield copy") {
  auto f4 = make_field(2, 2);
  auto f16 = make_field(2, 4);
  Embedding emb(f4, f16);
  for (uint64_t i = 0; i < 4; ++i) {
    for (uint64_t j = 0; j < 4; ++j) {
      FF a = f4->from_index(i), b = f4->from_index(j);
      CHECK(emb.up(a + b) == emb.up(a) + emb.up(b));
      CHECK(emb.up(a * b) == emb.up(a) * emb.up(b));
    }
  }
  CHECK(emb.up(f4->one()).is_one());
  // down-mapping inverts and rejects outsiders
  for (uint64_t i = 0; i < 4; ++i) {
    auto back = emb.down(emb.up(f4->from_index(i)));
    REQUIRE(back.has_value());
    CHECK(*back == f4->from_index(i));
  }
  size_t in_image = 0;
  for (uint64_t i = 0; i < 16; ++i)
    if (emb.down(f16->from_index(i))) ++in_image;
  CHECK(in_image == 4);
}
