#include <doctest.h>

#include <set>

#include "pdmc/gf.hpp"

using namespace pdmc;

TEST_CASE("field construction") {
  auto f7 = make_field(7);
  CHECK(f7->order() == 7);
  CHECK(f7->prime_field());

  auto f343 = make_field(7, 3);
  CHECK(f343->order() == 343);
  CHECK(f343->modulus().size() == 4);

  // GF(4) with x^2 + x + 1: irreducibility oracle checks no root in {0, 1}.
  const std::vector<Label> mod{1, 1, 1};
  for (Label x : {Label(0), Label(1)}) {
    const int val = (x * x + x + 1) % 2;
    CHECK(val != 0);
  }
  auto f4 = make_field(2, 2, mod);
  CHECK(f4->order() == 4);

  CHECK_THROWS_AS(make_field(6), NotPrimeError);
  CHECK_THROWS_AS(make_field(2, 2, std::vector<Label>{1, 0, 1}),
                  ReducibleModulusError);  // x^2 + 1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(make_field(2, 17), BadParamsError);  // order above 2^16
  CHECK_THROWS_AS(make_field(7, 1, std::vector<Label>{1, 1}), BadParamsError);
}

TEST_CASE("deterministic modulus selection") {
  CHECK(make_field(2, 2)->modulus() == std::vector<Label>{1, 1, 1});
  // Lexicographically (low-to-high) first irreducible cubic over GF(2).
  CHECK(make_field(2, 3)->modulus() == std::vector<Label>{1, 0, 1, 1});
  CHECK(make_field(2, 3)->spec_string() == "2^3/1,0,1,1");
  CHECK(make_field(7)->spec_string() == "7");
}

TEST_CASE("arithmetic examples") {
  auto f7 = make_field(7);
  CHECK(f7->mul(3, 5) == 1);
  CHECK(f7->add(6, 1) == 0);  // the wraparound that creates the zero hazard
  CHECK(f7->sub(0, 1) == 6);

  auto f4 = make_field(2, 2, std::vector<Label>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);  // x * x = x + 1
  CHECK(f4->add(3, 1) == 2);
}

TEST_CASE("inverse examples and oracles") {
  auto f7 = make_field(7);
  // Exhaustive oracle: the unique z with 3z = 1 mod 7.
  Label expect = 0;
  for (Label z = 1; z < 7; ++z)
    if (3 * z % 7 == 1) expect = z;
  CHECK(expect == 5);
  CHECK(f7->inv(3) == 5);

  CHECK(make_field(5)->inv(1) == 1);

  // GF(4): full multiplication table oracle.
  auto f4 = make_field(2, 2, std::vector<Label>{1, 1, 1});
  Label inv2 = 0;
  for (Label z = 1; z < 4; ++z)
    if (f4->mul(2, z) == 1) inv2 = z;
  CHECK(inv2 == 3);
  CHECK(f4->inv(2) == 3);

  CHECK_THROWS_AS(f7->inv(0), ZeroInverseError);
}

TEST_CASE("successor on labels") {
  CHECK(successor(2, 5) == 3);
  CHECK(successor(4, 5) == 0);  // wraparound pair {q-1, 0}
  CHECK(successor(0, 3) == 1);

  // Cyclic permutation of order q.
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    Label v = 0;
    std::set<Label> seen;
    for (std::uint32_t i = 0; i < q; ++i) {
      seen.insert(v);
      v = successor(v, q);
    }
    CHECK(v == 0);
    CHECK(seen.size() == q);
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
           {5, 2}, {7, 2}}) {
    auto f = make_field(p, m);
    const std::uint32_t q = f->order();
    // Labeling bijection.
    for (std::uint32_t i = 0; i < q; ++i)
      CHECK(f->from_coeffs(f->coeffs(static_cast<Label>(i))) == i);
    // Additive and multiplicative inverses.
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f->add(static_cast<Label>(a), f->neg(static_cast<Label>(a))) == 0);
      if (a != 0) {
        CHECK(f->mul(static_cast<Label>(a), f->inv(static_cast<Label>(a))) == 1);
        std::size_t inverses = 0;
        for (std::uint32_t b = 0; b < q; ++b)
          if (f->mul(static_cast<Label>(a), static_cast<Label>(b)) == 1)
            ++inverses;
        CHECK(inverses == 1);
      }
    }
    // Associativity, commutativity, distributivity.
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        const Label la = static_cast<Label>(a), lb = static_cast<Label>(b);
        CHECK(f->add(la, lb) == f->add(lb, la));
        CHECK(f->mul(la, lb) == f->mul(lb, la));
        for (std::uint32_t c = 0; c < q; ++c) {
          const Label lc = static_cast<Label>(c);
          REQUIRE(f->add(f->add(la, lb), lc) == f->add(la, f->add(lb, lc)));
          REQUIRE(f->mul(f->mul(la, lb), lc) == f->mul(la, f->mul(lb, lc)));
          REQUIRE(f->mul(la, f->add(lb, lc)) ==
                  f->add(f->mul(la, lb), f->mul(la, lc)));
        }
      }
  }
}

TEST_CASE("field elements detect mismatched fields") {
  auto f5 = make_field(5);
  auto f7 = make_field(7);
  FieldElement a(f5, 3), b(f5, 4), c(f7, 3);
  CHECK((a + b).label() == 2);
  CHECK((a * b).label() == 2);
  CHECK((-a).label() == 2);
  CHECK(a.inverse().label() == 2);
  CHECK_THROWS_AS(a + c, FieldMismatchError);
  CHECK_THROWS_AS(a * c, FieldMismatchError);
  CHECK(a != c);
}
