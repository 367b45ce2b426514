#include <doctest.h>

#include "pdmc/linear_code.hpp"
#include "pdmc/rng.hpp"

using namespace pdmc;

TEST_CASE("code_from_generator examples") {
  auto f3 = make_field(3);
  auto rep = repetition_code(f3, 5);
  CHECK(rep.n == 5);
  CHECK(rep.k == 1);
  CHECK(*rep.d_known == 5);
  CHECK(min_distance_exhaustive(rep.G) == 5);

  auto f2 = make_field(2);
  auto id = code_from_generator(MatrixFq::identity(f2, 4), true);
  CHECK(*id.d_known == 1);

  auto c = code_from_generator(
      MatrixFq::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}), true);
  // Oracle: the four codewords are 000, 101, 011, 110.
  CHECK(*c.d_known == 2);

  CHECK_THROWS_AS(
      code_from_generator(MatrixFq::from_rows(f2, {{1, 1}, {1, 1}}), false),
      RankDeficientError);
}

TEST_CASE("generator and parity check agree") {
  Rng rng(5);
  for (auto q : {2u, 3u, 5u}) {
    auto f = make_field(q);
    for (int rep = 0; rep < 10; ++rep) {
      MatrixFq g(f, 2, 5);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          g.set(i, j, static_cast<Label>(bounded(rng, q)));
      if (rank_of(g) != 2) continue;
      auto code = code_from_generator(g, false);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
          const Vec word = code.encode({static_cast<Label>(a), static_cast<Label>(b)});
          CHECK(code.contains(word));
        }
    }
  }
}

TEST_CASE("exhaustive distance guard") {
  auto f2 = make_field(2);
  CHECK_THROWS_AS(min_distance_exhaustive(MatrixFq::identity(f2, 24)),
                  TooLargeForExhaustiveError);
}

TEST_CASE("encode examples") {
  auto f3 = make_field(3);
  auto rep = repetition_code(f3, 5);
  CHECK(rep.encode({2}) == Vec{2, 2, 2, 2, 2});
  CHECK(rep.encode({0}) == Vec{0, 0, 0, 0, 0});

  auto f5 = make_field(5);
  auto c = code_from_generator(MatrixFq::from_rows(f5, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(c.encode({2, 3}) == Vec{2, 3, 0});  // 2 + 3 = 5 = 0 mod 5
  CHECK_THROWS_AS(c.encode({1}), LengthMismatchError);
}

TEST_CASE("bounded decoding examples") {
  auto f3 = make_field(3);
  auto rep5 = repetition_code(f3, 5);
  BoundedDecoder dec(rep5, 2);

  auto r = dec.decode({1, 0, 1, 0, 0});
  REQUIRE(r.has_value());
  CHECK(r->codeword == Vec{0, 0, 0, 0, 0});
  CHECK(r->error == Vec{1, 0, 1, 0, 0});

  auto clean = dec.decode({2, 2, 2, 2, 2});
  REQUIRE(clean.has_value());
  CHECK(hamming_weight(clean->error) == 0);

  auto rep3 = repetition_code(f3, 3);
  // Oracle: (0,1,2) has distance >= 2 from all three codewords.
  for (Label v : {Label(0), Label(1), Label(2)}) {
    const Vec cw{v, v, v};
    std::size_t dist = 0;
    const Vec y{0, 1, 2};
    for (int i = 0; i < 3; ++i) dist += (y[i] != cw[i]);
    CHECK(dist >= 2);
  }
  BoundedDecoder dec3(rep3, 1);
  CHECK_FALSE(dec3.decode({0, 1, 2}).has_value());
}

TEST_CASE("bounded decoder corrects everything inside the radius") {
  auto f5 = make_field(5);
  auto rs = rs_code(f5, 5, 3);  // [5, 3, 3]
  CHECK(*rs.d_known == 3);
  CHECK(min_distance_exhaustive(rs.G) == 3);
  CHECK(rs.contains(Vec(5, 1)));  // all-one word

  BoundedDecoder dec(rs, 1);
  Vec m(3, 0);
  do {
    const Vec c = rs.encode(m);
    // Weight <= 1 errors.
    auto check = [&](const Vec& e) {
      Vec y = vec_add(*f5, c, e);
      auto r = dec.decode(y);
      REQUIRE(r.has_value());
      CHECK(r->codeword == c);
      CHECK(r->error == e);
    };
    check(Vec(5, 0));
    for (std::size_t pos = 0; pos < 5; ++pos)
      for (Label v = 1; v < 5; ++v) {
        Vec e(5, 0);
        e[pos] = v;
        check(e);
      }
  } while (next_tuple(m, 5));
}

TEST_CASE("capacity guard on table construction") {
  auto f7 = make_field(7);
  auto rep = repetition_code(f7, 12);
  CHECK_THROWS_AS(BoundedDecoder(rep, 12), CapacityExceededError);
}

TEST_CASE("combination and tuple iterators") {
  std::vector<std::size_t> c{0, 1};
  std::size_t count = 1;
  while (next_combination(c, 4)) ++count;
  CHECK(count == 6);  // C(4,2)

  Vec t(3, 0);
  count = 1;
  while (next_tuple(t, 3)) ++count;
  CHECK(count == 27);
}
