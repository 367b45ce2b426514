#include <doctest.h>

#include "pdmc/bch.hpp"
#include "pdmc/rng.hpp"

using namespace pdmc;

TEST_CASE("cyclotomic cosets") {
  // Base 7 mod 114: 7^3 = 343 = 3*114 + 1, so cosets have size dividing 3.
  const auto cosets114 = cyclotomic_cosets(114, 7);
  bool found = false;
  for (const auto& c : cosets114)
    if (c.front() == 1) {
      CHECK(c == std::vector<std::size_t>{1, 7, 49});
      found = true;
    }
  CHECK(found);

  const auto cosets15 = cyclotomic_cosets(15, 2);
  std::vector<std::vector<std::size_t>> expect{
      {0}, {1, 2, 4, 8}, {3, 6, 9, 12}, {5, 10}, {7, 11, 13, 14}};
  CHECK(cosets15 == expect);
}

TEST_CASE("primitive element has full order") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 4}, {7, 1}, {7, 3}, {5, 2}}) {
    auto f = make_field(p, m);
    const Label g = primitive_element(*f);
    const std::uint32_t q = f->order();
    std::size_t order = 1;
    Label v = g;
    while (v != 1) {
      v = f->mul(v, g);
      ++order;
    }
    CHECK(order == q - 1);
  }
}

TEST_CASE("classical binary BCH [15,5,7]") {
  auto bch = bch_build(2, 4, 15, 1, 7);
  CHECK(bch.code.n == 15);
  CHECK(bch.code.k == 5);
  CHECK(*bch.code.d_designed == 7);
  // 2^5 codewords: the true distance equals the designed distance here.
  CHECK(min_distance_exhaustive(bch.code.G) == 7);
  // Roots alpha^1 .. alpha^6 all satisfy g.
  const Field& lf = *bch.spec.locator_field;
  for (std::size_t e = 1; e <= 6; ++e) {
    Label acc = 0;
    Label point = lf.pow(bch.spec.alpha, e);
    for (std::size_t i = bch.spec.g.size(); i-- > 0;)
      acc = lf.add(lf.mul(acc, point), bch.spec.g[i]);
    CHECK(acc == 0);
  }
}

TEST_CASE("BCH bound on small instances") {
  auto b1 = bch_build(2, 4, 15, 1, 5);
  CHECK(min_distance_exhaustive(b1.code.G) >= 5);
  auto b2 = bch_build(3, 2, 8, 1, 3);
  CHECK(min_distance_exhaustive(b2.code.G) >= 3);
  auto b3 = bch_build(7, 2, 12, 1, 5);
  CHECK(b3.code.k == 6);
  CHECK_THROWS_AS(bch_build(2, 3, 5, 1, 3), OrderMismatchError);
}

TEST_CASE("algebraic decoder corrects and reports cleanly") {
  auto bch = bch_build(2, 4, 15, 1, 7);
  Rng rng(2024);
  const Field& f = *bch.spec.symbol_field;

  // Zero errors: unchanged.
  const Vec c0 = bch.code.encode({1, 0, 1, 1, 0});
  auto clean = bm_decode(bch, c0);
  REQUIRE(clean.has_value());
  CHECK(clean->codeword == c0);
  CHECK(hamming_weight(clean->error) == 0);

  for (int rep = 0; rep < 200; ++rep) {
    Vec m(5);
    for (auto& v : m) v = static_cast<Label>(bounded(rng, 2));
    const Vec c = bch.code.encode(m);
    const std::size_t w = bounded(rng, 4);  // up to radius 3
    const auto pos = sample_subset(rng, 15, w);
    Vec y = c;
    for (auto pjo : pos) y[pjo] = f.add(y[pjo], 1);
    auto dec = bm_decode(bch, y);
    REQUIRE(dec.has_value());
    CHECK(dec->codeword == c);
  }
}

TEST_CASE("length-114 round trip at full radius") {
  auto bch = bch_build(7, 3, 114, 1, 79);
  CHECK(bch.code.k == 8);
  CHECK(bch.radius() == 39);
  Rng rng(31337);
  Vec m(8);
  for (auto& v : m) v = static_cast<Label>(bounded(rng, 7));
  const Vec c = bch.code.encode(m);
  const auto pos = sample_subset(rng, 114, 39);
  const Field& f = *bch.spec.symbol_field;
  Vec y = c;
  for (auto p : pos) y[p] = f.add(y[p], 1);  // 39 magnitude-1 errors
  auto dec = bm_decode(bch, y);
  REQUIRE(dec.has_value());
  CHECK(dec->codeword == c);
  for (auto p : pos) CHECK(dec->error[p] == 1);
}

TEST_CASE("offset search finds the reference dimensions") {
  const auto r79 = bch_best_offset(7, 3, 114, 79);
  CHECK(r79.best_k == 8);
  const auto r67 = bch_best_offset(7, 3, 114, 67);
  CHECK(r67.best_k == 9);
}
