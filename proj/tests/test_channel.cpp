#include <doctest.h>

#include "pdmc/channel.hpp"
#include "pdmc/schemes.hpp"

using namespace pdmc;

TEST_CASE("memory construction") {
  Rng rng(1);
  auto healthy = mem_new(6, 5, 0, rng);
  CHECK(healthy.phi.empty());

  auto fixed = mem_new(4, 5, std::vector<std::size_t>{1, 2});
  CHECK(fixed.phi == std::vector<std::size_t>{1, 2});

  // Same seed, same stuck set.
  Rng r1(42), r2(42);
  CHECK(mem_new(8, 5, 3, r1).phi == mem_new(8, 5, 3, r2).phi);

  CHECK_THROWS_AS(mem_new(4, 5, 5, rng), BadParamsError);
  CHECK_THROWS_AS(mem_new(4, 5, std::vector<std::size_t>{4}), BadParamsError);
}

TEST_CASE("write enforces the stuck-at-1 floor") {
  auto mem = mem_new(4, 5, std::vector<std::size_t>{1, 2});
  CHECK_NOTHROW(write(mem, {0, 2, 3, 0}));
  CHECK(mem.contents == std::vector<Label>{0, 2, 3, 0});

  auto mem2 = mem_new(4, 5, std::vector<std::size_t>{1, 2});
  try {
    write(mem2, {1, 0, 3, 0});
    FAIL("expected rejection");
  } catch (const ConstraintViolationError& e) {
    CHECK(e.positions == std::vector<std::size_t>{1});
  }
  CHECK_FALSE(mem2.contents.has_value());

  // Masked words always store.
  auto f5 = make_field(5);
  auto s = Construction1Scheme::plain(f5, 4, 0);
  auto word = s.encode({4, 0, 3}, {1, 2});
  auto mem3 = mem_new(4, 5, std::vector<std::size_t>{1, 2});
  CHECK_NOTHROW(write(mem3, word.c));

  // No stuck cells: anything goes.
  auto mem4 = mem_new(3, 5, std::vector<std::size_t>{});
  CHECK_NOTHROW(write(mem4, {0, 0, 0}));
}

TEST_CASE("unchecked write stores and reports violations") {
  auto mem = mem_new(4, 5, std::vector<std::size_t>{0, 3});
  const auto bad = write_unchecked(mem, {0, 1, 2, 0});
  CHECK(bad == std::vector<std::size_t>{0, 3});
  CHECK(mem.contents.has_value());
}

TEST_CASE("corrupt injects level-shift errors") {
  Rng rng(9);
  auto mem = mem_new(5, 5, std::vector<std::size_t>{2});
  write(mem, {0, 1, 2, 3, 4});

  auto quiet = corrupt(mem, 0, rng);
  CHECK(quiet.y == *mem.contents);
  CHECK(quiet.event.psi.empty());
  CHECK(quiet.overlap.empty());
  CHECK(quiet.hazards.empty());

  // Level q-1 at a stuck position plus magnitude 1 reads 0: hazard flagged.
  auto mem2 = mem_new(3, 5, std::vector<std::size_t>{1});
  write(mem2, {0, 4, 0});
  Rng rng2(3);
  auto res = corrupt(mem2, 3, rng2);  // all positions err
  CHECK(res.y[1] == 0);
  CHECK(res.overlap == std::vector<std::size_t>{1});
  CHECK(res.hazards == std::vector<std::size_t>{1});

  // Magnitude 2 errors wrap the same way.
  auto mem3 = mem_new(3, 5, std::vector<std::size_t>{});
  write(mem3, {4, 0, 3});
  Rng rng3(4);
  auto res3 = corrupt(mem3, 3, rng3, 2);
  CHECK(res3.y == std::vector<Label>{1, 2, 0});

  auto unwritten = mem_new(3, 5, std::vector<std::size_t>{});
  Rng rng4(5);
  CHECK_THROWS_AS(corrupt(unwritten, 1, rng4), NotWrittenError);
}

TEST_CASE("corrupt is deterministic given the seed") {
  auto mem = mem_new(10, 7, std::vector<std::size_t>{1, 5});
  write(mem, {1, 2, 3, 4, 5, 6, 1, 2, 3, 4});
  Rng a(1000), b(1000);
  const auto ra = corrupt(mem, 4, a);
  const auto rb = corrupt(mem, 4, b);
  CHECK(ra.y == rb.y);
  CHECK(ra.event.psi == rb.event.psi);
}

TEST_CASE("masked words never read zero at stuck positions") {
  auto f7 = make_field(7);
  auto bch = bch_build(7, 2, 12, 1, 3);
  auto s = Construction1Scheme::from_bch(bch);
  Rng rng(616);
  for (int rep = 0; rep < 10000; ++rep) {
    auto mem = mem_new(12, 7, 3, rng);
    Vec m(8);
    for (auto& v : m) v = static_cast<Label>(bounded(rng, 7));
    const auto word = s.encode(m, mem.phi);
    write(mem, word.c);
    const auto res = corrupt(mem, 2, rng);
    REQUIRE(res.hazards.empty());
  }
}
