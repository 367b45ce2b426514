#include <doctest.h>

#include <sstream>

#include "pdmc/io.hpp"
#include "pdmc/matrix.hpp"
#include "pdmc/rng.hpp"

using namespace pdmc;

namespace {

MatrixFq random_matrix(FieldPtr f, std::size_t rows, std::size_t cols, Rng& rng) {
  MatrixFq m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, static_cast<Label>(bounded(rng, f->order())));
  return m;
}

}  // namespace

TEST_CASE("rre examples") {
  auto f5 = make_field(5);
  auto m = MatrixFq::from_rows(f5, {{1, 2}, {2, 4}});
  auto r = rre(m);
  CHECK(r.matrix == MatrixFq::from_rows(f5, {{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});

  auto id = MatrixFq::identity(f5, 3);
  CHECK(rre(id).matrix == id);
  CHECK(rre(id).rank == 3);

  MatrixFq zero(f5, 2, 3);
  CHECK(rre(zero).matrix == zero);
  CHECK(rre(zero).rank == 0);
  CHECK(rre(zero).pivots.empty());
}

TEST_CASE("rre idempotence and row-space preservation") {
  Rng rng(1234);
  for (auto q : {2u, 3u, 5u}) {
    auto f = make_field(q);
    for (int rep = 0; rep < 20; ++rep) {
      auto m = random_matrix(f, 1 + bounded(rng, 5), 1 + bounded(rng, 6), rng);
      auto r = rre(m);
      CHECK(rre(r.matrix).matrix == r.matrix);
      // Same row space: stacking changes no rank.
      CHECK(rank_of(m.vstack(r.matrix)) == r.rank);
      CHECK(rank_of(m) == r.rank);
    }
  }
}

TEST_CASE("restricted rre applies row operations to the full matrix") {
  auto f5 = make_field(5);
  auto m = MatrixFq::from_rows(f5, {{2, 1, 3}, {4, 0, 1}});
  auto r = rre(m, std::vector<std::size_t>{0});
  // Only column 0 is an elimination target, but all columns transform.
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.matrix.at(0, 0) == 1);
  CHECK(r.matrix.at(1, 0) == 0);
  CHECK(r.matrix.at(0, 2) == 4);  // 3 * inv(2) = 3 * 3 = 9 = 4
}

TEST_CASE("solve_full_rank examples") {
  auto f3 = make_field(3);
  auto id2 = MatrixFq::identity(f3, 2);
  CHECK(solve_full_rank(id2, {2, 1}) == Vec{2, 1});

  auto f5 = make_field(5);
  auto a = MatrixFq::from_rows(f5, {{1, 1, 1}, {0, 1, 2}});
  CHECK(solve_full_rank(a, {1, 2, 3}) == Vec{1, 1});

  auto deficient = MatrixFq::from_rows(f5, {{1, 2, 3}, {2, 4, 1}, {3, 1, 4}});
  CHECK(rank_of(deficient) < 3);
  CHECK_THROWS_AS(solve_full_rank(deficient, {0, 0, 0}), RankDeficientError);

  auto wide = MatrixFq::from_rows(f5, {{1, 0, 0}});
  CHECK_THROWS_AS(solve_full_rank(wide, {0, 1, 0}), NotInRowSpaceError);
}

TEST_CASE("solve_full_rank round trip on random systems") {
  Rng rng(99);
  auto f7 = make_field(7);
  int done = 0;
  while (done < 25) {
    auto a = random_matrix(f7, 3, 5, rng);
    if (rank_of(a) != 3) continue;
    Vec x{static_cast<Label>(bounded(rng, 7)), static_cast<Label>(bounded(rng, 7)),
          static_cast<Label>(bounded(rng, 7))};
    CHECK(solve_full_rank(a, mul_vec_mat(x, a)) == x);
    ++done;
  }
}

TEST_CASE("null_space gives a parity check") {
  Rng rng(7);
  auto f3 = make_field(3);
  for (int rep = 0; rep < 20; ++rep) {
    auto m = random_matrix(f3, 2, 5, rng);
    auto ns = null_space(m);
    CHECK(ns.rows() == 5 - rank_of(m));
    for (std::size_t i = 0; i < ns.rows(); ++i) {
      const Vec prod = mul_vec_mat(ns.row(i), m.transpose());
      CHECK(hamming_weight(prod) == 0);
    }
  }
}

TEST_CASE("block partition accepts the two-block example") {
  auto f5 = make_field(5);
  auto h = MatrixFq::from_rows(f5, {{1, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 1}});
  auto part = block_partition(h, {0, 1, 2, 3}, 2);
  REQUIRE(part.blocks.size() == 2);
  CHECK(part.blocks[0].row == 0);
  CHECK(part.blocks[0].cols == std::vector<std::size_t>{0, 1});
  CHECK(part.blocks[1].row == 1);
  CHECK(part.blocks[1].cols == std::vector<std::size_t>{2, 3});
  CHECK(part.max_block_len == 2);
  CHECK(part.pivot_cols == std::vector<std::size_t>{0, 2});
  // Already staircase: no row operations applied.
  CHECK(part.staircase == h);
  CHECK(part.ops == MatrixFq::identity(f5, 2));
}

TEST_CASE("block partition singleton and failure cases") {
  auto f5 = make_field(5);
  auto id = MatrixFq::identity(f5, 4);
  auto part = block_partition(id, {0, 1, 2, 3}, 1);
  CHECK(part.blocks.size() == 4);
  CHECK(part.max_block_len == 1);

  auto ones = MatrixFq::from_rows(f5, {{1, 1, 1, 1}});
  CHECK_THROWS_AS(block_partition(ones, {0, 1, 2}, 2), BlockTooLongError);

  // Column 2 is zero in every row: no block can own it.
  auto gap = MatrixFq::from_rows(f5, {{1, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(block_partition(gap, {0, 1, 2, 3}, 3), NotBlockStaircaseError);
  // With a tighter limit the same matrix trips the length check first.
  CHECK_THROWS_AS(block_partition(gap, {0, 1, 2, 3}, 2), BlockTooLongError);

  // Empty phi partitions trivially.
  CHECK(block_partition(ones, {}, 2).blocks.empty());
}

TEST_CASE("block partition reorders rows when needed") {
  auto f5 = make_field(5);
  // Same rows as the two-block example, swapped.
  auto h = MatrixFq::from_rows(f5, {{0, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
  auto part = block_partition(h, {0, 1, 2, 3}, 2);
  CHECK(part.blocks.size() == 2);
  CHECK(part.staircase.row(0) == Vec{1, 1, 1, 1, 1, 1});
  // staircase = ops . h
  CHECK(part.ops.mul(h) == part.staircase);
}

TEST_CASE("matrix text format round trips") {
  auto f = make_field(2, 2, std::vector<Label>{1, 1, 1});
  auto m = MatrixFq::from_rows(f, {{0, 1, 2}, {3, 2, 1}});
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(read_matrix(ss) == m);

  std::stringstream bad("2 2 5\n1 7\n0 1\n");
  CHECK_THROWS_AS(read_matrix(bad), BadParamsError);
}
