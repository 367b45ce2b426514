#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdmc/gf.hpp"

namespace pdmc {

using Vec = std::vector<Label>;

// Dense row-major matrix over GF(q). Immutable in spirit: the mutating
// setters exist for construction; all algorithms return new matrices.
class MatrixFq {
 public:
  MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols);
  static MatrixFq from_rows(FieldPtr field,
                            const std::vector<Vec>& rows);
  static MatrixFq identity(FieldPtr field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Label at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Label v) { data_[r * cols_ + c] = v; }
  Vec row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  MatrixFq mul(const MatrixFq& o) const;
  MatrixFq transpose() const;
  MatrixFq vstack(const MatrixFq& below) const;
  MatrixFq select_cols(const std::vector<std::size_t>& cols) const;

  bool operator==(const MatrixFq& o) const {
    return field_->same_field(*o.field_) && rows_ == o.rows_ &&
           cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Label> data_;
};

// Vector helpers over a field.
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Label s, const Vec& v);
Vec mul_vec_mat(const Vec& x, const MatrixFq& m);  // x . M
std::size_t hamming_weight(const Vec& v);

struct RreResult {
  MatrixFq matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // original column indices
};

// Reduced row echelon form. Pivot columns are scanned left-to-right in
// restrict_cols order (all columns when absent); row operations always apply
// to the full matrix. Deterministic: topmost nonzero row wins each pivot.
RreResult rre(const MatrixFq& m,
              const std::optional<std::vector<std::size_t>>& restrict_cols =
                  std::nullopt);

struct EchelonResult {
  MatrixFq matrix;  // ops . input
  MatrixFq ops;     // invertible row-operation matrix
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Row echelon form (leading ones, zeros below pivots, no reduction above),
// eliminating along target_cols only. The staircase transform used by the
// block-masking encoders.
EchelonResult row_echelon(const MatrixFq& m,
                          const std::vector<std::size_t>& target_cols);

std::size_t rank_of(const MatrixFq& m);

// Unique x with x . A = c for full-row-rank A. Throws RankDeficientError /
// NotInRowSpaceError.
Vec solve_full_rank(const MatrixFq& a, const Vec& c);

// Basis (as rows) of { x : M . x^T = 0 }.
MatrixFq null_space(const MatrixFq& m);

// Staircase block structure of a masking matrix restricted to the stuck
// columns phi: row i owns the run of phi-columns from its pivot up to the
// next pivot, every owned entry is nonzero, rows below are zero there, and
// no block exceeds max_len.
struct BlockPartition {
  struct Block {
    std::size_t row;
    std::vector<std::size_t> cols;  // original column indices
  };
  std::vector<std::size_t> pivot_cols;
  std::vector<Block> blocks;
  std::size_t max_block_len = 0;
  MatrixFq staircase;  // row_echelon(H, phi).matrix
  MatrixFq ops;        // staircase = ops . H
  std::vector<std::size_t> phi;
};

// Validates and returns the partition; throws BlockTooLongError or
// NotBlockStaircaseError when H's phi-restriction does not have the required
// shape. Columns are never permuted; original indices are tracked instead.
BlockPartition block_partition(const MatrixFq& h,
                               const std::vector<std::size_t>& phi,
                               std::size_t max_len);

}  // namespace pdmc
