#include "pdmc/matrix.hpp"

#include <algorithm>

namespace pdmc {

MatrixFq::MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFq MatrixFq::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixFq m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw BadParamsError("ragged rows in matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixFq MatrixFq::identity(FieldPtr field, std::size_t n) {
  MatrixFq m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::mul(const MatrixFq& o) const {
  if (!field_->same_field(*o.field_))
    throw FieldMismatchError("matrix product across fields");
  if (cols_ != o.rows_) throw LengthMismatchError("matrix product shape");
  const Field& f = *field_;
  MatrixFq r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Label a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Label b = o.at(k, j);
        if (b == 0) continue;
        r.set(i, j, f.add(r.at(i, j), f.mul(a, b)));
      }
    }
  return r;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

MatrixFq MatrixFq::vstack(const MatrixFq& below) const {
  if (!field_->same_field(*below.field_))
    throw FieldMismatchError("stacking matrices across fields");
  if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
    throw LengthMismatchError("stacking matrices of different widths");
  const std::size_t cols = rows_ != 0 ? cols_ : below.cols_;
  MatrixFq r(field_, rows_ + below.rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

MatrixFq MatrixFq::select_cols(const std::vector<std::size_t>& cols) const {
  MatrixFq r(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.set(i, j, at(i, cols[j]));
  return r;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatchError("vector add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LengthMismatchError("vector sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, Label s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(s, v[i]);
  return r;
}

Vec mul_vec_mat(const Vec& x, const MatrixFq& m) {
  if (x.size() != m.rows()) throw LengthMismatchError("vector-matrix product");
  const Field& f = *m.field();
  Vec r(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Label b = m.at(i, j);
      if (b == 0) continue;
      r[j] = f.add(r[j], f.mul(x[i], b));
    }
  }
  return r;
}

std::size_t hamming_weight(const Vec& v) {
  std::size_t w = 0;
  for (Label x : v) w += (x != 0);
  return w;
}

namespace {

void scale_row(MatrixFq& m, std::size_t r, Label s) {
  const Field& f = *m.field();
  for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, f.mul(s, m.at(r, j)));
}

// row r2 -= s * row r1
void axpy_row(MatrixFq& m, std::size_t r2, Label s, std::size_t r1) {
  const Field& f = *m.field();
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.set(r2, j, f.sub(m.at(r2, j), f.mul(s, m.at(r1, j))));
}

void swap_rows(MatrixFq& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Label t = m.at(a, j);
    m.set(a, j, m.at(b, j));
    m.set(b, j, t);
  }
}

}  // namespace

RreResult rre(const MatrixFq& m,
              const std::optional<std::vector<std::size_t>>& restrict_cols) {
  std::vector<std::size_t> targets;
  if (restrict_cols.has_value()) {
    targets = *restrict_cols;
    for (std::size_t c : targets)
      if (c >= m.cols()) throw BadParamsError("restricted column out of range");
  } else {
    targets.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) targets[c] = c;
  }
  const Field& f = *m.field();
  RreResult res{m, 0, {}};
  MatrixFq& r = res.matrix;
  std::size_t next_row = 0;
  for (std::size_t c : targets) {
    if (next_row >= r.rows()) break;
    std::size_t pivot = next_row;
    while (pivot < r.rows() && r.at(pivot, c) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    swap_rows(r, next_row, pivot);
    scale_row(r, next_row, f.inv(r.at(next_row, c)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == next_row) continue;
      const Label v = r.at(i, c);
      if (v != 0) axpy_row(r, i, v, next_row);
    }
    res.pivots.push_back(c);
    ++next_row;
  }
  res.rank = res.pivots.size();
  return res;
}

EchelonResult row_echelon(const MatrixFq& m,
                          const std::vector<std::size_t>& target_cols) {
  for (std::size_t c : target_cols)
    if (c >= m.cols()) throw BadParamsError("target column out of range");
  const Field& f = *m.field();
  EchelonResult res{m, MatrixFq::identity(m.field(), m.rows()), 0, {}};
  MatrixFq& r = res.matrix;
  MatrixFq& u = res.ops;
  std::size_t next_row = 0;
  for (std::size_t c : target_cols) {
    if (next_row >= r.rows()) break;
    std::size_t pivot = next_row;
    while (pivot < r.rows() && r.at(pivot, c) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    swap_rows(r, next_row, pivot);
    swap_rows(u, next_row, pivot);
    const Label s = f.inv(r.at(next_row, c));
    scale_row(r, next_row, s);
    scale_row(u, next_row, s);
    for (std::size_t i = next_row + 1; i < r.rows(); ++i) {
      const Label v = r.at(i, c);
      if (v != 0) {
        axpy_row(r, i, v, next_row);
        axpy_row(u, i, v, next_row);
      }
    }
    res.pivots.push_back(c);
    ++next_row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank_of(const MatrixFq& m) { return rre(m).rank; }

Vec solve_full_rank(const MatrixFq& a, const Vec& c) {
  if (c.size() != a.cols()) throw LengthMismatchError("solve rhs length");
  const std::size_t k = a.rows();
  // x . A = c  <=>  A^T . x^T = c^T; eliminate on [A^T | c^T].
  MatrixFq aug(a.field(), a.cols(), k + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.set(i, j, a.at(j, i));
    aug.set(i, k, c[i]);
  }
  std::vector<std::size_t> targets(k);
  for (std::size_t j = 0; j < k; ++j) targets[j] = j;
  RreResult r = rre(aug, targets);
  if (r.rank < k) throw RankDeficientError("matrix does not have full row rank");
  // Any leftover nonzero entry in the rhs column marks an inconsistency.
  for (std::size_t i = k; i < aug.rows(); ++i)
    if (r.matrix.at(i, k) != 0)
      throw NotInRowSpaceError("right-hand side not in the row space");
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = r.matrix.at(i, k);
  return x;
}

MatrixFq null_space(const MatrixFq& m) {
  RreResult r = rre(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  const Field& f = *m.field();
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = f.neg(r.matrix.at(i, c));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return MatrixFq(m.field(), 0, m.cols());
  return MatrixFq::from_rows(m.field(), basis);
}

BlockPartition block_partition(const MatrixFq& h,
                               const std::vector<std::size_t>& phi,
                               std::size_t max_len) {
  if (h.rows() < 1) throw BadParamsError("masking matrix needs at least one row");
  std::vector<std::size_t> cols = phi;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (std::size_t c : cols)
    if (c >= h.cols()) throw BadParamsError("phi column out of range");

  EchelonResult e = row_echelon(h, cols);
  BlockPartition part{{}, {}, 0, std::move(e.matrix), std::move(e.ops), cols};
  part.pivot_cols = e.pivots;
  if (cols.empty()) return part;
  if (part.pivot_cols.empty() || part.pivot_cols.front() != cols.front())
    throw NotBlockStaircaseError("leading stuck columns are zero");

  std::size_t pi = 0;  // index into pivot_cols
  for (std::size_t i = 0; i < part.pivot_cols.size(); ++i) {
    BlockPartition::Block blk;
    blk.row = i;
    const std::size_t next_pivot =
        i + 1 < part.pivot_cols.size() ? part.pivot_cols[i + 1] : h.cols();
    while (pi < cols.size() && cols[pi] < next_pivot) {
      blk.cols.push_back(cols[pi]);
      ++pi;
    }
    if (blk.cols.size() > max_len)
      throw BlockTooLongError(i, blk.cols.size());
    for (std::size_t c : blk.cols)
      if (part.staircase.at(i, c) == 0)
        throw NotBlockStaircaseError("zero entry inside block of row " +
                                     std::to_string(i));
    part.max_block_len = std::max(part.max_block_len, blk.cols.size());
    part.blocks.push_back(std::move(blk));
  }
  return part;
}

}  // namespace pdmc
