#include "pdmc/linear_code.hpp"

#include <algorithm>

namespace pdmc {

Vec LinearCode::encode(const Vec& m) const {
  if (m.size() != k) throw LengthMismatchError("message length != k");
  return mul_vec_mat(m, G);
}

Vec LinearCode::syndrome(const Vec& y) const {
  if (y.size() != n) throw LengthMismatchError("word length != n");
  const Field& f = *field;
  Vec s(H.rows(), 0);
  for (std::size_t i = 0; i < H.rows(); ++i) {
    Label acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      acc = f.add(acc, f.mul(H.at(i, j), y[j]));
    }
    s[i] = acc;
  }
  return s;
}

bool LinearCode::contains(const Vec& y) const {
  const Vec s = syndrome(y);
  return std::all_of(s.begin(), s.end(), [](Label x) { return x == 0; });
}

std::size_t LinearCode::distance_bound() const {
  if (d_known) return *d_known;
  if (d_designed) return *d_designed;
  throw BadParamsError("code has no known or designed distance");
}

bool next_tuple(Vec& t, std::uint32_t q) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] + 1u < q) {
      ++t[i];
      std::fill(t.begin() + i + 1, t.end(), 0);
      return true;
    }
  }
  return false;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + 1 <= n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t min_distance_exhaustive(const MatrixFq& g) {
  const std::uint32_t q = g.field()->order();
  const std::size_t k = g.rows();
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  if (total > 1e7)
    throw TooLargeForExhaustiveError("q^k exceeds the enumeration budget");

  const Field& f = *g.field();
  std::size_t best = g.cols() + 1;
  Vec m(k, 0);
  Vec word(g.cols(), 0);
  // Enumerate messages; update the running codeword only on the digits that
  // changed, which keeps the scan close to O(q^k . n).
  while (true) {
    Vec prev = m;
    if (!next_tuple(m, q)) break;
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] == prev[i]) continue;
      const Label delta = f.sub(m[i], prev[i]);
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Label v = g.at(i, j);
        if (v != 0) word[j] = f.add(word[j], f.mul(delta, v));
      }
    }
    best = std::min(best, hamming_weight(word));
  }
  if (best > g.cols()) throw BadParamsError("zero code has no minimum distance");
  return best;
}

LinearCode code_from_generator(const MatrixFq& g, bool compute_d) {
  const std::size_t k = g.rows();
  if (rank_of(g) != k) throw RankDeficientError("generator matrix is rank deficient");
  LinearCode c{g.field(), g.cols(), k, g, null_space(g), std::nullopt,
               std::nullopt};
  if (compute_d) c.d_known = min_distance_exhaustive(g);
  return c;
}

LinearCode repetition_code(FieldPtr field, std::size_t n) {
  MatrixFq g(field, 1, n);
  for (std::size_t j = 0; j < n; ++j) g.set(0, j, 1);
  LinearCode c = code_from_generator(g, false);
  c.d_known = n;
  return c;
}

LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t k) {
  if (n > field->order()) throw BadParamsError("RS length exceeds field order");
  if (k < 1 || k > n) throw BadParamsError("RS dimension out of range");
  const Field& f = *field;
  MatrixFq g(field, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    Label point = static_cast<Label>(j);
    Label power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g.set(i, j, power);
      power = f.mul(power, point);
    }
  }
  LinearCode c = code_from_generator(g, false);
  c.d_known = n - k + 1;  // MDS
  return c;
}

std::uint64_t pattern_count(std::size_t n, std::size_t t, std::uint32_t q,
                            std::uint64_t cap) {
  long double total = 0;
  for (std::size_t w = 0; w <= t && w <= n; ++w) {
    long double term = 1;
    for (std::size_t i = 0; i < w; ++i)
      term = term * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    for (std::size_t i = 0; i < w; ++i) term *= (q - 1);
    total += term;
    if (total > static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::uint64_t>(total);
}

BoundedDecoder::BoundedDecoder(const LinearCode& code, std::size_t t)
    : code_(&code), t_(t) {
  const std::uint32_t q = code.field->order();
  if (pattern_count(code.n, t, q, kMaxTable) >= kMaxTable)
    throw CapacityExceededError("syndrome table would exceed the size budget");
  const Field& f = *code.field;
  // Weight-ascending enumeration; first writer per syndrome wins, so every
  // stored leader has minimal weight.
  Vec zero_err(code.n, 0);
  table_.emplace(code.syndrome(zero_err), zero_err);
  for (std::size_t w = 1; w <= t && w <= code.n; ++w) {
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    do {
      Vec values(w, 0);  // offsets into nonzero labels
      while (true) {
        Vec e(code.n, 0);
        for (std::size_t i = 0; i < w; ++i)
          e[pos[i]] = static_cast<Label>(values[i] + 1);
        Vec s(code.H.rows(), 0);
        for (std::size_t i = 0; i < code.H.rows(); ++i) {
          Label acc = 0;
          for (std::size_t j = 0; j < w; ++j)
            acc = f.add(acc, f.mul(code.H.at(i, pos[j]), e[pos[j]]));
          s[i] = acc;
        }
        table_.emplace(std::move(s), std::move(e));
        if (!next_tuple(values, q - 1)) break;
      }
    } while (next_combination(pos, code.n));
  }
}

std::optional<Decoding> BoundedDecoder::decode(const Vec& y) const {
  const auto it = table_.find(code_->syndrome(y));
  if (it == table_.end()) return std::nullopt;
  return Decoding{vec_sub(*code_->field, y, it->second), it->second};
}

}  // namespace pdmc
