#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pdmc/matrix.hpp"

namespace pdmc {

// An [n, k] linear code held as a generator / parity-check pair with
// G . H^T = 0. d_known is a verified true minimum distance; d_designed a
// construction guarantee (BCH bound, MDS, ...).
struct LinearCode {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  MatrixFq G;
  MatrixFq H;
  std::optional<std::size_t> d_known;
  std::optional<std::size_t> d_designed;

  Vec encode(const Vec& m) const;
  Vec syndrome(const Vec& y) const;  // H . y^T
  bool contains(const Vec& y) const;
  std::size_t distance_bound() const;  // d_known, else d_designed
};

// Derives H from the null space; computes d exhaustively when requested
// (allowed only while q^k <= 10^7).
LinearCode code_from_generator(const MatrixFq& g, bool compute_d = false);

LinearCode repetition_code(FieldPtr field, std::size_t n);

// Reed-Solomon [n, k, n-k+1] over GF(q), n <= q, evaluation points 0..n-1.
// Row 0 evaluates the constant polynomial, so the all-one word is a codeword.
LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t k);

// Minimum weight of a nonzero codeword by full enumeration of the row space.
std::size_t min_distance_exhaustive(const MatrixFq& g);

// Number of error patterns of weight <= t over GF(q)^n, saturating at cap.
std::uint64_t pattern_count(std::size_t n, std::size_t t, std::uint32_t q,
                            std::uint64_t cap);

struct Decoding {
  Vec codeword;
  Vec error;
};

// Bounded-distance decoder backed by a syndrome -> coset-leader table over
// all error patterns of weight <= t. Table built once, lookups pure.
class BoundedDecoder {
 public:
  static constexpr std::uint64_t kMaxTable = 10'000'000;

  BoundedDecoder(const LinearCode& code, std::size_t t);

  // nullopt when no codeword lies within distance t of y.
  std::optional<Decoding> decode(const Vec& y) const;

  std::size_t radius() const { return t_; }

 private:
  struct VecHash {
    std::size_t operator()(const Vec& v) const {
      std::size_t h = 1469598103934665603ULL;
      for (Label x : v) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return h;
    }
  };
  const LinearCode* code_;
  std::size_t t_;
  std::unordered_map<Vec, Vec, VecHash> table_;
};

// Odometer over [q]^len; returns false after the last tuple.
bool next_tuple(Vec& t, std::uint32_t q);
// Lexicographic k-combinations of [0, n); returns false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

}  // namespace pdmc
