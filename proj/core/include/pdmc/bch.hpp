#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdmc/linear_code.hpp"

namespace pdmc {

// BCH code with symbols in GF(p) and roots in GF(p^m); needs n | p^m - 1.
// The generator polynomial has the delta-1 consecutive roots
// alpha^b .. alpha^{b+delta-2}, giving designed distance delta.
struct BchSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::size_t n = 0;
  std::size_t b = 0;
  std::size_t delta = 0;
  FieldPtr symbol_field;   // GF(p)
  FieldPtr locator_field;  // GF(p^m)
  Label alpha = 0;         // element of multiplicative order n
  std::vector<std::vector<std::size_t>> cosets;  // cyclotomic cosets mod n, base p
  Vec g;                   // generator polynomial, low-to-high, over GF(p)
};

struct BchCode {
  BchSpec spec;
  LinearCode code;
  std::size_t radius() const { return (spec.delta - 1) / 2; }
};

// Cyclotomic cosets of [0, n) under multiplication by `base` mod n, each
// sorted with the smallest member (the leader) first.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n,
                                                        std::uint64_t base);

BchCode bch_build(std::uint32_t p, std::uint32_t m, std::size_t n,
                  std::size_t b, std::size_t delta);

struct BchOffsetSearch {
  std::size_t best_b = 0;
  std::size_t best_k = 0;
};

// Scans b in [0, n) for the largest dimension achieving designed distance
// delta; ties break to the smallest b.
BchOffsetSearch bch_best_offset(std::uint32_t p, std::uint32_t m,
                                std::size_t n, std::size_t delta);

// Algebraic decoder: syndromes, Berlekamp-Massey, Chien-style root scan, and
// the error-value formula. Detected failure (wrong locator degree, unmapped
// roots, values outside GF(p), residual syndrome) reports nullopt rather
// than miscorrecting.
std::optional<Decoding> bm_decode(const BchCode& bch, const Vec& y);

// Smallest primitive element (by label) of the field.
Label primitive_element(const Field& f);

}  // namespace pdmc
