#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdmc/bch.hpp"
#include "pdmc/rational.hpp"

namespace pdmc {

// Rate comparison between masking u cells purely through decoding capacity
// (one wide-distance code) and masking them with one dedicated symbol on a
// narrower code of the same length. Defaults reproduce the embedded
// length-114 base-7 reference figures.
struct ComparisonColumn {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t designed_d = 0;
  std::size_t b = 0;       // root offset found by search
  std::size_t best_k = 0;  // best dimension the search reached
  bool achieved = false;   // best_k equals the reference dimension
  Rational rate;
};

struct ComparisonReport {
  ComparisonColumn direct;  // wide code, artificial errors absorb u
  ComparisonColumn masked;  // narrow code plus one masking symbol
  Rational masking_cost;    // 1/n
  Rational adjusted_rate;   // masked rate - masking cost
  bool rates_equal = false; // adjusted_rate == direct rate, exactly
  std::size_t direct_capability = 0;  // floor((d-1)/2) = u + t
  std::size_t masked_u = 0;
  std::size_t masked_t = 0;
  std::vector<std::string> notes;
  bool discrepancy = false;  // reference dimensions not reached
};

struct ComparisonSpec {
  std::uint32_t p = 7;
  std::uint32_t m = 3;
  std::size_t n = 114;
  std::size_t direct_delta = 79;
  std::size_t masked_delta = 67;
  std::size_t direct_k_ref = 8;
  std::size_t masked_k_ref = 9;
  std::size_t masked_u = 6;
};

ComparisonReport run_rate_comparison(const ComparisonSpec& spec = {});

}  // namespace pdmc
