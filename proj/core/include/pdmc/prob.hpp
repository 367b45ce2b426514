#pragma once

#include <cstdint>

#include "pdmc/rational.hpp"

namespace pdmc {

// Probability that a uniform size-u subset and a uniform size-t subset of
// [0, n) intersect: 1 - prod_{j<t} (n-u-j)/(n-j). Equals 1 exactly when
// u + t > n.
Rational p_overlap(std::uint64_t n, std::uint64_t u, std::uint64_t t);

// Probability that the subsets intersect and a uniform pair
// (c, e) in [q] x [q] at an overlapped position sums to 0 mod q:
// (1/q) * p_overlap.
Rational p_zero_overlap(std::uint64_t n, std::uint64_t u, std::uint64_t t,
                        std::uint64_t q);

// Masking probability formula for u stuck values drawn uniformly from [q]:
// (q / C(q,2)) * (1 - sum_{i=0}^{q-2} (-1)^i C(q,i) (q-i)^u / q^u),
// exactly as printed. See mask_consecutive_enumerated for the event
// probability it approximates; the two are reported side by side.
Rational p_mask_consecutive(std::uint64_t q, std::uint64_t u);

// Exact probability, by full enumeration of [q]^u, that some consecutive
// label pair (v, v+1 mod q) is entirely absent from the drawn values.
// Guarded by the 10^7 enumeration budget.
Rational mask_consecutive_enumerated(std::uint64_t q, std::uint64_t u);

enum class McKind { overlap, zero_overlap, mask_consecutive };

// (c, e) model for the zero_overlap estimator: both uniform over [q] (the
// formula's model) or c uniform with e in {0, 1}.
enum class ZeroModel { uniform_q, mag1 };

struct McConfig {
  McKind kind = McKind::overlap;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  ZeroModel model = ZeroModel::uniform_q;
};

struct McParams {
  std::uint64_t n = 0;
  std::uint64_t u = 0;
  std::uint64_t t = 0;
  std::uint64_t q = 0;
};

struct McResult {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Seeded Bernoulli estimator for the three events. Each trial runs on its
// own derived stream, so results are independent of execution order.
McResult mc_estimate(const McConfig& cfg, const McParams& params);

}  // namespace pdmc
