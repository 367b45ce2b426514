#include <doctest.h>

#include <cstdint>

#include "pdmc/errors.hpp"
#include "pdmc/prob.hpp"

using namespace pdmc;

namespace {

// Independent oracle: exhaustive enumeration of all (phi, psi) subset pairs
// by bitmask, counting intersecting ones.
Rational enum_overlap(unsigned n, unsigned u, unsigned t) {
  std::uint64_t total = 0, hits = 0;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (static_cast<unsigned>(__builtin_popcount(a)) != u) continue;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (static_cast<unsigned>(__builtin_popcount(b)) != t) continue;
      ++total;
      if (a & b) ++hits;
    }
  }
  return Rational(hits, total);
}

// Oracle for the zero-occurrence event: additionally scans all (c, e) pairs.
Rational enum_zero_overlap(unsigned n, unsigned u, unsigned t, unsigned q) {
  std::uint64_t zero_pairs = 0;
  for (unsigned c = 0; c < q; ++c)
    for (unsigned e = 0; e < q; ++e)
      if ((c + e) % q == 0) ++zero_pairs;
  const Rational ov = enum_overlap(n, u, t);
  return ov * Rational(zero_pairs, static_cast<std::uint64_t>(q) * q);
}

}  // namespace

TEST_CASE("overlap probability examples") {
  CHECK(p_overlap(8, 2, 0) == Rational(0));
  CHECK(p_overlap(8, 0, 3) == Rational(0));
  CHECK(p_overlap(4, 3, 3) == Rational(1));  // u + t > n
  CHECK(p_overlap(8, 2, 2) == Rational(13, 28));
  CHECK(p_overlap(8, 2, 2) == enum_overlap(8, 2, 2));
  CHECK_THROWS_AS(p_overlap(4, 5, 0), BadParamsError);
}

TEST_CASE("zero-occurrence probability examples") {
  CHECK(p_zero_overlap(4, 3, 3, 3) == Rational(1, 3));
  CHECK(p_zero_overlap(5, 4, 2, 4) == Rational(1, 4));
  CHECK(p_zero_overlap(8, 2, 2, 3) == Rational(13, 84));
  CHECK_THROWS_AS(p_zero_overlap(8, 2, 2, 1), BadParamsError);
}

TEST_CASE("formulas equal enumeration for all small parameters") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned u = 0; u <= n; ++u)
      for (unsigned t = 0; t <= n; ++t) {
        REQUIRE(p_overlap(n, u, t) == enum_overlap(n, u, t));
        for (unsigned q : {3u, 4u})
          REQUIRE(p_zero_overlap(n, u, t, q) == enum_zero_overlap(n, u, t, q));
      }
}

TEST_CASE("overlap probability is monotone in u and t") {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned u = 0; u < n; ++u)
      for (unsigned t = 0; t < n; ++t) {
        CHECK(p_overlap(n, u, t) <= p_overlap(n, u + 1, t));
        CHECK(p_overlap(n, u, t) <= p_overlap(n, u, t + 1));
      }
}

TEST_CASE("consecutive-pair masking formula") {
  // Worked value: 384/2187 (reduced 128/729), rounding to 0.175...
  const Rational v = p_mask_consecutive(3, 7);
  CHECK(v == Rational(384, 2187));
  CHECK(v.to_double() == doctest::Approx(0.1756).epsilon(1e-3));
  // q = 3 leading factor q / C(q,2) = 1: the inner sum alone.
  const Rational inner = Rational(1) - Rational(2187 - 384, 2187);
  CHECK(v == inner);
  CHECK(p_mask_consecutive(5, 3) == Rational(13, 25));
  CHECK_THROWS_AS(p_mask_consecutive(2, 3), BadParamsError);
  CHECK_THROWS_AS(p_mask_consecutive(3, 0), BadParamsError);
}

TEST_CASE("consecutive-pair enumeration reports the event probability") {
  // q=3: only constant vectors miss two values, and any two absent values of
  // Z_3 are consecutive: 3 / 3^7.
  CHECK(mask_consecutive_enumerated(3, 7) == Rational(3, 2187));

  // q=5, u=3 by image-size classification:
  //   |image| = 1: 5 vectors, 4 absent values always hold a consecutive pair;
  //   |image| = 2: 10 pairs x 6 vectors, 3 absent values always do;
  //   |image| = 3: 6 vectors per image, counts only when the 2-value
  //                complement is one of the 5 consecutive pairs: 5 x 6.
  // Total (5 + 60 + 30) / 125.
  CHECK(mask_consecutive_enumerated(5, 3) == Rational(95, 125));

  // The printed formula and the event probability are different quantities;
  // both get reported, neither silently replaces the other.
  CHECK(p_mask_consecutive(5, 3) != mask_consecutive_enumerated(5, 3));

  CHECK_THROWS_AS(mask_consecutive_enumerated(3, 40), TooLargeForExhaustiveError);
}

TEST_CASE("monte carlo estimates bracket the exact values") {
  McParams params{8, 2, 2, 3};

  McConfig cfg;
  cfg.kind = McKind::overlap;
  cfg.trials = 100000;
  cfg.seed = 11;
  auto r = mc_estimate(cfg, params);
  const double exact = Rational(13, 28).to_double();
  CHECK(std::abs(r.estimate - exact) <= 3 * r.stderr_);

  cfg.kind = McKind::zero_overlap;
  cfg.seed = 12;
  r = mc_estimate(cfg, McParams{4, 3, 3, 3});
  CHECK(std::abs(r.estimate - 1.0 / 3.0) <= 3 * r.stderr_);

  // mag1 variant: the overlapped position takes the full error value. With
  // c uniform over [q] the prediction is 1/q either way, so the formula is
  // robust to the model choice.
  cfg.model = ZeroModel::mag1;
  cfg.seed = 13;
  r = mc_estimate(cfg, McParams{4, 3, 3, 3});
  CHECK(std::abs(r.estimate - 1.0 / 3.0) <= 3 * r.stderr_);

  // The estimator samples the consecutive-absent-pair event, so it brackets
  // the enumerated probability.
  cfg = McConfig{McKind::mask_consecutive, 200000, 17};
  r = mc_estimate(cfg, McParams{0, 7, 0, 3});
  const double enumerated = mask_consecutive_enumerated(3, 7).to_double();
  CHECK(std::abs(r.estimate - enumerated) <= 3 * r.stderr_);

  cfg.seed = 19;
  cfg.trials = 100000;
  r = mc_estimate(cfg, McParams{0, 3, 0, 5});
  CHECK(std::abs(r.estimate - 0.76) <= 3 * r.stderr_);
}

TEST_CASE("estimates converge across seeds") {
  const double exact = Rational(13, 28).to_double();
  unsigned inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    McConfig cfg{McKind::overlap, 10000, seed};
    const auto r = mc_estimate(cfg, McParams{8, 2, 2, 3});
    if (std::abs(r.estimate - exact) <= 3 * r.stderr_) ++inside;
  }
  CHECK(inside >= 99);
}

TEST_CASE("estimator determinism and validation") {
  McConfig cfg{McKind::overlap, 5000, 123};
  const auto a = mc_estimate(cfg, McParams{8, 2, 2, 3});
  const auto b = mc_estimate(cfg, McParams{8, 2, 2, 3});
  CHECK(a.successes == b.successes);
  CHECK(a.estimate == b.estimate);

  CHECK_THROWS_AS(mc_estimate(McConfig{McKind::overlap, 0, 0}, McParams{8, 2, 2, 3}),
                  BadParamsError);
  CHECK_THROWS_AS(mc_estimate(McConfig{McKind::overlap, 10, 0}, McParams{4, 5, 0, 3}),
                  BadParamsError);
}
