#include "pdmc/comparison.hpp"

#include <cstdio>

namespace pdmc {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

ComparisonColumn build_column(const ComparisonSpec& spec, std::size_t delta,
                              std::size_t k_ref) {
  ComparisonColumn col;
  col.n = spec.n;
  col.designed_d = delta;
  const BchOffsetSearch search = bch_best_offset(spec.p, spec.m, spec.n, delta);
  col.best_k = search.best_k;
  col.b = search.best_b;
  col.achieved = search.best_k == k_ref;
  col.k = search.best_k;
  col.rate = Rational(col.k, col.n);
  return col;
}

}  // namespace

ComparisonReport run_rate_comparison(const ComparisonSpec& spec) {
  ComparisonReport rep;
  rep.direct = build_column(spec, spec.direct_delta, spec.direct_k_ref);
  rep.masked = build_column(spec, spec.masked_delta, spec.masked_k_ref);

  rep.masking_cost = Rational(1, spec.n);
  rep.adjusted_rate = rep.masked.rate - rep.masking_cost;
  rep.rates_equal = rep.adjusted_rate == rep.direct.rate;
  rep.direct_capability = (spec.direct_delta - 1) / 2;
  rep.masked_u = spec.masked_u;
  rep.masked_t = (spec.masked_delta - 1) / 2;

  rep.discrepancy = !rep.direct.achieved || !rep.masked.achieved;
  if (!rep.direct.achieved)
    rep.notes.push_back("direct column: search reached k=" +
                        std::to_string(rep.direct.best_k) + " instead of " +
                        std::to_string(spec.direct_k_ref) + " at delta " +
                        std::to_string(spec.direct_delta));
  if (!rep.masked.achieved)
    rep.notes.push_back("masked column: search reached k=" +
                        std::to_string(rep.masked.best_k) + " instead of " +
                        std::to_string(spec.masked_k_ref) + " at delta " +
                        std::to_string(spec.masked_delta));

  rep.notes.push_back("masking cost is exactly 1/" + std::to_string(spec.n) +
                      " = " + fmt(rep.masking_cost.to_double()) +
                      "; the reference figures 0.00879 and 0.00877 are two "
                      "inconsistent roundings of this value");
  rep.notes.push_back("masked rate is exactly " + rep.masked.rate.to_string() +
                      " = " + fmt(rep.masked.rate.to_double()) +
                      "; the reference figure 0.07889 rounds it");
  if (rep.direct.achieved && rep.masked.achieved) {
    rep.notes.push_back(
        "adjusted rate equals the direct rate exactly: " +
        rep.adjusted_rate.to_string() + "; capability " +
        std::to_string(rep.direct_capability) + " = " +
        std::to_string(rep.masked_u) + " + " + std::to_string(rep.masked_t));
  }
  return rep;
}

}  // namespace pdmc
