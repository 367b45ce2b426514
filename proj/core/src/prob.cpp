#include "pdmc/prob.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdmc/errors.hpp"
#include "pdmc/rng.hpp"

namespace pdmc {

Rational p_overlap(std::uint64_t n, std::uint64_t u, std::uint64_t t) {
  if (u > n || t > n) throw BadParamsError("need u <= n and t <= n");
  // The product hits a zero numerator exactly when u + t > n, which makes
  // the overlap certain.
  Rational prod(1);
  for (std::uint64_t j = 0; j < t; ++j)
    prod = prod * Rational(n - u >= j ? n - u - j : 0, n - j);
  return Rational(1) - prod;
}

Rational p_zero_overlap(std::uint64_t n, std::uint64_t u, std::uint64_t t,
                        std::uint64_t q) {
  if (q < 2) throw BadParamsError("need q >= 2");
  return p_overlap(n, u, t) / Rational(q);
}

Rational p_mask_consecutive(std::uint64_t q, std::uint64_t u) {
  if (q < 3) throw BadParamsError("need q >= 3");
  if (u < 1) throw BadParamsError("need u >= 1");
  // Alternating sum S = sum_{i=0}^{q-2} (-1)^i C(q,i) (q-i)^u.
  Rational sum;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    Rational term(BigInt::binomial(q, i) * BigInt::pow(BigInt(q - i), u),
                  BigInt(1), i % 2 == 1);
    sum = sum + term;
  }
  const Rational inner = Rational(1) - sum / Rational(BigInt::pow(BigInt(q), u), BigInt(1));
  const Rational pair_factor = Rational(q) / Rational(BigInt::binomial(q, 2), BigInt(1));
  return pair_factor * inner;
}

Rational mask_consecutive_enumerated(std::uint64_t q, std::uint64_t u) {
  if (q < 3 || u < 1) throw BadParamsError("need q >= 3 and u >= 1");
  double total_d = std::pow(static_cast<double>(q), static_cast<double>(u));
  if (total_d > 1e7)
    throw TooLargeForExhaustiveError("q^u exceeds the enumeration budget");
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> w(u, 0);
  bool more = true;
  while (more) {
    ++total;
    std::vector<bool> present(q, false);
    for (std::uint64_t v : w) present[v] = true;
    for (std::uint64_t v = 0; v < q; ++v) {
      if (!present[v] && !present[(v + 1) % q]) {
        ++hits;
        break;
      }
    }
    more = false;
    for (std::size_t i = u; i-- > 0;) {
      if (w[i] + 1 < q) {
        ++w[i];
        std::fill(w.begin() + i + 1, w.end(), 0);
        more = true;
        break;
      }
    }
  }
  return Rational(hits, total);
}

namespace {

bool subsets_intersect(const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b) {
  // Both sorted.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

McResult mc_estimate(const McConfig& cfg, const McParams& p) {
  if (cfg.trials < 1) throw BadParamsError("need at least one trial");
  switch (cfg.kind) {
    case McKind::overlap:
      if (p.u > p.n || p.t > p.n) throw BadParamsError("need u, t <= n");
      break;
    case McKind::zero_overlap:
      if (p.u > p.n || p.t > p.n) throw BadParamsError("need u, t <= n");
      if (p.q < 2) throw BadParamsError("need q >= 2");
      break;
    case McKind::mask_consecutive:
      if (p.q < 3 || p.u < 1) throw BadParamsError("need q >= 3 and u >= 1");
      break;
  }

  std::uint64_t successes = 0;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(derive_seed(cfg.seed, trial));
    bool hit = false;
    switch (cfg.kind) {
      case McKind::overlap: {
        const auto phi = sample_subset(rng, p.n, p.u);
        const auto psi = sample_subset(rng, p.n, p.t);
        hit = subsets_intersect(phi, psi);
        break;
      }
      case McKind::zero_overlap: {
        const auto phi = sample_subset(rng, p.n, p.u);
        const auto psi = sample_subset(rng, p.n, p.t);
        if (subsets_intersect(phi, psi)) {
          const std::uint64_t c = bounded(rng, p.q);
          // mag1: the overlapped position always takes the full error value,
          // matching the channel. With c uniform both models predict 1/q.
          const std::uint64_t e =
              cfg.model == ZeroModel::uniform_q ? bounded(rng, p.q) : 1;
          hit = (c + e) % p.q == 0;
        }
        break;
      }
      case McKind::mask_consecutive: {
        std::vector<bool> present(p.q, false);
        for (std::uint64_t i = 0; i < p.u; ++i)
          present[bounded(rng, p.q)] = true;
        for (std::uint64_t v = 0; v < p.q && !hit; ++v)
          hit = !present[v] && !present[(v + 1) % p.q];
        break;
      }
    }
    if (hit) ++successes;
  }

  McResult r;
  r.successes = successes;
  r.trials = cfg.trials;
  r.seed = cfg.seed;
  r.estimate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  r.stderr_ = std::sqrt(r.estimate * (1.0 - r.estimate) /
                        static_cast<double>(cfg.trials));
  return r;
}

}  // namespace pdmc
