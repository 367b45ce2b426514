#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace pdmc {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used for deterministic seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream seed for unit `index` under a master seed. Every trial (or worker)
// seeds its own engine with derive_seed(master, index), so aggregation is
// independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 1));
}

// Uniform draw from [0, bound) by rejection; avoids the portability gap of
// std::uniform_int_distribution.
inline std::uint64_t bounded(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~0ULL - ~0ULL % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

// Uniform size-k subset of [0, n), returned sorted ascending.
inline std::vector<std::size_t> sample_subset(Rng& rng, std::size_t n,
                                              std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::size_t> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdmc
