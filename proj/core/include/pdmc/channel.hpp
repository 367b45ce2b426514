#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdmc/gf.hpp"
#include "pdmc/rng.hpp"

namespace pdmc {

// Simulated q-level memory with a set of cells partially stuck at level 1:
// those positions cannot store level 0. Labels are the cell levels.
struct MemoryState {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::size_t> phi;  // stuck positions, sorted
  std::optional<std::vector<Label>> contents;
};

MemoryState mem_new(std::size_t n, std::uint32_t q, std::size_t u, Rng& rng);
MemoryState mem_new(std::size_t n, std::uint32_t q,
                    std::vector<std::size_t> phi);

// Stores the word iff every stuck position holds a label >= 1; rejects
// otherwise, listing the violating positions. Rejection (not clamping) so
// violations stay measurable.
void write(MemoryState& mem, const std::vector<Label>& word);

// Fixture path for unmodified baseline encoders: stores unconditionally and
// returns the violating positions.
std::vector<std::size_t> write_unchecked(MemoryState& mem,
                                         const std::vector<Label>& word);

struct ErrorEvent {
  std::vector<std::size_t> psi;  // error positions, sorted
  Label value = 1;               // magnitude x added at each error position
};

struct ReadResult {
  std::vector<Label> y;
  ErrorEvent event;
  std::vector<std::size_t> overlap;  // phi intersect psi
  std::vector<std::size_t> hazards;  // overlapped positions reading 0
};

// Adds x at t uniformly chosen positions (levels mod q), flags every
// overlapped position that reads 0. Errors apply after read-out; the cell
// floor does not suppress them.
ReadResult corrupt(const MemoryState& mem, std::size_t t, Rng& rng,
                   Label x = 1);

}  // namespace pdmc
