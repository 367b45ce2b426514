#include "pdmc/channel.hpp"

#include <algorithm>
#include <iterator>

#include "pdmc/errors.hpp"

namespace pdmc {

MemoryState mem_new(std::size_t n, std::uint32_t q, std::size_t u, Rng& rng) {
  if (q < 2) throw BadParamsError("need q >= 2");
  if (u > n) throw BadParamsError("u exceeds n");
  MemoryState mem{n, q, sample_subset(rng, n, u), std::nullopt};
  return mem;
}

MemoryState mem_new(std::size_t n, std::uint32_t q,
                    std::vector<std::size_t> phi) {
  if (q < 2) throw BadParamsError("need q >= 2");
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  for (std::size_t i : phi)
    if (i >= n) throw BadParamsError("stuck position out of range");
  return MemoryState{n, q, std::move(phi), std::nullopt};
}

namespace {

std::vector<std::size_t> violations(const MemoryState& mem,
                                    const std::vector<Label>& word) {
  std::vector<std::size_t> bad;
  for (std::size_t i : mem.phi)
    if (word[i] == 0) bad.push_back(i);
  return bad;
}

void check_word(const MemoryState& mem, const std::vector<Label>& word) {
  if (word.size() != mem.n) throw BadParamsError("word length != n");
  for (Label v : word)
    if (v >= mem.q) throw BadParamsError("level out of range");
}

}  // namespace

void write(MemoryState& mem, const std::vector<Label>& word) {
  check_word(mem, word);
  auto bad = violations(mem, word);
  if (!bad.empty()) throw ConstraintViolationError(std::move(bad));
  mem.contents = word;
}

std::vector<std::size_t> write_unchecked(MemoryState& mem,
                                         const std::vector<Label>& word) {
  check_word(mem, word);
  auto bad = violations(mem, word);
  mem.contents = word;
  return bad;
}

ReadResult corrupt(const MemoryState& mem, std::size_t t, Rng& rng, Label x) {
  if (!mem.contents) throw NotWrittenError("memory holds no word");
  if (t > mem.n) throw BadParamsError("t exceeds n");
  if (x == 0 || x >= mem.q) throw BadParamsError("error magnitude out of range");

  ReadResult res;
  res.y = *mem.contents;
  res.event.psi = sample_subset(rng, mem.n, t);
  res.event.value = x;
  for (std::size_t j : res.event.psi)
    res.y[j] = static_cast<Label>((res.y[j] + x) % mem.q);

  std::set_intersection(mem.phi.begin(), mem.phi.end(), res.event.psi.begin(),
                        res.event.psi.end(), std::back_inserter(res.overlap));
  for (std::size_t i : res.overlap)
    if (res.y[i] == 0) res.hazards.push_back(i);
  return res;
}

}  // namespace pdmc
