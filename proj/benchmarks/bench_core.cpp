#include <benchmark/benchmark.h>

#include "pdmc/bch.hpp"
#include "pdmc/matrix.hpp"
#include "pdmc/rng.hpp"
#include "pdmc/schemes.hpp"

using namespace pdmc;

static void FieldMulPrime(benchmark::State& state) {
  auto f = make_field(7);
  Label a = 3, b = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = f->mul(a, b));
    b = f->add(b, 1);
  }
}
BENCHMARK(FieldMulPrime);

static void FieldMulExtension(benchmark::State& state) {
  auto f = make_field(7, 3);
  Label a = 17, b = 41;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = f->mul(a, b));
    b = f->add(b, 1);
  }
}
BENCHMARK(FieldMulExtension);

static void Rre50x100(benchmark::State& state) {
  auto f = make_field(7);
  Rng rng(1);
  MatrixFq m(f, 50, 100);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 100; ++j)
      m.set(i, j, static_cast<Label>(bounded(rng, 7)));
  for (auto _ : state) {
    auto r = rre(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(Rre50x100);

static void PairMaskEncode(benchmark::State& state) {
  auto f = make_field(7);
  auto scheme = Construction1Scheme::plain(f, 114, 0);
  Rng rng(2);
  Vec m(113);
  for (auto& v : m) v = static_cast<Label>(bounded(rng, 7));
  const std::vector<std::size_t> phi{3, 57, 99};
  for (auto _ : state) {
    auto word = scheme.encode(m, phi);
    benchmark::DoNotOptimize(word.c.data());
  }
}
BENCHMARK(PairMaskEncode);

static void AlgebraicDecode114(benchmark::State& state) {
  auto bch = bch_build(7, 3, 114, 1, 79);
  Rng rng(3);
  Vec m(8);
  for (auto& v : m) v = static_cast<Label>(bounded(rng, 7));
  const Vec c = bch.code.encode(m);
  Vec y = c;
  const Field& f = *bch.spec.symbol_field;
  for (auto p : sample_subset(rng, 114, 39)) y[p] = f.add(y[p], 1);
  for (auto _ : state) {
    auto dec = bm_decode(bch, y);
    benchmark::DoNotOptimize(dec->codeword.data());
  }
}
BENCHMARK(AlgebraicDecode114);

static void SyndromeTableDecode(benchmark::State& state) {
  auto bch = bch_build(2, 4, 15, 1, 7);
  BoundedDecoder dec(bch.code, 3);
  Rng rng(4);
  Vec y = bch.code.encode({1, 0, 1, 1, 0});
  for (auto p : sample_subset(rng, 15, 3)) y[p] ^= 1;
  for (auto _ : state) {
    auto r = dec.decode(y);
    benchmark::DoNotOptimize(r->codeword.data());
  }
}
BENCHMARK(SyndromeTableDecode);

BENCHMARK_MAIN();
