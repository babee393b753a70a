#include <benchmark/benchmark.h>

#include "gf2hd/algebra.hpp"
#include "gf2hd/cleanup.hpp"
#include "gf2hd/hypervector.hpp"
#include "gf2hd/rng.hpp"

using namespace gf2hd;

namespace {

const BlockPolynomialConfig& cfg() {
  static const auto c = BlockPolynomialConfig::make(1024, 64, 7);
  return c;
}

void BM_LfsrStep(benchmark::State& state) {
  const Gf2Poly g = cfg().generator(0);
  BlockState s = 1;
  for (auto _ : state) {
    s = lfsr_step(s, g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_LfsrStep);

void BM_Diffuse(benchmark::State& state) {
  const Gf2Poly g = cfg().generator(0);
  BlockState s = 1;
  for (auto _ : state) {
    s = diffuse(s, g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Diffuse);

void BM_BindUnbind(benchmark::State& state) {
  SplitMix64 rng(1);
  const Hypervector r = random_hv(cfg(), rng);
  const Hypervector f = random_hv(cfg(), rng);
  for (auto _ : state) {
    Hypervector rec = unbind(cfg(), bind(cfg(), r, f), r);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_BindUnbind);

void BM_ItemVector(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    Hypervector v = item_vector(cfg(), "bench-token-" + std::to_string(i++));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ItemVector);

void BM_Cleanup(benchmark::State& state) {
  CleanupMemory m(cfg());
  for (int i = 0; i < state.range(0); ++i) {
    m.add_entry("w" + std::to_string(i),
                item_vector(cfg(), "w" + std::to_string(i)));
  }
  const Hypervector q = m.entry("w0");  // exact match: no winner ties
  for (auto _ : state) {
    ReadoutResult r = m.cleanup(q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Cleanup)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
