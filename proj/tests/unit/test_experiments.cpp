#include "doctest.h"

#include <bit>

#include "gf2hd/experiments.hpp"
#include "gf2hd/gf2poly.hpp"
#include "oracles.hpp"

using namespace gf2hd;

TEST_SUITE_BEGIN("experiments");

namespace {
const BlockPolynomialConfig& default_cfg() {
  static const auto cfg = BlockPolynomialConfig::make(1024, 64, 7);
  return cfg;
}
}  // namespace

TEST_CASE("qod concentration at q=16") {
  const TrialReport rep = qod_experiment(default_cfg(), 30000, 7);
  CHECK(rep.passed);
  REQUIRE(rep.metrics.size() == 1);
  const MetricSummary& m = rep.metrics[0];
  CHECK(std::abs(m.mean - 8.0) <= 0.02 * 8.0);
  CHECK(std::abs(m.variance - 4.0) <= 0.10 * 4.0);
  CHECK(m.min >= 1.0);  // bijectivity: distinct inputs never collide
}

TEST_CASE("qod exact distribution matches brute force") {
  const auto counts = qod_exact_distribution(Gf2Poly::from_mask(0x13));
  REQUIRE(counts.size() == 5);
  // independent recomputation with the long-division oracle
  std::uint64_t expect[5] = {0, 0, 0, 0, 0};
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = a + 1; b < 16; ++b) {
      ++expect[std::popcount(oracle::diffuse_longdiv(a, 0x13) ^
                             oracle::diffuse_longdiv(b, 0x13))];
    }
  }
  for (int d = 0; d <= 4; ++d) CHECK(counts[d] == expect[d]);
  CHECK(counts[1] == 32);
  CHECK(counts[2] == 48);
  CHECK(counts[3] == 32);
  CHECK(counts[4] == 8);
}

TEST_CASE("qod exact distribution is the binomial spectrum at every q") {
  // diffusion is a bijection fixing zero, so over unordered state pairs
  // the distance distribution equals the weight spectrum of nonzero
  // values, each value covered by 2^(q-1) pairs: counts[d] = C(q,d) * 2^(q-1)
  for (int q : {2, 5, 8}) {
    const Gf2Poly g = primitive_polys(q, 1).polys[0];
    const auto counts = qod_exact_distribution(g);
    REQUIRE(counts.size() == static_cast<std::size_t>(q) + 1);
    CHECK(counts[0] == 0);
    std::uint64_t binom = 1;  // C(q, 0)
    for (int d = 1; d <= q; ++d) {
      binom = binom * (q - d + 1) / d;
      CHECK(counts[d] == binom << (q - 1));
    }
  }
}

TEST_CASE("qod report is byte-reproducible") {
  const TrialReport a = qod_experiment(default_cfg(), 5000, 42);
  const TrialReport b = qod_experiment(default_cfg(), 5000, 42);
  CHECK(a.text() == b.text());
  CHECK(a.csv() == b.csv());
  const TrialReport c = qod_experiment(default_cfg(), 5000, 43);
  CHECK(a.text() != c.text());
}

TEST_CASE("avalanche: single-bit diffusions are nonzero, band verdict is honest") {
  const TrialReport rep = avalanche_experiment(default_cfg());
  REQUIRE(rep.metrics.size() == 1);
  // bijectivity: weight(diffuse(e_i)) >= 1 for every position
  CHECK(rep.metrics[0].min >= 1.0);

  // The ascending scan ships sparse generators first; their low powers of
  // x keep per-block means under the declared band, and the report states
  // which blocks those are. Frozen from enumeration: 12 of the 64
  // degree-16 generators sit below 0.35*q.
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0] ==
        "12 block(s) outside the band: 0,1,3,11,15,17,21,23,39,40,42,61");

  // per-block means match an independent long-division recomputation
  const auto& cfg = default_cfg();
  double worst = 16.0;
  for (int b = 0; b < cfg.N(); ++b) {
    double total = 0.0;
    for (int i = 0; i < 16; ++i) {
      total += std::popcount(
          oracle::diffuse_longdiv(1u << i, cfg.generator(b).mask()));
    }
    worst = std::min(worst, total / 16.0);
  }
  CHECK(rep.metrics[0].min == doctest::Approx(worst));
}

TEST_CASE("avalanche contrast: plain shift moves one bit") {
  // Without feedback a single-bit input stays a single bit (or vanishes
  // off the top): no diffusion at all.
  for (int i = 0; i < 15; ++i) {
    const std::uint32_t shifted = (1u << i) << 1 & 0xFFFF;
    CHECK(std::popcount(shifted) == 1);
  }
  CHECK(std::popcount((1u << 15) << 1 & 0xFFFF) == 0);
}

TEST_CASE("capacity: exact at arity 1, chance beyond, pure chains exact") {
  const TrialReport rep =
      capacity_experiment(default_cfg(), 16, 4, 60, 7);
  CHECK(rep.passed);  // emission is the contract

  double arity1 = -1.0, arity2 = -1.0, pure4 = -1.0, mixed1 = -1.0;
  for (const MetricSummary& m : rep.metrics) {
    if (m.name == "arity_1_accuracy") arity1 = m.mean;
    if (m.name == "arity_2_accuracy") arity2 = m.mean;
    if (m.name == "depth_pure_4_accuracy") pure4 = m.mean;
    if (m.name == "depth_mixed_1_accuracy") mixed1 = m.mean;
  }
  CHECK(arity1 == 1.0);   // single binding unbinds exactly
  CHECK(pure4 == 1.0);    // nesting without superposition stays exact
  // XOR superposition erases pairing: readout beyond one binding is
  // chance-level against a 16-token vocabulary
  CHECK(arity2 < 0.35);
  CHECK(mixed1 < 0.35);
}

TEST_CASE("capacity report is byte-reproducible") {
  const TrialReport a = capacity_experiment(default_cfg(), 8, 3, 30, 7);
  const TrialReport b = capacity_experiment(default_cfg(), 8, 3, 30, 7);
  CHECK(a.text() == b.text());
}

TEST_CASE("inflection: every novel token recovers exactly") {
  std::vector<std::string> train = {"walk", "look", "jump"};
  std::vector<std::string> novel;
  for (int i = 0; i < 200; ++i) novel.push_back("pseudoverb#" + std::to_string(i));
  const TrialReport rep = inflection_experiment(default_cfg(), train, novel);
  CHECK(rep.passed);
  CHECK(rep.metrics[0].mean == 1.0);

  // independent of the training vocabulary
  const TrialReport rep2 = inflection_experiment(default_cfg(), {}, novel);
  CHECK(rep2.passed);
  CHECK(rep2.metrics[0].mean == 1.0);
}

TEST_CASE("hrr contrast passes its declared gates") {
  std::vector<BaselineTrialRow> rows;
  const TrialReport rep =
      hrr_contrast_experiment(default_cfg(), 128, 200, 7, {}, &rows);
  CHECK(rep.passed);
  CHECK(!rows.empty());
  const std::string csv = baseline_rows_csv(rows);
  CHECK(csv.rfind("scheme,dimension,arity,trial,score\n", 0) == 0);
  // exact side exact, lossy side lossy
  for (const MetricSummary& m : rep.metrics) {
    if (m.name == "xor_shift_exact_fraction") CHECK(m.mean == 1.0);
    if (m.name == "hrr_lossy_fraction") CHECK(m.mean >= 0.99);
  }
}

TEST_CASE("tensor contrast passes its declared gates") {
  const TrialReport rep = tensor_contrast_experiment(64, 30, 7);
  CHECK(rep.passed);
  CHECK(rep.metrics[0].max <= 1e-9);
}

TEST_CASE("trial order invariance of the qod aggregate") {
  // per-trial generators depend only on (seed, index): running a prefix
  // yields the same leading draws, so aggregates cannot depend on order
  const TrialReport big = qod_experiment(default_cfg(), 2000, 99);
  const TrialReport small = qod_experiment(default_cfg(), 1000, 99);
  CHECK(big.metrics[0].count == 2000);
  CHECK(small.metrics[0].count == 1000);
  // means of a common prefix agree with an independently derived value
  const TrialReport again = qod_experiment(default_cfg(), 1000, 99);
  CHECK(small.text() == again.text());
}

TEST_SUITE_END();
