#pragma once

// Statistical validation harness: diffusion concentration, avalanche,
// capacity/recursion-depth curves, free-generalization checks, and the
// real-valued baseline contrasts. Every run is a pure function of
// (experiment, config, master seed); per-trial generators are derived from
// (master seed, trial index) so aggregates are independent of execution
// order, and reports render byte-identically across runs.

#include <cstdint>
#include <string>
#include <vector>

#include "gf2hd/config.hpp"
#include "gf2hd/gf2poly.hpp"

namespace gf2hd {

// Declared tolerances, reported verbatim alongside the measurements they
// gate.
struct Tolerances {
  double qod_mean_rel = 0.02;        // |mean - q/2| <= rel * q/2
  double qod_var_rel = 0.10;         // |var - q/4| <= rel * q/4
  double avalanche_lo = 0.35;        // per-block mean weight >= lo * q
  double avalanche_hi = 0.65;        // per-block mean weight <= hi * q
  double capacity_knee = 0.95;       // accuracy defining the reported knee
  double hrr_quasi_inverse = 0.999;  // cosine below this counts as lossy
  double hrr_lossy_fraction = 0.99;  // required fraction of lossy trials
  double tensor_exactness = 1e-9;    // max |recovered - ||r||^2 f|
};

struct MetricSummary {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased (n-1) when count > 1
  double min = 0.0;
  double max = 0.0;
};

MetricSummary summarize(const std::string& name, const std::vector<double>& xs);

struct TrialReport {
  std::string experiment;
  std::uint64_t config_id = 0;
  std::uint64_t master_seed = 0;
  std::size_t samples = 0;
  std::vector<std::string> tolerance_lines;
  std::vector<MetricSummary> metrics;
  std::vector<std::string> notes;
  bool passed = false;

  std::string text() const;
  std::string csv() const;
};

// Hamming distance between diffusions of random distinct block-state
// pairs, cycled round-robin over the config's blocks. Concentration
// targets are q/2 for the mean and q/4 for the variance.
TrialReport qod_experiment(const BlockPolynomialConfig& cfg,
                           std::size_t samples, std::uint64_t seed,
                           const Tolerances& tol = {});

// Exact distribution of diffusion output distance over all unordered pairs
// of q-bit states (q <= 8): counts[d] = number of pairs at distance d.
std::vector<std::uint64_t> qod_exact_distribution(const Gf2Poly& g);

// Per-block mean over bit positions i of weight(diffuse(e_i)). The report
// fails if any block's mean leaves the declared band; sparse generators
// early in the ascending scan do leave it, and the report says which.
TrialReport avalanche_experiment(const BlockPolynomialConfig& cfg,
                                 const Tolerances& tol = {});

// Accuracy of unbind+cleanup readout, three sweeps:
//   arity_k       flat bundles of k bindings, addressed binding recovered
//   depth_pure_d  d nested single bindings (bundle reused as filler)
//   depth_mixed_d as above with one distractor binding XORed in per level
// The report carries the measured curves, the knee at the declared
// accuracy threshold, and a log2(N) reference line. Curves are
// measurements, not gates: the report passes when emission succeeds.
TrialReport capacity_experiment(const BlockPolynomialConfig& cfg,
                                std::size_t vocab_size, std::size_t max_arity,
                                std::size_t trials, std::uint64_t seed,
                                const Tolerances& tol = {});

// Binds a Stem role to each novel token and checks bit-exact recovery by
// unbind, without any vocabulary update. train_tokens are listed in the
// report only; the algebra never reads them.
TrialReport inflection_experiment(const BlockPolynomialConfig& cfg,
                                  const std::vector<std::string>& train_tokens,
                                  const std::vector<std::string>& novel_tokens);

// One per-trial row of a baseline comparison, CSV schema:
// scheme, dimension, arity, trial, recovery score.
struct BaselineTrialRow {
  std::string scheme;
  std::size_t dimension = 0;
  std::size_t arity = 0;
  std::size_t trial = 0;
  double score = 0.0;
};

std::string baseline_rows_csv(const std::vector<BaselineTrialRow>& rows);

// Contrast: XOR-shift single-binding recovery is exact; circular
// convolution recovery is a quasi-inverse whose cosine degrades with
// bundle arity. Passes when the exact side is 100%, the lossy fraction
// meets its threshold, and the trial-averaged cosine decreases over
// arities {1,2,4,8,16}.
TrialReport hrr_contrast_experiment(const BlockPolynomialConfig& cfg,
                                    std::size_t dim, std::size_t trials,
                                    std::uint64_t seed,
                                    const Tolerances& tol = {},
                                    std::vector<BaselineTrialRow>* rows = nullptr);

// Tensor-product exactness (contraction recovers ||r||^2 f) plus the
// multiplicative dimension-growth table, sizes computed rather than
// allocated above depth 3.
TrialReport tensor_contrast_experiment(std::size_t dim, std::size_t trials,
                                       std::uint64_t seed,
                                       const Tolerances& tol = {},
                                       std::vector<BaselineTrialRow>* rows = nullptr);

}  // namespace gf2hd
