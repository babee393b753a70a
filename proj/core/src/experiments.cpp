#include "gf2hd/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "gf2hd/algebra.hpp"
#include "gf2hd/cleanup.hpp"
#include "gf2hd/errors.hpp"
#include "gf2hd/hrr.hpp"
#include "gf2hd/hypervector.hpp"
#include "gf2hd/rng.hpp"
#include "gf2hd/tensor.hpp"

namespace gf2hd {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t lane,
                         std::uint64_t trial) {
  return mix64(master ^ mix64(lane * 0x9E3779B97F4A7C15ull + trial));
}

}  // namespace

MetricSummary summarize(const std::string& name, const std::vector<double>& xs) {
  MetricSummary m;
  m.name = name;
  m.count = xs.size();
  if (xs.empty()) return m;
  double sum = 0.0;
  m.min = m.max = xs[0];
  for (double x : xs) {
    sum += x;
    m.min = std::min(m.min, x);
    m.max = std::max(m.max, x);
  }
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.variance = ss / static_cast<double>(xs.size() - 1);
  }
  return m;
}

std::string TrialReport::text() const {
  std::ostringstream out;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_id));
  out << "experiment: " << experiment << "\n";
  out << "config: " << buf << "\n";
  out << "seed: " << master_seed << "\n";
  out << "samples: " << samples << "\n";
  if (!tolerance_lines.empty()) {
    out << "tolerances:\n";
    for (const std::string& t : tolerance_lines) out << "  " << t << "\n";
  }
  out << "metrics:\n";
  for (const MetricSummary& m : metrics) {
    out << "  " << m.name << ": n=" << m.count << " mean=" << fmt(m.mean)
        << " var=" << fmt(m.variance) << " min=" << fmt(m.min)
        << " max=" << fmt(m.max) << "\n";
  }
  for (const std::string& n : notes) out << "note: " << n << "\n";
  out << "result: " << (passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string TrialReport::csv() const {
  std::ostringstream out;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_id));
  out << "experiment,config,seed,metric,count,mean,variance,min,max,passed\n";
  for (const MetricSummary& m : metrics) {
    out << experiment << ',' << buf << ',' << master_seed << ',' << m.name
        << ',' << m.count << ',' << fmt(m.mean) << ',' << fmt(m.variance)
        << ',' << fmt(m.min) << ',' << fmt(m.max) << ',' << (passed ? 1 : 0)
        << "\n";
  }
  return out.str();
}

TrialReport qod_experiment(const BlockPolynomialConfig& cfg,
                           std::size_t samples, std::uint64_t seed,
                           const Tolerances& tol) {
  if (samples == 0) throw std::invalid_argument("qod: samples must be > 0");
  const int q = cfg.q();
  const BlockState mask = cfg.block_mask();

  std::vector<double> dist;
  dist.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    SplitMix64 rng(trial_seed(seed, 1, i));
    const int b = static_cast<int>(i % cfg.N());
    const Gf2Poly& g = cfg.generator(b);
    const BlockState a = static_cast<BlockState>(rng.next()) & mask;
    BlockState c = a;
    while (c == a) c = static_cast<BlockState>(rng.next()) & mask;
    dist.push_back(std::popcount(diffuse(a, g) ^ diffuse(c, g)));
  }

  TrialReport rep;
  rep.experiment = "qod";
  rep.config_id = cfg.id();
  rep.master_seed = seed;
  rep.samples = samples;
  const double mean_target = q / 2.0;
  const double var_target = q / 4.0;
  rep.tolerance_lines = {
      "mean within " + fmt(tol.qod_mean_rel * 100) + "% of q/2 = " +
          fmt(mean_target),
      "variance within " + fmt(tol.qod_var_rel * 100) + "% of q/4 = " +
          fmt(var_target)};
  MetricSummary m = summarize("diffused_pair_distance", dist);
  rep.metrics.push_back(m);
  const bool mean_ok =
      std::abs(m.mean - mean_target) <= tol.qod_mean_rel * mean_target;
  const bool var_ok =
      std::abs(m.variance - var_target) <= tol.qod_var_rel * var_target;
  rep.notes.push_back("mean deviation from q/2: " +
                      fmt(std::abs(m.mean - mean_target)));
  rep.notes.push_back("variance deviation from q/4: " +
                      fmt(std::abs(m.variance - var_target)));
  rep.notes.push_back("minimum distance observed: " + fmt(m.min) +
                      " (bijectivity forbids 0)");
  rep.passed = mean_ok && var_ok;
  return rep;
}

std::vector<std::uint64_t> qod_exact_distribution(const Gf2Poly& g) {
  const int q = g.degree();
  if (q < 2 || q > 8) {
    throw std::invalid_argument("qod_exact_distribution: q must be in [2,8]");
  }
  const std::uint32_t n = 1u << q;
  std::vector<BlockState> image(n);
  for (std::uint32_t s = 0; s < n; ++s) image[s] = diffuse(s, g);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(q) + 1, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      ++counts[std::popcount(image[a] ^ image[b])];
    }
  }
  return counts;
}

TrialReport avalanche_experiment(const BlockPolynomialConfig& cfg,
                                 const Tolerances& tol) {
  const int q = cfg.q();
  const double lo = tol.avalanche_lo * q;
  const double hi = tol.avalanche_hi * q;

  std::vector<double> block_means;
  std::vector<int> out_of_band;
  block_means.reserve(cfg.N());
  for (int b = 0; b < cfg.N(); ++b) {
    const Gf2Poly& g = cfg.generator(b);
    double total = 0.0;
    for (int i = 0; i < q; ++i) {
      total += std::popcount(diffuse(BlockState{1} << i, g));
    }
    const double mean = total / q;
    block_means.push_back(mean);
    if (mean < lo || mean > hi) out_of_band.push_back(b);
  }

  TrialReport rep;
  rep.experiment = "avalanche";
  rep.config_id = cfg.id();
  rep.master_seed = 0;
  rep.samples = static_cast<std::size_t>(cfg.N()) * q;
  rep.tolerance_lines = {"per-block mean single-bit diffusion weight in [" +
                         fmt(lo) + ", " + fmt(hi) + "]"};
  rep.metrics.push_back(summarize("block_mean_weight", block_means));
  if (out_of_band.empty()) {
    rep.notes.push_back("all blocks inside the band");
  } else {
    std::string list;
    for (std::size_t i = 0; i < out_of_band.size(); ++i) {
      if (i) list += ",";
      list += std::to_string(out_of_band[i]);
    }
    rep.notes.push_back(std::to_string(out_of_band.size()) +
                        " block(s) outside the band: " + list);
    rep.notes.push_back(
        "ascending-scan generator stocks start with the sparsest "
        "polynomials, whose low powers of x have low weight");
  }
  rep.passed = out_of_band.empty();
  return rep;
}

TrialReport capacity_experiment(const BlockPolynomialConfig& cfg,
                                std::size_t vocab_size, std::size_t max_arity,
                                std::size_t trials, std::uint64_t seed,
                                const Tolerances& tol) {
  if (vocab_size < 2 || max_arity < 1 || trials < 1) {
    throw std::invalid_argument("capacity: need vocab>=2, arity>=1, trials>=1");
  }
  CleanupMemory vocab(cfg);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < vocab_size; ++i) {
    tokens.push_back("cap-item#" + std::to_string(i));
    vocab.add_entry(tokens.back(), item_vector(cfg, tokens.back()));
  }

  TrialReport rep;
  rep.experiment = "capacity";
  rep.config_id = cfg.id();
  rep.master_seed = seed;
  rep.samples = trials;
  rep.tolerance_lines = {"knee reported at accuracy >= " +
                         fmt(tol.capacity_knee) + " (measurement, not a gate)"};

  // Sweep (a): flat bundles of arity k, recover the addressed filler.
  std::size_t knee_arity = 0;
  for (std::size_t k = 1; k <= max_arity; ++k) {
    std::size_t correct = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      SplitMix64 rng(trial_seed(seed, 100 + k, t));
      std::vector<RoleFillerPair> pairs;
      std::vector<std::size_t> fill_idx;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t fi = rng.next_below(vocab_size);
        fill_idx.push_back(fi);
        pairs.push_back({random_hv(cfg, rng), vocab.entry(tokens[fi])});
      }
      const std::size_t j = rng.next_below(k);
      const Bundle b = bundle(cfg, pairs);
      try {
        const ReadoutResult r =
            vocab.cleanup(unbind_from_bundle(cfg, b, pairs[j].role));
        if (r.winner == tokens[fill_idx[j]]) ++correct;
      } catch (const TiedWinnerError&) {
        // ambiguous readout counts as a miss
      }
    }
    const double acc = static_cast<double>(correct) / trials;
    MetricSummary m;
    m.name = "arity_" + std::to_string(k) + "_accuracy";
    m.count = trials;
    m.mean = acc;
    m.min = m.max = acc;
    rep.metrics.push_back(m);
    if (acc >= tol.capacity_knee) knee_arity = k;
  }

  // Sweep (b): nested composition, the bundle reused as the next filler.
  // Pure chains add no crosstalk; mixed chains XOR in one distractor
  // binding per level.
  std::size_t knee_depth_pure = 0;
  std::size_t knee_depth_mixed = 0;
  for (int mixed = 0; mixed < 2; ++mixed) {
    for (std::size_t d = 1; d <= max_arity; ++d) {
      std::size_t correct = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_seed(seed, 200 + 50 * mixed + d, t));
        const std::size_t fi = rng.next_below(vocab_size);
        Hypervector cur = vocab.entry(tokens[fi]);
        std::vector<Hypervector> roles;
        for (std::size_t level = 0; level < d; ++level) {
          roles.push_back(random_hv(cfg, rng));
          cur = bind(cfg, roles.back(), cur);
          if (mixed) {
            const Hypervector dr = random_hv(cfg, rng);
            const std::size_t di = rng.next_below(vocab_size);
            cur = xor_hv(cur, bind(cfg, dr, vocab.entry(tokens[di])));
          }
        }
        for (std::size_t level = d; level-- > 0;) {
          cur = unbind(cfg, cur, roles[level]);
        }
        try {
          if (vocab.cleanup(cur).winner == tokens[fi]) ++correct;
        } catch (const TiedWinnerError&) {
        }
      }
      const double acc = static_cast<double>(correct) / trials;
      MetricSummary m;
      m.name = (mixed ? "depth_mixed_" : "depth_pure_") + std::to_string(d) +
               "_accuracy";
      m.count = trials;
      m.mean = acc;
      m.min = m.max = acc;
      rep.metrics.push_back(m);
      if (acc >= tol.capacity_knee) {
        (mixed ? knee_depth_mixed : knee_depth_pure) = d;
      }
    }
  }

  rep.notes.push_back("largest flat arity at accuracy >= " +
                      fmt(tol.capacity_knee) + ": " +
                      std::to_string(knee_arity));
  rep.notes.push_back("largest pure-chain depth at accuracy >= " +
                      fmt(tol.capacity_knee) + ": " +
                      std::to_string(knee_depth_pure));
  rep.notes.push_back("largest mixed-chain depth at accuracy >= " +
                      fmt(tol.capacity_knee) + ": " +
                      std::to_string(knee_depth_mixed));
  rep.notes.push_back("reference line log2(N) = " +
                      fmt(std::log2(static_cast<double>(cfg.N()))));
  rep.notes.push_back(
      "XOR superposition keeps only the role and filler sums, so "
      "multi-binding readout through block voting carries no pairing "
      "signal; the curves above are the measured consequence");
  rep.passed = true;  // emission + reproducibility; curves are measurements
  return rep;
}

TrialReport inflection_experiment(const BlockPolynomialConfig& cfg,
                                  const std::vector<std::string>& train_tokens,
                                  const std::vector<std::string>& novel_tokens) {
  if (novel_tokens.empty()) {
    throw std::invalid_argument("inflection: need at least one novel token");
  }
  const Hypervector stem = item_vector(cfg, "Stem");
  std::size_t exact = 0;
  for (const std::string& tok : novel_tokens) {
    const Hypervector f = item_vector(cfg, tok);
    if (unbind(cfg, bind(cfg, stem, f), stem) == f) ++exact;
  }
  TrialReport rep;
  rep.experiment = "inflection";
  rep.config_id = cfg.id();
  rep.master_seed = 0;
  rep.samples = novel_tokens.size();
  rep.tolerance_lines = {"bit-exact recovery required for every novel token"};
  MetricSummary m;
  m.name = "exact_recovery_fraction";
  m.count = novel_tokens.size();
  m.mean = static_cast<double>(exact) / novel_tokens.size();
  m.min = m.max = m.mean;
  rep.metrics.push_back(m);
  rep.notes.push_back("train vocabulary size " +
                      std::to_string(train_tokens.size()) +
                      " (never read by the binding operation)");
  rep.passed = exact == novel_tokens.size();
  return rep;
}

std::string baseline_rows_csv(const std::vector<BaselineTrialRow>& rows) {
  std::ostringstream out;
  out << "scheme,dimension,arity,trial,score\n";
  for (const BaselineTrialRow& r : rows) {
    out << r.scheme << ',' << r.dimension << ',' << r.arity << ',' << r.trial
        << ',' << fmt(r.score) << "\n";
  }
  return out.str();
}

TrialReport hrr_contrast_experiment(const BlockPolynomialConfig& cfg,
                                    std::size_t dim, std::size_t trials,
                                    std::uint64_t seed, const Tolerances& tol,
                                    std::vector<BaselineTrialRow>* rows) {
  TrialReport rep;
  rep.experiment = "baseline-hrr";
  rep.config_id = cfg.id();
  rep.master_seed = seed;
  rep.samples = trials;
  rep.tolerance_lines = {
      "xor-shift single-binding recovery exact in 100% of trials",
      "hrr cosine < " + fmt(tol.hrr_quasi_inverse) + " in >= " +
          fmt(tol.hrr_lossy_fraction * 100) + "% of trials",
      "hrr trial-averaged cosine decreases over arities 1,2,4,8,16"};

  // Exact side: XOR-shift single binding.
  std::size_t exact = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(trial_seed(seed, 300, t));
    const Hypervector r = random_hv(cfg, rng);
    const Hypervector f = random_hv(cfg, rng);
    const bool ok = unbind(cfg, bind(cfg, r, f), r) == f;
    if (ok) ++exact;
    if (rows) {
      rows->push_back({"xor-shift", static_cast<std::size_t>(cfg.L()), 1, t,
                       ok ? 1.0 : 0.0});
    }
  }
  MetricSummary mx;
  mx.name = "xor_shift_exact_fraction";
  mx.count = trials;
  mx.mean = static_cast<double>(exact) / trials;
  mx.min = mx.max = mx.mean;
  rep.metrics.push_back(mx);

  // Lossy side: circular convolution / correlation.
  std::vector<double> cos1;
  std::size_t lossy = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(trial_seed(seed, 301, t));
    const RealVector r = random_real_vector(dim, rng);
    const RealVector f = random_real_vector(dim, rng);
    const double c = cosine(hrr_unbind(hrr_bind(r, f), r), f);
    cos1.push_back(c);
    if (c < tol.hrr_quasi_inverse) ++lossy;
    if (rows) rows->push_back({"hrr", dim, 1, t, c});
  }
  rep.metrics.push_back(summarize("hrr_cosine_arity_1", cos1));
  MetricSummary ml;
  ml.name = "hrr_lossy_fraction";
  ml.count = trials;
  ml.mean = static_cast<double>(lossy) / trials;
  ml.min = ml.max = ml.mean;
  rep.metrics.push_back(ml);

  // Degradation with bundle arity (trial-averaged means).
  const std::size_t arities[] = {1, 2, 4, 8, 16};
  const std::size_t bundle_trials = std::max<std::size_t>(trials / 4, 50);
  std::vector<double> means;
  for (std::size_t k : arities) {
    std::vector<double> cs;
    for (std::size_t t = 0; t < bundle_trials; ++t) {
      SplitMix64 rng(trial_seed(seed, 310 + k, t));
      RealVector bun(dim, 0.0);
      RealVector first_role, first_filler;
      for (std::size_t i = 0; i < k; ++i) {
        RealVector r = random_real_vector(dim, rng);
        RealVector f = random_real_vector(dim, rng);
        const RealVector bf = hrr_bind(r, f);
        for (std::size_t d = 0; d < dim; ++d) bun[d] += bf[d];
        if (i == 0) {
          first_role = std::move(r);
          first_filler = std::move(f);
        }
      }
      const double c = cosine(hrr_unbind(bun, first_role), first_filler);
      cs.push_back(c);
      if (rows) rows->push_back({"hrr", dim, k, t, c});
    }
    MetricSummary m = summarize("hrr_cosine_arity_" + std::to_string(k), cs);
    if (k > 1) rep.metrics.push_back(m);
    means.push_back(m.mean);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < means.size(); ++i) {
    if (!(means[i] < means[i - 1])) monotone = false;
  }

  rep.notes.push_back("hrr mean cosine by arity: " + fmt(means[0]) + ", " +
                      fmt(means[1]) + ", " + fmt(means[2]) + ", " +
                      fmt(means[3]) + ", " + fmt(means[4]));
  rep.passed = (exact == trials) &&
               (ml.mean >= tol.hrr_lossy_fraction) && monotone;
  return rep;
}

TrialReport tensor_contrast_experiment(std::size_t dim, std::size_t trials,
                                       std::uint64_t seed,
                                       const Tolerances& tol,
                                       std::vector<BaselineTrialRow>* rows) {
  TrialReport rep;
  rep.experiment = "baseline-tensor";
  rep.config_id = 0;
  rep.master_seed = seed;
  rep.samples = trials;
  rep.tolerance_lines = {"contraction recovers ||r||^2 f within " +
                         fmt(tol.tensor_exactness)};

  std::vector<double> errs;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(trial_seed(seed, 400, t));
    const RealVector r = random_real_vector(dim, rng);
    const RealVector f = random_real_vector(dim, rng);
    const RealVector rec = tensor_unbind(tensor_bind(r, f), r);
    double r2 = 0.0;
    for (double x : r) r2 += x * x;
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      err = std::max(err, std::abs(rec[i] - r2 * f[i]));
    }
    errs.push_back(err);
    if (rows) rows->push_back({"tensor", dim, 1, t, cosine(rec, f)});
  }
  const MetricSummary m = summarize("contraction_abs_error", errs);
  rep.metrics.push_back(m);

  for (int depth = 1; depth <= 5; ++depth) {
    rep.notes.push_back(
        "depth " + std::to_string(depth) + " nesting at D=20: " +
        std::to_string(tensor_nesting_components(20, depth)) + " components");
  }
  rep.notes.push_back("xor-shift dimension is constant per level");
  rep.passed = m.max <= tol.tensor_exactness;
  return rep;
}

}  // namespace gf2hd
