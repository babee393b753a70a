// gf2hd: batch front door for the block-LFSR hypervector engine.
//
// Subcommands run one fixture or experiment each and print a report;
// there is no interactive mode. Exit codes: 0 pass, 1 tolerance or
// fixture failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <sys/stat.h>
#include <vector>

#include "CLI11.hpp"
#include "gf2hd/algebra.hpp"
#include "gf2hd/cleanup.hpp"
#include "gf2hd/errors.hpp"
#include "gf2hd/experiments.hpp"
#include "gf2hd/hypervector.hpp"
#include "gf2hd/knowledge.hpp"
#include "gf2hd/rng.hpp"

using namespace gf2hd;

namespace {

struct GlobalOpts {
  std::string config = "default";  // paper | default | path to a config file
  std::uint64_t seed = 7;
  std::string out;                  // empty = stdout
  std::string format = "text";      // text | csv
};

BlockPolynomialConfig resolve_config(const GlobalOpts& g) {
  if (g.config == "paper" || g.config == "default") {
    return BlockPolynomialConfig::named(g.config, g.seed);
  }
  std::ifstream in(g.config);
  if (!in) {
    throw CLI::ValidationError("--config", "no such named config or file: " + g.config);
  }
  std::string line;
  std::getline(in, line);
  return BlockPolynomialConfig::from_line(line);
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw std::runtime_error("cannot write " + g.out);
  out << text;
}

void print_config_banner(const BlockPolynomialConfig& cfg) {
  std::printf("config fingerprint %016llx (L=%d N=%d q=%d)\n",
              static_cast<unsigned long long>(cfg.id()), cfg.L(), cfg.N(),
              cfg.q());
}

int report_exit(const GlobalOpts& g, const TrialReport& rep) {
  emit(g, g.format == "csv" ? rep.csv() : rep.text());
  return rep.passed ? 0 : 1;
}

// ---- demos ----

int run_soap_opera(const GlobalOpts& g) {
  const auto cfg = resolve_config(g);
  print_config_banner(cfg);
  const SoapOperaFixture fx = soap_opera_fixture(cfg);

  CleanupMemory people(cfg);
  for (const std::string& p : fx.people) people.add_entry(p, item_vector(cfg, p));

  int correct = 0;
  auto read_role = [&](const Bundle& fact, const Hypervector& role) {
    try {
      return people.cleanup(unbind_from_bundle(cfg, fact, role));
    } catch (const TiedWinnerError&) {
      ReadoutResult tied;  // ambiguous readout: reported, scored as a miss
      tied.winner = "(tied)";
      tied.cr1 = 0.0;
      return tied;
    }
  };

  std::printf("%-3s %-8s %-8s %-12s %-12s\n", "i", "lover", "beloved",
              "read(lover)", "read(beloved)");
  for (std::size_t i = 0; i < fx.facts.size(); ++i) {
    const SoapOperaFact& f = fx.facts[i];
    const ReadoutResult rl = read_role(f.fact, fx.lover_role);
    const ReadoutResult rb = read_role(f.fact, fx.beloved_role);
    correct += (rl.winner == f.lover) + (rb.winner == f.beloved);
    std::printf("%-3zu %-8s %-8s %-7s %.3f %-7s %.3f\n", i + 1,
                f.lover.c_str(), f.beloved.c_str(), rl.winner.c_str(), rl.cr1,
                rb.winner.c_str(), rb.cr1);
  }

  // closure: cancel the first seven facts, read the isolated eighth
  Hypervector residual = fx.story.value;
  for (int i = 0; i < 7; ++i) {
    residual = xor_hv(residual, fx.facts[i].fact.value);
  }
  const bool isolated = residual == fx.facts[7].fact.value;
  const Bundle last{residual, 2};
  const ReadoutResult closure_lover = read_role(last, fx.lover_role);
  const ReadoutResult closure_beloved = read_role(last, fx.beloved_role);
  Cr2Trace trace;
  trace = cr2_extend(std::move(trace), closure_lover);
  trace = cr2_extend(std::move(trace), closure_beloved);

  std::printf("closure isolates fact 8 bit-exactly: %s\n",
              isolated ? "yes" : "NO");
  std::printf("closure readout: lover=%s (cr1 %.3f, expected Henry), "
              "beloved=%s (cr1 %.3f, expected Amy)\n",
              closure_lover.winner.c_str(), closure_lover.cr1,
              closure_beloved.winner.c_str(), closure_beloved.cr1);
  std::printf("cr2(2) = %.6f\n", trace.cr2);
  std::printf("fact readouts correct: %d/16\n", correct);

  const auto exact = decode_pair_exact(cfg, residual, fx.lover_role,
                                       fx.beloved_role, people);
  std::printf("exact search over fact 8:");
  for (const auto& [a, b] : exact) std::printf(" (%s,%s)", a.c_str(), b.c_str());
  std::printf("\n  the constituent pair is present bit-exactly; both "
              "orderings match because the XOR bundle drops the pairing\n");

  const bool pass = isolated && correct == 16 &&
                    closure_lover.winner == "Henry" &&
                    closure_beloved.winner == "Amy";
  std::printf("result: %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

int run_book_table(const GlobalOpts& g, std::size_t draws) {
  const auto cfg = resolve_config(g);
  print_config_banner(cfg);

  CleanupMemory vocab(cfg);
  vocab.add_entry("Book", item_vector(cfg, "Book"));
  vocab.add_entry("Table", item_vector(cfg, "Table"));

  std::size_t nonzero = 0, inner_ok = 0, outer_ok = 0;
  for (std::size_t t = 0; t < draws; ++t) {
    SplitMix64 rng(mix64(g.seed ^ (0xB00C + t)));
    const Hypervector inner = random_hv(cfg, rng);
    const Hypervector outer = random_hv(cfg, rng);
    const Bundle on_table = bundle(
        cfg, {{inner, vocab.entry("Book")}, {outer, vocab.entry("Table")}});
    const Bundle on_book = bundle(
        cfg, {{inner, vocab.entry("Table")}, {outer, vocab.entry("Book")}});
    if (hamming(on_table.value, on_book.value) != 0) ++nonzero;
    try {
      if (vocab.cleanup(unbind_from_bundle(cfg, on_table, inner)).winner ==
          "Book") {
        ++inner_ok;
      }
      if (vocab.cleanup(unbind_from_bundle(cfg, on_table, outer)).winner ==
          "Table") {
        ++outer_ok;
      }
    } catch (const TiedWinnerError&) {
    }
  }
  std::printf("role-swapped bundles differ: %zu/%zu draws\n", nonzero, draws);
  std::printf("unbind+cleanup recovery: inner %zu/%zu, outer %zu/%zu\n",
              inner_ok, draws, outer_ok, draws);
  std::printf(
      "note: bind is separable, so the XOR bundle keeps only the role and\n"
      "filler sums; swapping fillers between roles cannot change it\n");
  const bool pass = nonzero == draws &&
                    inner_ok >= draws * 99 / 100 &&
                    outer_ok >= draws * 99 / 100;
  std::printf("result: %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

int run_intervene(const GlobalOpts& g, std::size_t trials) {
  const auto cfg = resolve_config(g);
  print_config_banner(cfg);

  std::size_t delta_ok = 0, restore_ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(mix64(g.seed ^ (0xD0 + t)));
    std::vector<RoleFillerPair> pairs;
    for (int i = 0; i < 3; ++i) {
      pairs.push_back({random_hv(cfg, rng), random_hv(cfg, rng)});
    }
    const Bundle b = bundle(cfg, pairs);
    const Hypervector f_new = random_hv(cfg, rng);
    const Bundle b2 = intervene(cfg, b, pairs[0].role, pairs[0].filler, f_new);
    if (xor_hv(b2.value, b.value) ==
        shift(cfg, xor_hv(pairs[0].filler, f_new))) {
      ++delta_ok;
    }
    const Bundle b3 = intervene(cfg, b2, pairs[0].role, f_new, pairs[0].filler);
    if (b3.value == b.value) ++restore_ok;
  }
  std::printf("bundle delta equals shift(f_old ^ f_new): %zu/%zu\n", delta_ok,
              trials);
  std::printf("double intervention restores the bundle: %zu/%zu\n", restore_ok,
              trials);
  const bool pass = delta_ok == trials && restore_ok == trials;
  std::printf("result: %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

int run_config_show(const GlobalOpts& g) {
  const auto cfg = resolve_config(g);
  print_config_banner(cfg);
  std::string text = cfg.to_line() + "\n";
  for (int b = 0; b < cfg.N(); ++b) {
    text += "block " + std::to_string(b) + ": " +
            cfg.generator(b).to_string() + " seed=0x";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", cfg.seed(b));
    text += buf;
    text += "\n";
  }
  emit(g, text);
  return 0;
}

// ---- knowledge-store subcommands ----

KnowledgeStore open_store(const GlobalOpts& g, const std::string& path) {
  struct stat st{};
  if (stat(path.c_str(), &st) == 0) return KnowledgeStore::load_file(path);
  return KnowledgeStore(resolve_config(g));
}

int run_kb_query(KnowledgeStore& store, const std::string& label,
                 const std::string& role) {
  if (role == KnowledgeStore::kIsaRole) {
    const ReadoutResult r = store.query_kind(label);
    std::printf("%s %s -> %s (cr1 %.3f)\n", label.c_str(), role.c_str(),
                r.winner.c_str(), r.cr1);
    return 0;
  }
  const PropReadout r = store.query_prop(label, role);
  std::printf("%s %s -> %s (cr1 %.3f%s)\n", label.c_str(), role.c_str(),
              r.readout.winner.c_str(), r.readout.cr1,
              r.below_threshold ? ", below confidence threshold" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gf2hd: block-LFSR hypervector engine over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  GlobalOpts g;
  if (const char* env = std::getenv("GF2HD_SEED")) {
    g.seed = std::strtoull(env, nullptr, 0);
  }
  app.add_option("--config", g.config,
                 "named config (paper|default) or config file path");
  app.add_option("--seed", g.seed, "master seed (env GF2HD_SEED overrides the default)");
  app.add_option("--out", g.out, "write the report to a file instead of stdout");
  app.add_option("--format", g.format, "report format: text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // experiments
  auto* qod = app.add_subcommand("qod", "diffusion distance concentration experiment");
  std::size_t qod_samples = 100000;
  qod->add_option("--samples", qod_samples, "sampled state pairs");

  auto* avalanche = app.add_subcommand(
      "avalanche", "single-bit diffusion weight per shipped generator");

  auto* capacity = app.add_subcommand(
      "capacity", "readout accuracy versus bundle arity and nesting depth");
  std::size_t cap_vocab = 16, cap_arity = 16, cap_trials = 200;
  capacity->add_option("--vocab", cap_vocab, "vocabulary size");
  capacity->add_option("--max-arity", cap_arity, "largest arity and depth");
  capacity->add_option("--trials", cap_trials, "trials per point");

  auto* inflect = app.add_subcommand(
      "inflect", "bit-exact stem binding over never-seen tokens");
  std::size_t inflect_count = 1000;
  inflect->add_option("--count", inflect_count, "novel pseudotokens");

  // fixtures
  auto* soap = app.add_subcommand(
      "soap-opera", "eight-person love-cycle fixture with confidence readout");
  auto* book = app.add_subcommand(
      "book-table", "role-swap discrimination fixture");
  std::size_t book_draws = 1000;
  book->add_option("--draws", book_draws, "random role/filler draws");
  auto* intervene_cmd = app.add_subcommand(
      "intervene", "surgical filler substitution identities");
  std::size_t intervene_trials = 1000;
  intervene_cmd->add_option("--trials", intervene_trials, "random bundles");

  // baselines
  auto* baseline = app.add_subcommand("baseline", "real-valued binding baselines");
  baseline->require_subcommand(1);
  auto* hrr = baseline->add_subcommand(
      "hrr", "circular-convolution binding contrast");
  std::size_t hrr_dim = 512, hrr_trials = 1000;
  hrr->add_option("--dim", hrr_dim, "vector dimension");
  hrr->add_option("--trials", hrr_trials, "trials");
  auto* tensor = baseline->add_subcommand(
      "tensor", "outer-product binding exactness and size growth");
  std::size_t tensor_dim = 512, tensor_trials = 100;
  tensor->add_option("--dim", tensor_dim, "vector dimension");
  tensor->add_option("--trials", tensor_trials, "trials");

  // config
  auto* config_cmd = app.add_subcommand("config", "geometry inspection");
  config_cmd->require_subcommand(1);
  auto* config_show = config_cmd->add_subcommand("show", "print the active config");

  // knowledge store
  auto* kb = app.add_subcommand("kb", "persistent individual/kind store");
  kb->require_subcommand(1);
  std::string kb_store = "gf2hd.kb";
  kb->add_option("--store", kb_store, "store file (created on first use)");

  auto* kb_add = kb->add_subcommand("add", "allocate a fresh individual");
  std::string kb_label;
  kb_add->add_option("label", kb_label)->required();

  auto* kb_assert_kind = kb->add_subcommand("assert-kind", "bind ISA to a kind");
  std::string ak_label, ak_kind;
  kb_assert_kind->add_option("label", ak_label)->required();
  kb_assert_kind->add_option("kind", ak_kind)->required();

  auto* kb_assert_prop =
      kb->add_subcommand("assert-prop", "bind a role to a value");
  std::string ap_label, ap_role, ap_value;
  kb_assert_prop->add_option("label", ap_label)->required();
  kb_assert_prop->add_option("role", ap_role)->required();
  kb_assert_prop->add_option("value", ap_value)->required();

  auto* kb_query = kb->add_subcommand("query", "read a role back through cleanup");
  std::string q_label, q_role;
  kb_query->add_option("label", q_label)->required();
  kb_query->add_option("role", q_role)->required();

  auto* kb_save = kb->add_subcommand("save", "copy the store to a path");
  std::string save_path;
  kb_save->add_option("path", save_path)->required();

  auto* kb_load = kb->add_subcommand("load", "adopt a store from a path");
  std::string load_path;
  kb_load->add_option("path", load_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*qod) {
      const auto cfg = resolve_config(g);
      print_config_banner(cfg);
      return report_exit(g, qod_experiment(cfg, qod_samples, g.seed));
    }
    if (*avalanche) {
      const auto cfg = resolve_config(g);
      print_config_banner(cfg);
      return report_exit(g, avalanche_experiment(cfg));
    }
    if (*capacity) {
      const auto cfg = resolve_config(g);
      print_config_banner(cfg);
      return report_exit(g, capacity_experiment(cfg, cap_vocab, cap_arity,
                                                cap_trials, g.seed));
    }
    if (*inflect) {
      const auto cfg = resolve_config(g);
      print_config_banner(cfg);
      std::vector<std::string> novel;
      novel.reserve(inflect_count);
      for (std::size_t i = 0; i < inflect_count; ++i) {
        novel.push_back("pseudoverb#" + std::to_string(i));
      }
      return report_exit(
          g, inflection_experiment(cfg, {"walk", "look", "jump"}, novel));
    }
    if (*soap) return run_soap_opera(g);
    if (*book) return run_book_table(g, book_draws);
    if (*intervene_cmd) return run_intervene(g, intervene_trials);
    if (*hrr) {
      const auto cfg = resolve_config(g);
      print_config_banner(cfg);
      std::vector<BaselineTrialRow> rows;
      const TrialReport rep =
          hrr_contrast_experiment(cfg, hrr_dim, hrr_trials, g.seed, {}, &rows);
      if (g.format == "csv") {
        emit(g, baseline_rows_csv(rows));
        return rep.passed ? 0 : 1;
      }
      return report_exit(g, rep);
    }
    if (*tensor) {
      print_config_banner(resolve_config(g));
      std::vector<BaselineTrialRow> rows;
      const TrialReport rep = tensor_contrast_experiment(
          tensor_dim, tensor_trials, g.seed, {}, &rows);
      if (g.format == "csv") {
        emit(g, baseline_rows_csv(rows));
        return rep.passed ? 0 : 1;
      }
      return report_exit(g, rep);
    }
    if (*config_show) return run_config_show(g);
    if (*kb) {
      KnowledgeStore store = open_store(g, kb_store);
      if (*kb_add) {
        const IndividualRecord& rec = store.add_individual(kb_label);
        store.save_file(kb_store);
        std::printf("added %s (ea fingerprint %016llx)\n", kb_label.c_str(),
                    static_cast<unsigned long long>(rec.ea.fingerprint()));
        return 0;
      }
      if (*kb_assert_kind) {
        if (!store.kind_vocabulary().contains(ak_kind)) {
          store.register_kind(ak_kind);  // CLI convenience; engine is strict
        }
        store.assert_kind(ak_label, ak_kind);
        store.save_file(kb_store);
        std::printf("%s ISA %s\n", ak_label.c_str(), ak_kind.c_str());
        return 0;
      }
      if (*kb_assert_prop) {
        if (!store.role_vocabulary().contains(ap_role)) {
          store.register_role(ap_role);
        }
        if (!store.value_vocabulary().contains(ap_value)) {
          store.register_value(ap_value);
        }
        store.assert_prop(ap_label, ap_role, ap_value);
        store.save_file(kb_store);
        std::printf("%s %s %s\n", ap_label.c_str(), ap_role.c_str(),
                    ap_value.c_str());
        return 0;
      }
      if (*kb_query) return run_kb_query(store, q_label, q_role);
      if (*kb_save) {
        store.save_file(save_path);
        std::printf("saved to %s\n", save_path.c_str());
        return 0;
      }
      if (*kb_load) {
        KnowledgeStore loaded = KnowledgeStore::load_file(load_path);
        loaded.save_file(kb_store);
        std::printf("adopted %s into %s\n", load_path.c_str(),
                    kb_store.c_str());
        return 0;
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::fprintf(stderr, "error: no subcommand executed\n");
  return 2;
}
