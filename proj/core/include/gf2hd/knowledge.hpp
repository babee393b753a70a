#pragma once

// Persistent individual/kind memory: entry addresses (EAs), ISA kind
// bindings, property bundles, and the per-block treelet registry.
//
// A record keeps kinds and props as two separately addressable bundles;
// the EA itself participates in neither (the store's map links EA to
// bundles). Kind vectors and EAs are plain hypervectors under one shared
// algebra; identity is the EA, not the property set.

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gf2hd/algebra.hpp"
#include "gf2hd/cleanup.hpp"
#include "gf2hd/config.hpp"
#include "gf2hd/hypervector.hpp"

namespace gf2hd {

struct IndividualRecord {
  std::string label;  // debugging handle; identity is the EA
  Hypervector ea;
  Bundle kinds;
  Bundle props;
  // Duplicate-assertion guards: re-asserting an existing binding would
  // XOR-cancel it silently, so the store rejects it instead. Persisted in
  // the assertions section so reloaded stores keep refusing.
  std::set<std::string> asserted_kinds;
  std::set<std::pair<std::string, std::string>> asserted_props;
};

struct PropReadout {
  ReadoutResult readout;
  // Winner vote share fell below the store's confidence threshold; the
  // readout is reported but flagged unreliable.
  bool below_threshold = false;
};

// Per-block registry mirroring the config: generator fixed per block, a
// value slot that transitions empty -> filled exactly once via deposit.
class TreeletRegistry {
 public:
  struct Slot {
    Gf2Poly generator;
    BlockState value = 0;  // zero until a deposit lands
    bool occupied = false;
  };

  explicit TreeletRegistry(const BlockPolynomialConfig& cfg);

  const Slot& slot(int block) const { return slots_.at(block); }
  int block_count() const { return static_cast<int>(slots_.size()); }

  // Marks the block occupied and stores the EA block. Double deposit on an
  // occupied block is an error; the generator never changes.
  void deposit(int block, BlockState ea_block);

 private:
  std::vector<Slot> slots_;
};

// Concurrency contract: any number of concurrent readers or one writer.
// Queries are const; records read through find()/individuals() are
// snapshots that mutation never touches in place.
class KnowledgeStore {
 public:
  static constexpr double kDefaultConfidenceThreshold = 0.25;
  static constexpr const char* kIsaRole = "ISA";

  explicit KnowledgeStore(const BlockPolynomialConfig& cfg,
                          double confidence_threshold = kDefaultConfidenceThreshold);

  const BlockPolynomialConfig& config() const { return cfg_; }
  double confidence_threshold() const { return threshold_; }

  // Vocabulary registration; vectors are item_vector(token) under the
  // store's config. ISA is pre-registered as a role.
  void register_kind(const std::string& token);
  void register_role(const std::string& token);
  void register_value(const std::string& token);
  const CleanupMemory& kind_vocabulary() const { return kinds_; }
  const CleanupMemory& role_vocabulary() const { return roles_; }
  const CleanupMemory& value_vocabulary() const { return values_; }

  // Allocates a fresh EA with empty bundles. Existing records are never
  // touched. Labels are unique handles within a store.
  const IndividualRecord& add_individual(const std::string& label);

  void assert_kind(const std::string& label, const std::string& kind);
  ReadoutResult query_kind(const std::string& label) const;

  void assert_prop(const std::string& label, const std::string& role,
                   const std::string& value);
  PropReadout query_prop(const std::string& label, const std::string& role) const;

  // Identity is bit equality of EAs, independent of kinds or props.
  static bool same_individual(const Hypervector& a, const Hypervector& b);

  const IndividualRecord* find(const std::string& label) const;
  const IndividualRecord* find_by_ea(const Hypervector& ea) const;
  const std::deque<IndividualRecord>& individuals() const { return records_; }
  std::uint64_t allocator_next() const { return alloc_.next_index(); }

  // Canonical serialized bytes of one record (snapshot comparisons).
  std::string record_text(const IndividualRecord& rec) const;

  // Full-store persistence; load verifies the config fingerprint and
  // replays bit-exactly.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static KnowledgeStore load(std::istream& in);
  static KnowledgeStore load_file(const std::string& path);

 private:
  IndividualRecord& require_record(const std::string& label);
  const IndividualRecord& require_record(const std::string& label) const;

  BlockPolynomialConfig cfg_;
  double threshold_;
  CleanupMemory kinds_;
  CleanupMemory roles_;
  CleanupMemory values_;
  std::deque<IndividualRecord> records_;  // insertion order; references stay valid across additions
  EaAllocator alloc_;
};

}  // namespace gf2hd
