#pragma once

// Contractive readout: a named vocabulary of hypervectors, block-wise
// majority-vote nearest-item recovery, and the CR1/CR2 confidence machinery.
//
// Vote rule: each block votes for the candidate whose block is nearest to
// the query's block; a block whose minimum distance is shared by two or
// more candidates abstains. The winner is the candidate with strictly the
// most votes; CR1 is the winner's vote count over N (abstentions included
// in the denominator). A tie for the top vote count is an error, never a
// lexicographic pick: confidence is not fabricated.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gf2hd/config.hpp"
#include "gf2hd/hypervector.hpp"

namespace gf2hd {

struct ReadoutResult {
  std::string winner;
  // Per-candidate block-vote counts in vocabulary insertion order.
  std::vector<std::pair<std::string, int>> votes;
  double cr1 = 0.0;   // winner votes / N, in [0, 1]
  int margin = 0;     // winner votes minus runner-up votes (0-candidate: winner votes)
};

// A chain of readouts with path confidence CR2 = product of step CR1s.
struct Cr2Trace {
  std::vector<ReadoutResult> steps;
  double cr2 = 1.0;  // empty product
};

Cr2Trace cr2_extend(Cr2Trace trace, ReadoutResult step);

// Read-shareable once populated: cleanup() is const and touches no state,
// so a frozen memory can serve queries from any number of threads.
// Mutations (add/remove) need exclusive access.
class CleanupMemory {
 public:
  explicit CleanupMemory(const BlockPolynomialConfig& cfg) : cfg_(cfg) {}

  // O(1) in the number of existing entries; stored vectors are never
  // touched. Duplicate tokens are rejected.
  void add_entry(const std::string& token, const Hypervector& v);
  void remove_entry(const std::string& token);

  bool contains(const std::string& token) const;
  std::size_t size() const { return entries_.size(); }
  const Hypervector& entry(const std::string& token) const;
  const std::vector<std::pair<std::string, Hypervector>>& entries() const {
    return entries_;
  }
  const BlockPolynomialConfig& config() const { return cfg_; }

  // Block-wise majority-vote readout. Throws EmptyVocabularyError on an
  // empty memory and TiedWinnerError on an ambiguous top vote count.
  ReadoutResult cleanup(const Hypervector& query) const;

  // Line-oriented persistence: config line, then one token<TAB>hex-blocks
  // record per entry. Loading recomputes and verifies the config
  // fingerprint.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static CleanupMemory load(std::istream& in);
  static CleanupMemory load_file(const std::string& path);

 private:
  BlockPolynomialConfig cfg_;
  std::vector<std::pair<std::string, Hypervector>> entries_;  // insertion order
};

// Tokens appear in line-oriented files; keep them single-line and
// tab-free. Throws std::invalid_argument otherwise.
void validate_token(const std::string& token);

// Exact-search decode of a two-binding bundle against a candidate
// vocabulary: every ordered filler pair (a, b) with
// bind(r1, a) ^ bind(r2, b) equal to the value, bit-exactly. The XOR
// superposition keeps the constituent sums only, so a match always
// arrives together with its swap (a, b) / (b, a): the constituent set is
// recoverable exactly, the role assignment is not represented.
std::vector<std::pair<std::string, std::string>> decode_pair_exact(
    const BlockPolynomialConfig& cfg, const Hypervector& value,
    const Hypervector& role1, const Hypervector& role2,
    const CleanupMemory& candidates);

}  // namespace gf2hd
