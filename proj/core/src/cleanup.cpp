#include "gf2hd/cleanup.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gf2hd/errors.hpp"

namespace gf2hd {

void validate_token(const std::string& token) {
  if (token.empty()) {
    throw std::invalid_argument("token must be non-empty");
  }
  for (char c : token) {
    if (c == '\t' || c == '\n' || c == '\r') {
      throw std::invalid_argument("token must not contain tabs or newlines");
    }
  }
}

Cr2Trace cr2_extend(Cr2Trace trace, ReadoutResult step) {
  trace.cr2 *= step.cr1;
  trace.steps.push_back(std::move(step));
  return trace;
}

void CleanupMemory::add_entry(const std::string& token, const Hypervector& v) {
  validate_token(token);
  require_config(cfg_, v);
  if (contains(token)) {
    throw std::invalid_argument("cleanup memory: duplicate token: " + token);
  }
  entries_.emplace_back(token, v);
}

void CleanupMemory::remove_entry(const std::string& token) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const auto& e) { return e.first == token; });
  if (it == entries_.end()) {
    throw std::invalid_argument("cleanup memory: unknown token: " + token);
  }
  entries_.erase(it);
}

bool CleanupMemory::contains(const std::string& token) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == token; });
}

const Hypervector& CleanupMemory::entry(const std::string& token) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const auto& e) { return e.first == token; });
  if (it == entries_.end()) {
    throw std::invalid_argument("cleanup memory: unknown token: " + token);
  }
  return it->second;
}

ReadoutResult CleanupMemory::cleanup(const Hypervector& query) const {
  if (entries_.empty()) {
    throw EmptyVocabularyError("cleanup: empty vocabulary");
  }
  require_config(cfg_, query);

  const std::size_t k = entries_.size();
  std::vector<int> votes(k, 0);
  for (int b = 0; b < cfg_.N(); ++b) {
    int best = std::numeric_limits<int>::max();
    std::size_t best_idx = 0;
    bool tie = false;
    for (std::size_t c = 0; c < k; ++c) {
      const int d = block_hamming(entries_[c].second, query, b);
      if (d < best) {
        best = d;
        best_idx = c;
        tie = false;
      } else if (d == best) {
        tie = true;
      }
    }
    if (!tie) ++votes[best_idx];  // tied minimum: the block abstains
  }

  std::size_t win = 0;
  for (std::size_t c = 1; c < k; ++c) {
    if (votes[c] > votes[win]) win = c;
  }
  int runner_up = 0;
  bool top_tie = false;
  for (std::size_t c = 0; c < k; ++c) {
    if (c == win) continue;
    runner_up = std::max(runner_up, votes[c]);
    if (votes[c] == votes[win]) top_tie = true;
  }
  if (top_tie) {
    std::vector<std::string> tied;
    for (std::size_t c = 0; c < k; ++c) {
      if (votes[c] == votes[win]) tied.push_back(entries_[c].first);
    }
    throw TiedWinnerError("cleanup: ambiguous readout, tied top vote count",
                          std::move(tied));
  }

  ReadoutResult r;
  r.winner = entries_[win].first;
  r.votes.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    r.votes.emplace_back(entries_[c].first, votes[c]);
  }
  r.cr1 = static_cast<double>(votes[win]) / cfg_.N();
  r.margin = votes[win] - runner_up;
  return r;
}

void CleanupMemory::save(std::ostream& out) const {
  out << cfg_.to_line() << "\n";
  for (const auto& [token, v] : entries_) {
    out << token << '\t' << v.blocks_to_hex(cfg_.q()) << "\n";
  }
}

void CleanupMemory::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cleanup memory: cannot write " + path);
  save(out);
}

CleanupMemory CleanupMemory::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("cleanup memory: missing config header");
  }
  // from_line re-derives the fingerprint and rejects corrupt headers.
  CleanupMemory m(BlockPolynomialConfig::from_line(header));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::invalid_argument("cleanup memory: malformed record: " + line);
    }
    const std::string token = line.substr(0, tab);
    auto blocks = Hypervector::blocks_from_hex(line.substr(tab + 1),
                                               m.cfg_.N());
    m.add_entry(token, Hypervector(m.cfg_.id(), std::move(blocks)));
  }
  return m;
}

CleanupMemory CleanupMemory::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cleanup memory: cannot read " + path);
  return load(in);
}

std::vector<std::pair<std::string, std::string>> decode_pair_exact(
    const BlockPolynomialConfig& cfg, const Hypervector& value,
    const Hypervector& role1, const Hypervector& role2,
    const CleanupMemory& candidates) {
  require_config(cfg, value);
  // bind(r1,a) ^ bind(r2,b) == value  <=>  shift(a ^ b) == value ^ r1 ^ r2,
  // so scan pairs against one precomputed target.
  const Hypervector target =
      shift_inv(cfg, xor_hv(xor_hv(value, role1), role2));
  std::vector<std::pair<std::string, std::string>> matches;
  for (const auto& [tok_a, vec_a] : candidates.entries()) {
    for (const auto& [tok_b, vec_b] : candidates.entries()) {
      if (xor_hv(vec_a, vec_b) == target) matches.emplace_back(tok_a, tok_b);
    }
  }
  return matches;
}

}  // namespace gf2hd
