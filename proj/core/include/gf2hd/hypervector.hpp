#pragma once

// The L-bit, N-block value type and its block-wise operations: XOR, shift,
// diffusion, Hamming measures, deterministic item generation, and fresh
// entry-address allocation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gf2hd/config.hpp"

namespace gf2hd {

class SplitMix64;

class Hypervector {
 public:
  Hypervector() = default;
  Hypervector(std::uint64_t config_id, std::vector<BlockState> blocks)
      : config_id_(config_id), blocks_(std::move(blocks)) {}

  static Hypervector zero(const BlockPolynomialConfig& cfg);

  std::uint64_t config_id() const { return config_id_; }
  const std::vector<BlockState>& blocks() const { return blocks_; }
  BlockState block(int b) const { return blocks_.at(b); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool is_zero() const;

  // 64-bit digest of the value (used as a store key).
  std::uint64_t fingerprint() const;

  // Space-separated hex blocks, zero-padded to ceil(q/4) digits.
  std::string blocks_to_hex(int q) const;
  static std::vector<BlockState> blocks_from_hex(const std::string& text,
                                                 int expected_blocks);

  // Standalone text form: config id line, then the hex blocks line.
  std::string to_text(int q) const;
  static Hypervector from_text(std::istream& in);

  friend bool operator==(const Hypervector&, const Hypervector&) = default;

 private:
  std::uint64_t config_id_ = 0;
  std::vector<BlockState> blocks_;
};

// Throws ConfigMismatchError unless v was built under cfg.
void require_config(const BlockPolynomialConfig& cfg, const Hypervector& v);

// Block-wise XOR. Operands must share a config.
Hypervector xor_hv(const Hypervector& a, const Hypervector& b);
inline Hypervector operator^(const Hypervector& a, const Hypervector& b) {
  return xor_hv(a, b);
}

// Per-block LFSR step under that block's generator, and its exact inverse.
Hypervector shift(const BlockPolynomialConfig& cfg, const Hypervector& v);
Hypervector shift_inv(const BlockPolynomialConfig& cfg, const Hypervector& v);

// Per-block diffusion (q LFSR steps) and its exact inverse.
Hypervector diffuse_hv(const BlockPolynomialConfig& cfg, const Hypervector& v);
Hypervector diffuse_hv_inv(const BlockPolynomialConfig& cfg, const Hypervector& v);

int hamming(const Hypervector& a, const Hypervector& b);
int block_hamming(const Hypervector& a, const Hypervector& b, int block);
double normalized_hamming(const BlockPolynomialConfig& cfg,
                          const Hypervector& a, const Hypervector& b);

// Deterministic vocabulary vector for a token. Per block b the state is
// three diffusion rounds applied to seed_b XOR the low q bits of
// mix64(FNV-1a(token bytes, then the block index as 8 LE bytes)). The
// avalanche finalizer matters: truncating the raw FNV chain would let
// tokens whose hash states agree in the low q bits collide in every block
// at once, since FNV multiplication never carries information downward.
// Empty tokens are rejected.
Hypervector item_vector(const BlockPolynomialConfig& cfg, std::string_view token);

// Uniform random hypervector (test/experiment utility).
Hypervector random_hv(const BlockPolynomialConfig& cfg, SplitMix64& rng);

// Fresh entry-address allocation: item vectors over a monotone counter
// namespace. Deterministic; replaying from a persisted counter reproduces
// the same sequence. Single mutable point: callers serialize access.
class EaAllocator {
 public:
  explicit EaAllocator(std::uint64_t next = 0) : next_(next) {}
  Hypervector fresh(const BlockPolynomialConfig& cfg);
  std::uint64_t next_index() const { return next_; }

 private:
  std::uint64_t next_;
};

}  // namespace gf2hd
