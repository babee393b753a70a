#pragma once

// Engine geometry: L total bits split into N blocks of q = L/N bits, one
// primitive generator polynomial and one seed per block. Two configs are
// interchangeable exactly when their 64-bit fingerprints agree.

#include <cstdint>
#include <string>
#include <vector>

#include "gf2hd/gf2poly.hpp"

namespace gf2hd {

class BlockPolynomialConfig {
 public:
  // Deterministic construction: generators are the first primitive
  // polynomials of degree q in ascending mask order, cycled when fewer than
  // N exist; per-block seeds are drawn from a splitmix64 chain over
  // master_seed, re-drawn until every (generator, seed) pair is distinct.
  // Requires L divisible by N and q = L/N in [2, 32].
  static BlockPolynomialConfig make(int total_bits, int block_count,
                                    std::uint64_t master_seed);

  // Shipped geometries: "paper" is L=1000, N=100, q=10; "default" is
  // L=1024, N=64, q=16.
  static BlockPolynomialConfig named(const std::string& name,
                                     std::uint64_t master_seed);

  int L() const { return total_bits_; }
  int N() const { return block_count_; }
  int q() const { return block_bits_; }
  std::uint64_t id() const { return id_; }

  const Gf2Poly& generator(int block) const { return generators_.at(block); }
  BlockState seed(int block) const { return seeds_.at(block); }
  const std::vector<Gf2Poly>& generators() const { return generators_; }
  const std::vector<BlockState>& seeds() const { return seeds_; }

  BlockState block_mask() const {
    return static_cast<BlockState>((std::uint64_t{1} << block_bits_) - 1);
  }

  // One-line serialization carrying every field; from_line() recomputes the
  // fingerprint and rejects text whose stated id disagrees.
  std::string to_line() const;
  static BlockPolynomialConfig from_line(const std::string& line);

  friend bool operator==(const BlockPolynomialConfig&,
                         const BlockPolynomialConfig&) = default;

 private:
  BlockPolynomialConfig() = default;
  void compute_id();

  int total_bits_ = 0;
  int block_count_ = 0;
  int block_bits_ = 0;
  std::vector<Gf2Poly> generators_;
  std::vector<BlockState> seeds_;
  std::uint64_t id_ = 0;
};

}  // namespace gf2hd
