#include "gf2hd/hypervector.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "gf2hd/errors.hpp"
#include "gf2hd/rng.hpp"

namespace gf2hd {

Hypervector Hypervector::zero(const BlockPolynomialConfig& cfg) {
  return Hypervector(cfg.id(), std::vector<BlockState>(cfg.N(), 0));
}

bool Hypervector::is_zero() const {
  for (BlockState b : blocks_) {
    if (b != 0) return false;
  }
  return true;
}

std::uint64_t Hypervector::fingerprint() const {
  std::uint64_t h = fnv1a64(&config_id_, sizeof config_id_);
  for (BlockState b : blocks_) h = fnv1a64(&b, sizeof b, h);
  return h;
}

std::string Hypervector::blocks_to_hex(int q) const {
  const int digits = (q + 3) / 4;
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out.push_back(' ');
    std::snprintf(buf, sizeof buf, "%0*x", digits, blocks_[i]);
    out += buf;
  }
  return out;
}

std::vector<BlockState> Hypervector::blocks_from_hex(const std::string& text,
                                                     int expected_blocks) {
  std::istringstream in(text);
  std::vector<BlockState> blocks;
  std::string tok;
  while (in >> tok) {
    blocks.push_back(static_cast<BlockState>(std::stoul(tok, nullptr, 16)));
  }
  if (static_cast<int>(blocks.size()) != expected_blocks) {
    throw std::invalid_argument("hypervector: wrong block count in text");
  }
  return blocks;
}

std::string Hypervector::to_text(int q) const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_id_));
  return std::string(buf) + "\n" + blocks_to_hex(q) + "\n";
}

Hypervector Hypervector::from_text(std::istream& in) {
  std::string id_line, blocks_line;
  if (!std::getline(in, id_line) || !std::getline(in, blocks_line)) {
    throw std::invalid_argument("hypervector: truncated text");
  }
  const std::uint64_t id = std::stoull(id_line, nullptr, 16);
  std::istringstream bl(blocks_line);
  std::vector<BlockState> blocks;
  std::string tok;
  while (bl >> tok) {
    blocks.push_back(static_cast<BlockState>(std::stoul(tok, nullptr, 16)));
  }
  return Hypervector(id, std::move(blocks));
}

void require_config(const BlockPolynomialConfig& cfg, const Hypervector& v) {
  if (v.config_id() != cfg.id() || v.block_count() != cfg.N()) {
    throw ConfigMismatchError("hypervector built under a different config");
  }
}

Hypervector xor_hv(const Hypervector& a, const Hypervector& b) {
  if (a.config_id() != b.config_id() || a.block_count() != b.block_count()) {
    throw ConfigMismatchError("xor: operands built under different configs");
  }
  std::vector<BlockState> out(a.blocks());
  for (int i = 0; i < b.block_count(); ++i) out[i] ^= b.block(i);
  return Hypervector(a.config_id(), std::move(out));
}

Hypervector shift(const BlockPolynomialConfig& cfg, const Hypervector& v) {
  require_config(cfg, v);
  std::vector<BlockState> out(v.blocks());
  for (int b = 0; b < cfg.N(); ++b) out[b] = lfsr_step(out[b], cfg.generator(b));
  return Hypervector(cfg.id(), std::move(out));
}

Hypervector shift_inv(const BlockPolynomialConfig& cfg, const Hypervector& v) {
  require_config(cfg, v);
  std::vector<BlockState> out(v.blocks());
  for (int b = 0; b < cfg.N(); ++b) {
    out[b] = lfsr_step_inv(out[b], cfg.generator(b));
  }
  return Hypervector(cfg.id(), std::move(out));
}

Hypervector diffuse_hv(const BlockPolynomialConfig& cfg, const Hypervector& v) {
  require_config(cfg, v);
  std::vector<BlockState> out(v.blocks());
  for (int b = 0; b < cfg.N(); ++b) out[b] = diffuse(out[b], cfg.generator(b));
  return Hypervector(cfg.id(), std::move(out));
}

Hypervector diffuse_hv_inv(const BlockPolynomialConfig& cfg,
                           const Hypervector& v) {
  require_config(cfg, v);
  std::vector<BlockState> out(v.blocks());
  for (int b = 0; b < cfg.N(); ++b) {
    out[b] = diffuse_inv(out[b], cfg.generator(b));
  }
  return Hypervector(cfg.id(), std::move(out));
}

int hamming(const Hypervector& a, const Hypervector& b) {
  if (a.config_id() != b.config_id() || a.block_count() != b.block_count()) {
    throw ConfigMismatchError("hamming: operands built under different configs");
  }
  int d = 0;
  for (int i = 0; i < a.block_count(); ++i) {
    d += std::popcount(a.block(i) ^ b.block(i));
  }
  return d;
}

int block_hamming(const Hypervector& a, const Hypervector& b, int block) {
  return std::popcount(a.block(block) ^ b.block(block));
}

double normalized_hamming(const BlockPolynomialConfig& cfg,
                          const Hypervector& a, const Hypervector& b) {
  return static_cast<double>(hamming(a, b)) / cfg.L();
}

Hypervector item_vector(const BlockPolynomialConfig& cfg,
                        std::string_view token) {
  if (token.empty()) {
    throw std::invalid_argument("item_vector: empty token");
  }
  const std::uint64_t token_state = fnv1a64(token.data(), token.size());
  const BlockState mask = cfg.block_mask();
  std::vector<BlockState> out(cfg.N());
  for (int b = 0; b < cfg.N(); ++b) {
    std::uint64_t idx = static_cast<std::uint64_t>(b);
    unsigned char le[8];
    for (int i = 0; i < 8; ++i) le[i] = static_cast<unsigned char>(idx >> (8 * i));
    const std::uint64_t h = mix64(fnv1a64(le, sizeof le, token_state));
    BlockState s = (static_cast<BlockState>(h) & mask) ^ cfg.seed(b);
    const Gf2Poly& g = cfg.generator(b);
    s = diffuse(s, g);
    s = diffuse(s, g);
    s = diffuse(s, g);
    out[b] = s;
  }
  return Hypervector(cfg.id(), std::move(out));
}

Hypervector random_hv(const BlockPolynomialConfig& cfg, SplitMix64& rng) {
  const BlockState mask = cfg.block_mask();
  std::vector<BlockState> out(cfg.N());
  for (int b = 0; b < cfg.N(); ++b) {
    out[b] = static_cast<BlockState>(rng.next()) & mask;
  }
  return Hypervector(cfg.id(), std::move(out));
}

Hypervector EaAllocator::fresh(const BlockPolynomialConfig& cfg) {
  char token[32];
  std::snprintf(token, sizeof token, "ea#%llu",
                static_cast<unsigned long long>(next_++));
  return item_vector(cfg, token);
}

}  // namespace gf2hd
