#include "gf2hd/config.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gf2hd/rng.hpp"

namespace gf2hd {

namespace {

void append_le(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

}  // namespace

void BlockPolynomialConfig::compute_id() {
  std::string bytes = "gf2hd-config-v1";
  append_le(bytes, static_cast<std::uint64_t>(total_bits_), 4);
  append_le(bytes, static_cast<std::uint64_t>(block_count_), 4);
  append_le(bytes, static_cast<std::uint64_t>(block_bits_), 4);
  for (int b = 0; b < block_count_; ++b) {
    append_le(bytes, generators_[b].mask(), 8);
    append_le(bytes, seeds_[b], 4);
  }
  id_ = fnv1a64(bytes.data(), bytes.size());
}

BlockPolynomialConfig BlockPolynomialConfig::make(int total_bits,
                                                  int block_count,
                                                  std::uint64_t master_seed) {
  if (total_bits <= 0 || block_count <= 0 || total_bits % block_count != 0) {
    throw std::invalid_argument("config: L must be a positive multiple of N");
  }
  const int q = total_bits / block_count;
  if (q < 2 || q > Gf2Poly::kMaxDegree) {
    throw std::invalid_argument("config: q = L/N must lie in [2,32]");
  }

  BlockPolynomialConfig cfg;
  cfg.total_bits_ = total_bits;
  cfg.block_count_ = block_count;
  cfg.block_bits_ = q;

  PrimitiveScan scan = primitive_polys(q, static_cast<std::size_t>(block_count));
  const std::size_t stock = scan.polys.size();
  // Pairwise-distinct (generator, seed) pairs must exist for every block.
  const long double pair_capacity =
      static_cast<long double>(stock) * std::pow(2.0L, q);
  if (static_cast<long double>(block_count) > pair_capacity) {
    throw std::invalid_argument(
        "config: N exceeds the distinct (generator, seed) pair capacity");
  }

  SplitMix64 rng(master_seed);
  const BlockState mask = cfg.block_mask();
  std::set<std::pair<std::size_t, BlockState>> used;
  cfg.generators_.reserve(block_count);
  cfg.seeds_.reserve(block_count);
  for (int b = 0; b < block_count; ++b) {
    const std::size_t gi = static_cast<std::size_t>(b) % stock;
    cfg.generators_.push_back(scan.polys[gi]);
    for (;;) {
      const BlockState s = static_cast<BlockState>(rng.next()) & mask;
      if (used.insert({gi, s}).second) {
        cfg.seeds_.push_back(s);
        break;
      }
    }
  }
  cfg.compute_id();
  return cfg;
}

BlockPolynomialConfig BlockPolynomialConfig::named(const std::string& name,
                                                   std::uint64_t master_seed) {
  if (name == "paper") return make(1000, 100, master_seed);
  if (name == "default") return make(1024, 64, master_seed);
  throw std::invalid_argument("config: unknown named geometry: " + name);
}

std::string BlockPolynomialConfig::to_line() const {
  std::ostringstream out;
  out << "gf2hd-config v1 L=" << total_bits_ << " N=" << block_count_
      << " q=" << block_bits_ << " gens=";
  for (int b = 0; b < block_count_; ++b) {
    if (b) out << ',';
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx",
                  static_cast<unsigned long long>(generators_[b].mask()));
    out << buf;
  }
  out << " seeds=";
  for (int b = 0; b < block_count_; ++b) {
    if (b) out << ',';
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", seeds_[b]);
    out << buf;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(id_));
  out << " id=" << buf;
  return out.str();
}

BlockPolynomialConfig BlockPolynomialConfig::from_line(const std::string& line) {
  std::istringstream in(line);
  std::string magic, version;
  in >> magic >> version;
  if (magic != "gf2hd-config" || version != "v1") {
    throw std::invalid_argument("config: bad header line");
  }
  BlockPolynomialConfig cfg;
  std::uint64_t stated_id = 0;
  std::string tok;
  bool saw_gens = false, saw_seeds = false, saw_id = false;
  while (in >> tok) {
    if (tok.rfind("L=", 0) == 0) {
      cfg.total_bits_ = std::stoi(tok.substr(2));
    } else if (tok.rfind("N=", 0) == 0) {
      cfg.block_count_ = std::stoi(tok.substr(2));
    } else if (tok.rfind("q=", 0) == 0) {
      cfg.block_bits_ = std::stoi(tok.substr(2));
    } else if (tok.rfind("gens=", 0) == 0) {
      std::istringstream list(tok.substr(5));
      std::string item;
      while (std::getline(list, item, ',')) {
        cfg.generators_.push_back(
            Gf2Poly::from_mask(std::stoull(item, nullptr, 16)));
      }
      saw_gens = true;
    } else if (tok.rfind("seeds=", 0) == 0) {
      std::istringstream list(tok.substr(6));
      std::string item;
      while (std::getline(list, item, ',')) {
        cfg.seeds_.push_back(
            static_cast<BlockState>(std::stoul(item, nullptr, 16)));
      }
      saw_seeds = true;
    } else if (tok.rfind("id=", 0) == 0) {
      stated_id = std::stoull(tok.substr(3), nullptr, 16);
      saw_id = true;
    } else {
      throw std::invalid_argument("config: unknown field: " + tok);
    }
  }
  if (!saw_gens || !saw_seeds || !saw_id || cfg.total_bits_ == 0) {
    throw std::invalid_argument("config: missing fields in line");
  }
  if (cfg.total_bits_ != cfg.block_count_ * cfg.block_bits_ ||
      static_cast<int>(cfg.generators_.size()) != cfg.block_count_ ||
      static_cast<int>(cfg.seeds_.size()) != cfg.block_count_) {
    throw std::invalid_argument("config: inconsistent geometry in line");
  }
  for (const Gf2Poly& g : cfg.generators_) {
    if (g.degree() != cfg.block_bits_ || !is_primitive(g)) {
      throw std::invalid_argument("config: non-primitive or wrong-degree generator");
    }
  }
  cfg.compute_id();
  if (cfg.id_ != stated_id) {
    throw std::invalid_argument("config: fingerprint mismatch (corrupt line?)");
  }
  return cfg;
}

}  // namespace gf2hd
