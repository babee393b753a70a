#include "gf2hd/gf2poly.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace gf2hd {

namespace {

int mask_degree(std::uint64_t mask) {
  return mask == 0 ? -1 : std::bit_width(mask) - 1;
}

// Reduce a raw product mask modulo g (long division on masks).
std::uint64_t mod_mask(std::uint64_t a, std::uint64_t g) {
  const int dg = mask_degree(g);
  for (int da = mask_degree(a); da >= dg; da = mask_degree(a)) {
    a ^= g << (da - dg);
  }
  return a;
}

// Carry-less multiply with reduction interleaved into the shift-and-add
// loop, so intermediates stay below 2^(deg(g)+1) and never overflow.
std::uint64_t mul_mod_mask(std::uint64_t a, std::uint64_t b, std::uint64_t g) {
  a = mod_mask(a, g);
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a = mod_mask(a << 1, g);
  }
  return r;
}

// Distinct prime factors of 2^m - 1 for m = 1..32. Index 0 unused.
const std::vector<std::uint64_t> kMersenneFactors[33] = {
    {},
    {},                          // m=1: 2^1-1 = 1
    {3},                         // 3
    {7},                         // 7
    {3, 5},                      // 15
    {31},                        // 31
    {3, 7},                      // 63
    {127},                       // 127
    {3, 5, 17},                  // 255
    {7, 73},                     // 511
    {3, 11, 31},                 // 1023
    {23, 89},                    // 2047
    {3, 5, 7, 13},               // 4095
    {8191},                      // 8191
    {3, 43, 127},                // 16383
    {7, 31, 151},                // 32767
    {3, 5, 17, 257},             // 65535
    {131071},                    // 131071
    {3, 7, 19, 73},              // 262143
    {524287},                    // 524287
    {3, 5, 11, 31, 41},          // 1048575
    {7, 127, 337},               // 2097151
    {3, 23, 89, 683},            // 4194303
    {47, 178481},                // 8388607
    {3, 5, 7, 13, 17, 241},      // 16777215
    {31, 601, 1801},             // 33554431
    {3, 2731, 8191},             // 67108863
    {7, 73, 262657},             // 134217727
    {3, 5, 29, 43, 113, 127},    // 268435455
    {233, 1103, 2089},           // 536870911
    {3, 7, 11, 31, 151, 331},    // 1073741823
    {2147483647},                // 2147483647
    {3, 5, 17, 257, 65537},      // 4294967295
};

}  // namespace

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) {
  if (mask_degree(mask) > kMaxDegree) {
    throw std::invalid_argument("Gf2Poly: degree exceeds engine limit of 32");
  }
  return Gf2Poly(mask);
}

int Gf2Poly::degree() const { return mask_degree(mask_); }

std::string Gf2Poly::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "deg=%d coeffs=0x%llx", degree(),
                static_cast<unsigned long long>(mask_));
  return buf;
}

Gf2Poly Gf2Poly::parse(const std::string& text) {
  int deg = 0;
  unsigned long long mask = 0;
  if (std::sscanf(text.c_str(), "deg=%d coeffs=0x%llx", &deg, &mask) != 2) {
    throw std::invalid_argument("Gf2Poly: unparseable text: " + text);
  }
  Gf2Poly p = from_mask(mask);
  if (p.degree() != deg) {
    throw std::invalid_argument("Gf2Poly: stated degree disagrees with mask: " + text);
  }
  return p;
}

Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& g) {
  if (g.degree() < 1) {
    throw std::invalid_argument("poly_mul_mod: modulus must have degree >= 1");
  }
  return Gf2Poly::from_mask(mul_mod_mask(a.mask(), b.mask(), g.mask()));
}

Gf2Poly x_pow_mod(std::uint64_t e, const Gf2Poly& g) {
  if (g.degree() < 1) {
    throw std::invalid_argument("x_pow_mod: modulus must have degree >= 1");
  }
  std::uint64_t result = mod_mask(1, g.mask());
  std::uint64_t base = mod_mask(2, g.mask());
  while (e) {
    if (e & 1) result = mul_mod_mask(result, base, g.mask());
    base = mul_mod_mask(base, base, g.mask());
    e >>= 1;
  }
  return Gf2Poly::from_mask(result);
}

const std::vector<std::uint64_t>& mersenne_prime_factors(int m) {
  if (m < 1 || m > 32) {
    throw std::invalid_argument("mersenne_prime_factors: m out of [1,32]");
  }
  return kMersenneFactors[m];
}

bool is_primitive(const Gf2Poly& g) {
  const int m = g.degree();
  if (m < 1 || m > Gf2Poly::kMaxDegree) {
    throw std::invalid_argument("is_primitive: degree out of [1,32]");
  }
  const std::uint64_t period = (std::uint64_t{1} << m) - 1;
  if (x_pow_mod(period, g).mask() != 1) return false;
  for (std::uint64_t p : kMersenneFactors[m]) {
    if (x_pow_mod(period / p, g).mask() == 1) return false;
  }
  return true;
}

PrimitiveScan primitive_polys(int q, std::size_t count) {
  if (q < 2 || q > Gf2Poly::kMaxDegree) {
    throw std::invalid_argument("primitive_polys: q out of [2,32]");
  }
  if (count < 1) {
    throw std::invalid_argument("primitive_polys: count must be >= 1");
  }
  PrimitiveScan scan;
  const std::uint64_t lo = std::uint64_t{1} << q;
  const std::uint64_t hi = std::uint64_t{1} << (q + 1);
  // A primitive polynomial needs a nonzero constant term; skip even masks.
  for (std::uint64_t mask = lo + 1; mask < hi; mask += 2) {
    Gf2Poly g = Gf2Poly::from_mask(mask);
    if (is_primitive(g)) {
      scan.polys.push_back(g);
      if (scan.polys.size() == count) return scan;
    }
  }
  scan.exhausted = true;
  return scan;
}

BlockState lfsr_step(BlockState s, const Gf2Poly& g) {
  const int q = g.degree();
  std::uint64_t t = std::uint64_t{s} << 1;
  if (t >> q & 1) t ^= g.mask();
  return static_cast<BlockState>(t);
}

BlockState lfsr_step_inv(BlockState s, const Gf2Poly& g) {
  // Feedback was applied exactly when the reduced value has its constant
  // bit set (generators always carry a nonzero constant term).
  std::uint64_t t = s;
  if (t & 1) t ^= g.mask();
  return static_cast<BlockState>(t >> 1);
}

BlockState diffuse(BlockState s, const Gf2Poly& g) {
  const int q = g.degree();
  for (int i = 0; i < q; ++i) s = lfsr_step(s, g);
  return s;
}

BlockState diffuse_inv(BlockState s, const Gf2Poly& g) {
  const int q = g.degree();
  for (int i = 0; i < q; ++i) s = lfsr_step_inv(s, g);
  return s;
}

}  // namespace gf2hd
