#pragma once

// Exact polynomial arithmetic over GF(2) for degrees up to 32, primitivity
// testing against embedded factor tables of 2^m - 1, and the Galois-LFSR
// step/diffusion primitives every higher layer is built from.
//
// Convention used everywhere in this project: bit i of a coefficient mask is
// the coefficient of x^i (low bit = constant term). A degree-d polynomial
// therefore has bit d set; the zero polynomial is the empty mask.

#include <cstdint>
#include <string>
#include <vector>

namespace gf2hd {

class Gf2Poly {
 public:
  // Blocks are at most 32 bits wide, so moduli never exceed degree 32.
  static constexpr int kMaxDegree = 32;

  constexpr Gf2Poly() = default;  // zero polynomial

  // Builds a polynomial from a coefficient mask. Throws std::invalid_argument
  // if the degree exceeds kMaxDegree.
  static Gf2Poly from_mask(std::uint64_t mask);

  static constexpr Gf2Poly zero() { return Gf2Poly{}; }
  static Gf2Poly one() { return from_mask(1); }
  static Gf2Poly x() { return from_mask(2); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool is_zero() const { return mask_ == 0; }

  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const;

  // "deg=4 coeffs=0x13" for x^4+x+1.
  std::string to_string() const;
  static Gf2Poly parse(const std::string& text);

  friend constexpr bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  explicit constexpr Gf2Poly(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

// a*b mod g in GF(2)[x]. g must have degree >= 1.
Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& g);

// x^e mod g, square-and-multiply. g must have degree >= 1.
Gf2Poly x_pow_mod(std::uint64_t e, const Gf2Poly& g);

// True iff g is primitive over GF(2): x has multiplicative order exactly
// 2^deg(g) - 1 modulo g. Checked as x^(2^m-1) = 1 together with
// x^((2^m-1)/p) != 1 for every prime p dividing 2^m - 1 (embedded table).
// Requires 1 <= deg(g) <= 32.
bool is_primitive(const Gf2Poly& g);

// Distinct prime factors of 2^m - 1 for 1 <= m <= 32.
const std::vector<std::uint64_t>& mersenne_prime_factors(int m);

struct PrimitiveScan {
  std::vector<Gf2Poly> polys;
  // Set when fewer than the requested count exist; the scan then returns
  // every primitive polynomial of that degree.
  bool exhausted = false;
};

// First `count` primitive polynomials of degree q in ascending order of
// coefficient mask, found by exhaustive scan. 2 <= q <= 32, count >= 1.
PrimitiveScan primitive_polys(int q, std::size_t count);

// A block register state: a polynomial of degree < q stored in the low q
// bits. The width q is implied by the governing generator polynomial.
using BlockState = std::uint32_t;

// One Galois LFSR step: s*x mod g. Bijective on q-bit states for any g of
// degree q with nonzero constant term.
BlockState lfsr_step(BlockState s, const Gf2Poly& g);

// Exact inverse of lfsr_step.
BlockState lfsr_step_inv(BlockState s, const Gf2Poly& g);

// Diffusion: q consecutive LFSR steps, i.e. s*x^q mod g. GF(2)-linear and
// bijective on q-bit states.
BlockState diffuse(BlockState s, const Gf2Poly& g);

// Exact inverse of diffuse.
BlockState diffuse_inv(BlockState s, const Gf2Poly& g);

}  // namespace gf2hd
