#pragma once

// The binding algebra. Everything here is GF(2)-linear over immutable
// values:
//
//   bind(r, f)    = r ^ shift(f)
//   unbind(b, r)  = shift_inv(b ^ r)       exact inverse for b = bind(r, f)
//   bundle        = XOR of bindings        fixed dimension, any arity
//   intervene     = XOR out one binding, XOR in its replacement
//
// One consequence worth stating up front: because bind is separable
// (a role term XOR a shifted filler term), a bundle reduces to
// (XOR of roles) ^ shift(XOR of fillers). The bundle value keeps the two
// sums, not the pairing; see the capacity experiment for what that does to
// multi-binding readout.

#include <string>
#include <vector>

#include "gf2hd/hypervector.hpp"

namespace gf2hd {

struct RoleFillerPair {
  Hypervector role;
  Hypervector filler;
};

// XOR superposition of bindings. `arity` is advisory bookkeeping for
// capacity reporting; the value itself carries no record of constituents.
struct Bundle {
  Hypervector value;
  std::size_t arity = 0;
};

Hypervector bind(const BlockPolynomialConfig& cfg, const Hypervector& role,
                 const Hypervector& filler);

Hypervector unbind(const BlockPolynomialConfig& cfg, const Hypervector& bound,
                   const Hypervector& role);

Bundle bundle(const BlockPolynomialConfig& cfg,
              const std::vector<RoleFillerPair>& pairs);

// shift_inv(value ^ role): the addressed filler XOR the crosstalk from the
// other bindings. Callers pass the raw result to cleanup.
Hypervector unbind_from_bundle(const BlockPolynomialConfig& cfg,
                               const Bundle& b, const Hypervector& role);

// Surgical filler replacement: value' = value ^ bind(r, f_old) ^ bind(r, f_new).
// The caller asserts (r, f_old) is a constituent; the bundle cannot verify
// it. Exact identity: value' ^ value = shift(f_old ^ f_new).
Bundle intervene(const BlockPolynomialConfig& cfg, const Bundle& b,
                 const Hypervector& role, const Hypervector& f_old,
                 const Hypervector& f_new);

// The eight-person love cycle: fact i binds Lover to person i and Beloved
// to person i+1, with person 9 wrapping to Amy. story is the XOR of all
// eight facts, so XORing seven facts back out isolates the eighth exactly.
struct SoapOperaFact {
  std::string lover;
  std::string beloved;
  Bundle fact;
};

struct SoapOperaFixture {
  std::vector<std::string> people;  // Amy .. Henry
  Hypervector lover_role;
  Hypervector beloved_role;
  std::vector<SoapOperaFact> facts;
  Bundle story;
};

SoapOperaFixture soap_opera_fixture(const BlockPolynomialConfig& cfg);

}  // namespace gf2hd
