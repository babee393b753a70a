#include "gf2hd/algebra.hpp"

namespace gf2hd {

Hypervector bind(const BlockPolynomialConfig& cfg, const Hypervector& role,
                 const Hypervector& filler) {
  return xor_hv(role, shift(cfg, filler));
}

Hypervector unbind(const BlockPolynomialConfig& cfg, const Hypervector& bound,
                   const Hypervector& role) {
  return shift_inv(cfg, xor_hv(bound, role));
}

Bundle bundle(const BlockPolynomialConfig& cfg,
              const std::vector<RoleFillerPair>& pairs) {
  Bundle out{Hypervector::zero(cfg), pairs.size()};
  for (const RoleFillerPair& p : pairs) {
    out.value = xor_hv(out.value, bind(cfg, p.role, p.filler));
  }
  return out;
}

Hypervector unbind_from_bundle(const BlockPolynomialConfig& cfg,
                               const Bundle& b, const Hypervector& role) {
  return unbind(cfg, b.value, role);
}

Bundle intervene(const BlockPolynomialConfig& cfg, const Bundle& b,
                 const Hypervector& role, const Hypervector& f_old,
                 const Hypervector& f_new) {
  Bundle out = b;
  out.value = xor_hv(out.value, bind(cfg, role, f_old));
  out.value = xor_hv(out.value, bind(cfg, role, f_new));
  return out;
}

SoapOperaFixture soap_opera_fixture(const BlockPolynomialConfig& cfg) {
  SoapOperaFixture fx;
  fx.people = {"Amy", "Billy", "Clara", "David",
               "Eve", "Frank", "Grace", "Henry"};
  fx.lover_role = item_vector(cfg, "Lover");
  fx.beloved_role = item_vector(cfg, "Beloved");
  fx.story = Bundle{Hypervector::zero(cfg), 0};
  for (std::size_t i = 0; i < fx.people.size(); ++i) {
    const std::string& lover = fx.people[i];
    const std::string& beloved = fx.people[(i + 1) % fx.people.size()];
    Bundle fact = bundle(cfg, {{fx.lover_role, item_vector(cfg, lover)},
                               {fx.beloved_role, item_vector(cfg, beloved)}});
    fx.story.value = xor_hv(fx.story.value, fact.value);
    fx.story.arity += fact.arity;
    fx.facts.push_back({lover, beloved, std::move(fact)});
  }
  return fx;
}

}  // namespace gf2hd
