#include "mser/locality.hpp"

namespace mser {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool bottom(const BasicConcept& b, const IriSet& sig) {
  return std::visit(overloaded{[&](const NamedClass& c) { return !sig.contains(c.name); },
                               [&](const ExistsRole& e) { return !sig.contains(e.role.name); }},
                    b);
}

}  // namespace

bool bottom_local(const Axiom& a, const IriSet& sig) {
  return std::visit(
      overloaded{
          [&](const ClassInclusion& x) { return bottom(x.lhs, sig); },
          [&](const ClassDisjointness& x) { return bottom(x.lhs, sig) || bottom(x.rhs, sig); },
          [&](const RoleInclusion& x) { return !sig.contains(x.lhs); },
          [&](const RoleDisjointness& x) { return !sig.contains(x.lhs) || !sig.contains(x.rhs.name); },
          [&](const Reflexive&) { return false; },
          [&](const Irreflexive& x) { return !sig.contains(x.role); },
          [&](const ClassAssertion&) { return false; },
          [&](const RoleAssertion&) { return false; },
          [&](const Different&) { return false; },
      },
      a);
}

Module extract_module(const IriSet& seed, const Ontology& o) {
  Module m;
  m.finalSignature = seed;
  std::vector<Axiom> pending = o.axioms();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Axiom> rest;
    rest.reserve(pending.size());
    for (auto& a : pending) {
      if (bottom_local(a, m.finalSignature)) {
        rest.push_back(std::move(a));
        continue;
      }
      m.finalSignature.merge(signature_of_axiom(a));
      m.axioms.insert(std::move(a));
      changed = true;
    }
    pending = std::move(rest);
  }
  return m;
}

}  // namespace mser
