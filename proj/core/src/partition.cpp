#include "mser/partition.hpp"

#include <algorithm>

namespace mser {

namespace {

bool mentions_any(const Axiom& a, const IriSet& names) {
  const IriSet sig = signature_of_axiom(a);
  return std::any_of(sig.begin(), sig.end(), [&](const Iri& i) { return names.contains(i); });
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::E_AT: return "E_AT";
    case Variant::A_T: return "A_T";
    case Variant::NAT_CAT: return "NAT_CAT";
    case Variant::NAT_CACT: return "NAT_CACT";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  for (Variant v : {Variant::E_AT, Variant::A_T, Variant::NAT_CAT, Variant::NAT_CACT}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

IriSet meta_elements(const Ontology& o) {
  const Vocabulary& v = o.vocab();
  IriSet out;
  for (const Iri& i : v.individuals) {
    if (v.classes.contains(i) || v.objectProperties.contains(i)) out.insert(i);
  }
  return out;
}

AxiomSet clashing_axioms(const Ontology& o) {
  const IriSet meta = meta_elements(o);
  AxiomSet out;
  if (meta.empty()) return out;
  for (const auto& a : o.tbox())
    if (mentions_any(a, meta)) out.insert(a);
  for (const auto& a : o.abox())
    if (mentions_any(a, meta)) out.insert(a);
  return out;
}

Partition split(const Ontology& o, Variant v) {
  Partition p;
  p.variant = v;
  p.metaElements = meta_elements(o);
  p.clashing = clashing_axioms(o);

  std::vector<Axiom> aClash;
  std::vector<Axiom> aNon;
  for (const auto& a : o.abox()) (p.clashing.contains(a) ? aClash : aNon).push_back(a);
  std::vector<Axiom> tClash;
  for (const auto& a : o.tbox())
    if (p.clashing.contains(a)) tClash.push_back(a);

  switch (v) {
    case Variant::E_AT:
      p.datalogSide = o;
      break;
    case Variant::A_T:
      p.ontoSide = Ontology({}, o.abox());
      p.datalogSide = Ontology(o.tbox(), {});
      break;
    case Variant::NAT_CAT:
      p.ontoSide = Ontology(o.tbox(), aNon);
      p.datalogSide = Ontology(o.tbox(), aClash);
      break;
    case Variant::NAT_CACT:
      p.ontoSide = Ontology(o.tbox(), aNon);
      p.datalogSide = Ontology(tClash, aClash);
      break;
  }
  return p;
}

}  // namespace mser
