#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mser/model.hpp"

namespace mser {

/// How an ontology is divided between the ontology side (O') and the
/// Datalog side (O'').
enum class Variant { E_AT, A_T, NAT_CAT, NAT_CACT };

std::string_view to_string(Variant v);
/// Accepts the enumerator names and their dashed forms ("NAT-CACT").
std::optional<Variant> parse_variant(std::string_view text);

struct Partition {
  Variant variant = Variant::E_AT;
  Ontology ontoSide;
  Ontology datalogSide;
  IriSet metaElements;
  AxiomSet clashing;
};

/// IRIs used both as an individual and as a class or property.
IriSet meta_elements(const Ontology& o);
AxiomSet clashing_axioms(const Ontology& o);
Partition split(const Ontology& o, Variant v);

}  // namespace mser
