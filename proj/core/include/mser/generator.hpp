#pragma once

#include <cstdint>
#include <string>

#include "mser/model.hpp"
#include "mser/parser.hpp"

namespace mser {

struct GenConfig {
  std::size_t numClasses = 20;
  std::size_t numProperties = 5;
  std::size_t numIndividuals = 50;
  std::size_t numTBox = 30;
  std::size_t numABox = 100;
  double metaProbability = 0.0;
  std::uint64_t seed = 1;
};

/// Namespace of generated names: C{i}, p{i} and i{i}.
inline constexpr const char* kGenNamespace = "http://example.org/gen#";
PrefixMap generator_prefixes();

/// Seeded random ontology. TBox: subclass, existential right-hand side,
/// domain/range and role inclusion axioms. ABox: class and role assertions
/// where, with probability metaProbability, an individual position takes a
/// class or property name instead. Throws std::invalid_argument when the
/// config cannot produce the requested axioms.
Ontology generate_ontology(const GenConfig& g);

/// generate_ontology rendered in the ontology text format.
std::string generate_text(const GenConfig& g);

}  // namespace mser
