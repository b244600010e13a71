#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mser/model.hpp"

namespace mser {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Prefix name (without the colon) to namespace IRI.
using PrefixMap = std::map<std::string, std::string>;

/// rdf, rdfs, owl and xsd; always in scope.
const PrefixMap& builtin_prefixes();

/// Line-oriented ontology format:
///
///   @prefix ex: <http://example.org/> .
///   ex:Eagle isa ex:Bird .
///   exists ex:teaches- isa ex:Course .
///   ex:A isa exists ex:r.ex:B .
///   ex:r isarole ex:s- .
///   ex:A disjoint exists ex:r- .
///   refl(ex:knows) .
///   ex:Eagle(ex:harry) .
///   ex:knows(ex:a, ex:b) .
///   ex:a != ex:b .
///
/// Throws ParseError on malformed input and on any literal, datatype or
/// data-property syntax.
Ontology parse_ontology(std::string_view text);

/// SELECT ?v... WHERE { s p o . ... } with optional PREFIX / @prefix lines.
Query parse_query(std::string_view text);

std::string format_iri(const Iri& iri, const PrefixMap& prefixes = {});
std::string format_axiom(const Axiom& a, const PrefixMap& prefixes = {});
/// Emits one axiom per line, preceded by the non-builtin prefix declarations.
std::string format_ontology(const Ontology& o, const PrefixMap& prefixes = {});
std::string format_query(const Query& q, const PrefixMap& prefixes = {});

}  // namespace mser
