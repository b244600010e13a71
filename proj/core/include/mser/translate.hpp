#pragma once

#include <set>
#include <string>

#include "mser/model.hpp"
#include "mser/rules.hpp"

namespace mser {

namespace pred {
inline constexpr const char* kInstc = "instc";
inline constexpr const char* kInstr = "instr";
inline constexpr const char* kDiff = "diff";
inline constexpr const char* kIndividual = "individual";
inline constexpr const char* kClassname = "classname";
inline constexpr const char* kRolename = "rolename";
inline constexpr const char* kInconsist = "inconsist";
inline constexpr const char* kQuery = "q";
}  // namespace pred

/// The single ground fact for an axiom.
Atom tau_axiom(const Axiom& a);

/// tau of every axiom plus individual/classname/rolename facts for the vocabulary.
std::set<Atom> tau_ontology(const Ontology& o);

/// q(V1..Vn) :- body, one body atom per triple pattern.
Rule tau_query(const Query& q);

/// Datalog variable name used for query variable `name` (capitalized).
std::string datalog_var(const std::string& name);

struct RqlOptions {
  bool subsumptionReflexivity = true;
  /// Labels of rules to leave out; used for fault injection.
  std::set<std::string> omitRules;
};

/// The fixed saturation program. Every rule carries a stable label.
std::vector<Rule> rql_rules(const RqlOptions& opts = {});

struct ImportSpec {
  IriSet classImports;
  IriSet roleImports;
  IriSet individualImports;

  friend bool operator==(const ImportSpec&, const ImportSpec&) = default;
};

/// Splits `n` by how its members are used in `o`.
ImportSpec interface_spec(const IriSet& n, const Ontology& o);

}  // namespace mser
