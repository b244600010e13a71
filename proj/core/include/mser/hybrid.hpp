#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mser/evaluate.hpp"
#include "mser/fact_store.hpp"
#include "mser/model.hpp"
#include "mser/partition.hpp"
#include "mser/rules.hpp"
#include "mser/translate.hpp"

namespace mser {

enum class QueryFn { All, Mod };

/// What the interface rules bring over from the ontology side.
///
/// Literal: the instc/instr extensions of the classes and properties in N,
/// with N taken from O' (or from a module of O' for Mod).
/// Complete: every entailed fact of O' whose IRIs all lie in N, plus the
/// individual/classname/rolename facts for N; Mod takes its module from the
/// whole ontology, seeded with the full signature for queries with
/// variables in class or property positions.
enum class InterfaceMode { Complete, Literal };

std::string_view to_string(QueryFn f);
std::string_view to_string(InterfaceMode m);
std::optional<QueryFn> parse_query_fn(std::string_view text);
std::optional<InterfaceMode> parse_interface_mode(std::string_view text);

/// Entailments of one ontology, computed once by saturation and then served
/// by IRI. Swappable for an external reasoner behind the same three calls.
class Oracle {
 public:
  explicit Oracle(const Ontology& o, const RqlOptions& opts = {}, const EvalOptions& eval = {});

  /// Named individuals x with O |= c(x).
  IriSet class_extension(const Iri& c) const;
  /// Named pairs (x, y) with O |= r(x, y).
  std::set<std::pair<Iri, Iri>> role_extension(const Iri& r) const;
  /// Entailed facts whose constants all lie in `n` (owl:Thing always passes).
  std::vector<Atom> entailed_atoms(const IriSet& n) const;

 private:
  FactStore saturated_;
};

IriSet oracle_class_extension(const Ontology& o, const Iri& c);
std::set<std::pair<Iri, Iri>> oracle_role_extension(const Ontology& o, const Iri& r);

struct AssembleOptions {
  InterfaceMode interface = InterfaceMode::Complete;
  RqlOptions rql;
};

struct HybridKB {
  Variant variant = Variant::E_AT;
  QueryFn queryFn = QueryFn::All;
  InterfaceMode interface = InterfaceMode::Complete;
  RqlOptions rql;

  Ontology ontoSide;           // O'
  Program rules;               // R^ql and the query rule
  std::set<Atom> facts;        // tau(O'')
  IriSet interfaceSignature;   // N
  ImportSpec imports;
  std::string queryPred;
  std::vector<std::string> header;

  double splitMillis = 0;
  double lmeMillis = 0;
  double tauMillis = 0;
};

/// Throws std::invalid_argument for (E_AT, Mod).
HybridKB assemble(const Ontology& o, const Query& q, Variant v, QueryFn f, const AssembleOptions& opts = {});

struct AnswerStats {
  double importMillis = 0;
  double evalMillis = 0;
  std::size_t factsIn = 0;
  std::size_t importedFacts = 0;
  EvalStats eval;
};

/// Imported facts for `k`, as materialized by answer().
std::vector<Atom> import_facts(const HybridKB& k, const EvalOptions& eval = {});

/// Expects a consistent source ontology.
AnswerTable answer(const HybridKB& k, bool magic, AnswerStats* stats = nullptr, const EvalOptions& eval = {});

/// Direct evaluation of R^ql, tau(O) and the query rule, no ontology side.
AnswerTable baseline_answer(const Ontology& o, const Query& q, const RqlOptions& opts = {});

/// False when the saturation of tau(O) derives inconsist.
bool consistency_check(const Ontology& o);

/// Variables of `q` in class or property positions.
bool has_meta_variable(const Query& q);

}  // namespace mser
