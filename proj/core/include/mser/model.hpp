#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mser {

/// An IRI, stored fully expanded. Equality is exact string equality.
class Iri {
 public:
  /// Throws std::invalid_argument when `value` is empty or contains whitespace.
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

// Reserved filler of unqualified existentials on the right-hand side.
inline constexpr std::string_view kThing = "http://www.w3.org/2002/07/owl#Thing";
}  // namespace vocab

Iri thing();
bool is_thing(const Iri& iri);

using IriSet = std::set<Iri>;

struct RoleExpr {
  Iri name;
  bool inverse = false;

  friend bool operator==(const RoleExpr&, const RoleExpr&) = default;
  friend auto operator<=>(const RoleExpr&, const RoleExpr&) = default;
};

struct NamedClass {
  Iri name;

  friend bool operator==(const NamedClass&, const NamedClass&) = default;
  friend auto operator<=>(const NamedClass&, const NamedClass&) = default;
};

struct ExistsRole {
  RoleExpr role;

  friend bool operator==(const ExistsRole&, const ExistsRole&) = default;
  friend auto operator<=>(const ExistsRole&, const ExistsRole&) = default;
};

// Right-hand side existential; filler is owl:Thing when unqualified.
struct QualifiedExists {
  RoleExpr role;
  Iri filler;

  friend bool operator==(const QualifiedExists&, const QualifiedExists&) = default;
  friend auto operator<=>(const QualifiedExists&, const QualifiedExists&) = default;
};

using BasicConcept = std::variant<NamedClass, ExistsRole>;
using RhsConcept = std::variant<NamedClass, QualifiedExists>;

// Axiom shapes. Role axioms never carry an inverse on the left; the
// make_* helpers below normalize on construction.
struct ClassInclusion {
  BasicConcept lhs;
  RhsConcept rhs;
  friend bool operator==(const ClassInclusion&, const ClassInclusion&) = default;
  friend auto operator<=>(const ClassInclusion&, const ClassInclusion&) = default;
};

struct ClassDisjointness {
  BasicConcept lhs;
  BasicConcept rhs;
  friend bool operator==(const ClassDisjointness&, const ClassDisjointness&) = default;
  friend auto operator<=>(const ClassDisjointness&, const ClassDisjointness&) = default;
};

struct RoleInclusion {
  Iri lhs;
  RoleExpr rhs;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
  friend auto operator<=>(const RoleInclusion&, const RoleInclusion&) = default;
};

struct RoleDisjointness {
  Iri lhs;
  RoleExpr rhs;
  friend bool operator==(const RoleDisjointness&, const RoleDisjointness&) = default;
  friend auto operator<=>(const RoleDisjointness&, const RoleDisjointness&) = default;
};

struct Reflexive {
  Iri role;
  friend bool operator==(const Reflexive&, const Reflexive&) = default;
  friend auto operator<=>(const Reflexive&, const Reflexive&) = default;
};

struct Irreflexive {
  Iri role;
  friend bool operator==(const Irreflexive&, const Irreflexive&) = default;
  friend auto operator<=>(const Irreflexive&, const Irreflexive&) = default;
};

struct ClassAssertion {
  Iri cls;
  Iri individual;
  friend bool operator==(const ClassAssertion&, const ClassAssertion&) = default;
  friend auto operator<=>(const ClassAssertion&, const ClassAssertion&) = default;
};

struct RoleAssertion {
  Iri role;
  Iri subject;
  Iri object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

struct Different {
  Iri a;
  Iri b;
  friend bool operator==(const Different&, const Different&) = default;
  friend auto operator<=>(const Different&, const Different&) = default;
};

using Axiom = std::variant<ClassInclusion, ClassDisjointness, RoleInclusion, RoleDisjointness,
                           Reflexive, Irreflexive, ClassAssertion, RoleAssertion, Different>;

using AxiomSet = std::set<Axiom>;

bool is_tbox(const Axiom& a);
inline bool is_abox(const Axiom& a) { return !is_tbox(a); }

/// r1- isarole r2 becomes r1 isarole r2-.
Axiom make_role_inclusion(const RoleExpr& lhs, const RoleExpr& rhs);
Axiom make_role_disjointness(const RoleExpr& lhs, const RoleExpr& rhs);
/// c disjoint exists r is stored as exists r disjoint c (no dedicated row exists for it).
Axiom make_class_disjointness(const BasicConcept& lhs, const BasicConcept& rhs);

struct Vocabulary {
  IriSet classes;
  IriSet objectProperties;
  IriSet individuals;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

class Ontology {
 public:
  Ontology() = default;
  /// Routes each axiom to the TBox or ABox by kind and derives the vocabulary.
  explicit Ontology(const std::vector<Axiom>& axioms);
  Ontology(std::vector<Axiom> tbox, std::vector<Axiom> abox);

  const std::vector<Axiom>& tbox() const noexcept { return tbox_; }
  const std::vector<Axiom>& abox() const noexcept { return abox_; }
  const Vocabulary& vocab() const noexcept { return vocab_; }

  std::vector<Axiom> axioms() const;
  AxiomSet axiom_set() const;
  std::size_t size() const noexcept { return tbox_.size() + abox_.size(); }
  bool empty() const noexcept { return size() == 0; }

  friend bool operator==(const Ontology& a, const Ontology& b) {
    return a.tbox_ == b.tbox_ && a.abox_ == b.abox_;
  }

 private:
  std::vector<Axiom> tbox_;
  std::vector<Axiom> abox_;
  Vocabulary vocab_;
};

Vocabulary compute_vocabulary(const std::vector<Axiom>& tbox, const std::vector<Axiom>& abox);

// ---------------------------------------------------------------------------
// Queries and answers

struct Variable {
  std::string name;  // without the leading '?'
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using QueryTerm = std::variant<Iri, Variable>;

enum class Keyword { Type, SubClassOf, SubPropertyOf, DisjointWith };

using Predicate = std::variant<Keyword, Iri, Variable>;

struct TriplePattern {
  QueryTerm subject;
  Predicate predicate;
  QueryTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

class Query {
 public:
  /// Throws std::invalid_argument if patterns is empty or a selected
  /// variable does not occur in the patterns.
  Query(std::vector<std::string> selectVars, std::vector<TriplePattern> patterns);

  const std::vector<std::string>& select_vars() const noexcept { return select_; }
  const std::vector<TriplePattern>& patterns() const noexcept { return patterns_; }
  std::set<std::string> pattern_variables() const;

  friend bool operator==(const Query&, const Query&) = default;

 private:
  std::vector<std::string> select_;
  std::vector<TriplePattern> patterns_;
};

class AnswerTable {
 public:
  using Row = std::vector<Iri>;

  explicit AnswerTable(std::vector<std::string> header) : header_(std::move(header)) {}

  /// Throws std::invalid_argument when the row arity differs from the header.
  void insert(Row row);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::set<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  friend bool operator==(const AnswerTable&, const AnswerTable&) = default;

 private:
  std::vector<std::string> header_;
  std::set<Row> rows_;  // ordered: lexicographic output for free
};

// ---------------------------------------------------------------------------
// Signatures

/// Classes, properties and individuals occurring in `a`; owl:Thing excluded.
IriSet signature_of_axiom(const Axiom& a);
IriSet signature_of_ontology(const Ontology& o);
/// IRIs of the query outside the keyword predicates; falls back to the
/// ontology signature when the query mentions none.
IriSet signature_of_query(const Query& q, const Ontology& o);

}  // namespace mser

template <>
struct std::hash<mser::Iri> {
  std::size_t operator()(const mser::Iri& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};
