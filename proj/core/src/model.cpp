#include "mser/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mser {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void add_class(IriSet& s, const Iri& c) {
  if (!is_thing(c)) s.insert(c);
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw std::invalid_argument("IRI must not be empty");
  if (std::any_of(value_.begin(), value_.end(),
                  [](unsigned char ch) { return std::isspace(ch) != 0; })) {
    throw std::invalid_argument("IRI must not contain whitespace: '" + value_ + "'");
  }
}

Iri thing() { return Iri(std::string(vocab::kThing)); }

bool is_thing(const Iri& iri) { return iri.str() == vocab::kThing; }

bool is_tbox(const Axiom& a) {
  return !std::holds_alternative<ClassAssertion>(a) && !std::holds_alternative<RoleAssertion>(a) &&
         !std::holds_alternative<Different>(a);
}

Axiom make_role_inclusion(const RoleExpr& lhs, const RoleExpr& rhs) {
  if (lhs.inverse) return RoleInclusion{lhs.name, RoleExpr{rhs.name, !rhs.inverse}};
  return RoleInclusion{lhs.name, rhs};
}

Axiom make_role_disjointness(const RoleExpr& lhs, const RoleExpr& rhs) {
  if (lhs.inverse) return RoleDisjointness{lhs.name, RoleExpr{rhs.name, !rhs.inverse}};
  return RoleDisjointness{lhs.name, rhs};
}

Axiom make_class_disjointness(const BasicConcept& lhs, const BasicConcept& rhs) {
  const auto* cls = std::get_if<NamedClass>(&lhs);
  const auto* ex = std::get_if<ExistsRole>(&rhs);
  if (cls != nullptr && ex != nullptr && !ex->role.inverse) return ClassDisjointness{rhs, lhs};
  return ClassDisjointness{lhs, rhs};
}

IriSet signature_of_axiom(const Axiom& a) {
  IriSet s;
  auto basic = [&s](const BasicConcept& b) {
    std::visit(overloaded{[&s](const NamedClass& c) { add_class(s, c.name); },
                          [&s](const ExistsRole& e) { s.insert(e.role.name); }},
               b);
  };
  std::visit(overloaded{
                 [&](const ClassInclusion& x) {
                   basic(x.lhs);
                   std::visit(overloaded{[&s](const NamedClass& c) { add_class(s, c.name); },
                                         [&s](const QualifiedExists& q) {
                                           s.insert(q.role.name);
                                           add_class(s, q.filler);
                                         }},
                              x.rhs);
                 },
                 [&](const ClassDisjointness& x) {
                   basic(x.lhs);
                   basic(x.rhs);
                 },
                 [&](const RoleInclusion& x) {
                   s.insert(x.lhs);
                   s.insert(x.rhs.name);
                 },
                 [&](const RoleDisjointness& x) {
                   s.insert(x.lhs);
                   s.insert(x.rhs.name);
                 },
                 [&](const Reflexive& x) { s.insert(x.role); },
                 [&](const Irreflexive& x) { s.insert(x.role); },
                 [&](const ClassAssertion& x) {
                   add_class(s, x.cls);
                   s.insert(x.individual);
                 },
                 [&](const RoleAssertion& x) {
                   s.insert(x.role);
                   s.insert(x.subject);
                   s.insert(x.object);
                 },
                 [&](const Different& x) {
                   s.insert(x.a);
                   s.insert(x.b);
                 },
             },
             a);
  return s;
}

Vocabulary compute_vocabulary(const std::vector<Axiom>& tbox, const std::vector<Axiom>& abox) {
  Vocabulary v;
  auto basic = [&v](const BasicConcept& b) {
    std::visit(overloaded{[&v](const NamedClass& c) { add_class(v.classes, c.name); },
                          [&v](const ExistsRole& e) { v.objectProperties.insert(e.role.name); }},
               b);
  };
  auto visit_one = [&](const Axiom& a) {
    std::visit(overloaded{
                   [&](const ClassInclusion& x) {
                     basic(x.lhs);
                     std::visit(overloaded{[&v](const NamedClass& c) { add_class(v.classes, c.name); },
                                           [&v](const QualifiedExists& q) {
                                             v.objectProperties.insert(q.role.name);
                                             add_class(v.classes, q.filler);
                                           }},
                                x.rhs);
                   },
                   [&](const ClassDisjointness& x) {
                     basic(x.lhs);
                     basic(x.rhs);
                   },
                   [&](const RoleInclusion& x) {
                     v.objectProperties.insert(x.lhs);
                     v.objectProperties.insert(x.rhs.name);
                   },
                   [&](const RoleDisjointness& x) {
                     v.objectProperties.insert(x.lhs);
                     v.objectProperties.insert(x.rhs.name);
                   },
                   [&](const Reflexive& x) { v.objectProperties.insert(x.role); },
                   [&](const Irreflexive& x) { v.objectProperties.insert(x.role); },
                   [&](const ClassAssertion& x) {
                     add_class(v.classes, x.cls);
                     v.individuals.insert(x.individual);
                   },
                   [&](const RoleAssertion& x) {
                     v.objectProperties.insert(x.role);
                     v.individuals.insert(x.subject);
                     v.individuals.insert(x.object);
                   },
                   [&](const Different& x) {
                     v.individuals.insert(x.a);
                     v.individuals.insert(x.b);
                   },
               },
               a);
  };
  for (const auto& a : tbox) visit_one(a);
  for (const auto& a : abox) visit_one(a);
  return v;
}

Ontology::Ontology(const std::vector<Axiom>& axioms) {
  for (const auto& a : axioms) (is_tbox(a) ? tbox_ : abox_).push_back(a);
  vocab_ = compute_vocabulary(tbox_, abox_);
}

Ontology::Ontology(std::vector<Axiom> tbox, std::vector<Axiom> abox)
    : tbox_(std::move(tbox)), abox_(std::move(abox)) {
  if (!std::all_of(tbox_.begin(), tbox_.end(), [](const Axiom& a) { return is_tbox(a); }) ||
      !std::all_of(abox_.begin(), abox_.end(), [](const Axiom& a) { return is_abox(a); })) {
    throw std::invalid_argument("TBox and ABox must be separated by axiom kind");
  }
  vocab_ = compute_vocabulary(tbox_, abox_);
}

std::vector<Axiom> Ontology::axioms() const {
  std::vector<Axiom> out(tbox_);
  out.insert(out.end(), abox_.begin(), abox_.end());
  return out;
}

AxiomSet Ontology::axiom_set() const {
  AxiomSet s(tbox_.begin(), tbox_.end());
  s.insert(abox_.begin(), abox_.end());
  return s;
}

IriSet signature_of_ontology(const Ontology& o) {
  IriSet s;
  for (const auto& a : o.tbox()) s.merge(signature_of_axiom(a));
  for (const auto& a : o.abox()) s.merge(signature_of_axiom(a));
  return s;
}

// ---------------------------------------------------------------------------

Query::Query(std::vector<std::string> selectVars, std::vector<TriplePattern> patterns)
    : select_(std::move(selectVars)), patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("query has no triple patterns");
  if (select_.empty()) throw std::invalid_argument("query selects no variables");
  const auto vars = pattern_variables();
  for (const auto& v : select_) {
    if (!vars.contains(v)) {
      throw std::invalid_argument("selected variable ?" + v + " does not occur in the query body");
    }
  }
}

std::set<std::string> Query::pattern_variables() const {
  std::set<std::string> vars;
  auto term = [&vars](const QueryTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) vars.insert(v->name);
  };
  for (const auto& p : patterns_) {
    term(p.subject);
    term(p.object);
    if (const auto* v = std::get_if<Variable>(&p.predicate)) vars.insert(v->name);
  }
  return vars;
}

void AnswerTable::insert(Row row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("answer row arity " + std::to_string(row.size()) +
                                " does not match header arity " + std::to_string(header_.size()));
  }
  rows_.insert(std::move(row));
}

IriSet signature_of_query(const Query& q, const Ontology& o) {
  IriSet s;
  auto term = [&s](const QueryTerm& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) s.insert(*iri);
  };
  for (const auto& p : q.patterns()) {
    term(p.subject);
    term(p.object);
    if (const auto* iri = std::get_if<Iri>(&p.predicate)) s.insert(*iri);
  }
  if (s.empty()) return signature_of_ontology(o);
  return s;
}

}  // namespace mser
