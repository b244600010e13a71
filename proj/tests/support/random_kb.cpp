#include "random_kb.hpp"

#include <set>
#include <string>

namespace mser::fixture {

namespace {

class Draw {
 public:
  Draw(std::mt19937_64& rng, const RandomKbConfig& cfg) : rng_(rng), cfg_(cfg) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Iri cls() { return name("A", below(cfg_.numClasses)); }
  Iri role_name() { return name("r", below(cfg_.numRoles)); }
  RoleExpr role() { return RoleExpr{role_name(), chance(0.4)}; }
  Iri individual() {
    if (chance(cfg_.metaProbability)) return chance(0.7) ? cls() : role_name();
    return name("a", below(cfg_.numIndividuals));
  }

  BasicConcept basic() {
    if (chance(0.6)) return NamedClass{cls()};
    return ExistsRole{role()};
  }

  RhsConcept rhs() {
    const std::size_t k = below(3);
    if (k == 0) return NamedClass{cls()};
    return QualifiedExists{role(), k == 1 ? thing() : cls()};
  }

  Axiom axiom() {
    const std::size_t k = below(100);
    if (k < 35) return ClassInclusion{basic(), rhs()};
    if (k < 42) return make_class_disjointness(basic(), basic());
    if (k < 53) return make_role_inclusion(role(), role());
    if (k < 57) return make_role_disjointness(role(), role());
    if (k < 60) return Reflexive{role_name()};
    if (k < 63) return Irreflexive{role_name()};
    if (k < 83) return ClassAssertion{cls(), individual()};
    if (k < 97) return RoleAssertion{role_name(), individual(), individual()};
    Iri a = individual();
    Iri b = individual();
    if (a == b) return RoleAssertion{role_name(), a, b};
    return Different{a, b};
  }

  static Iri name(const char* kind, std::size_t i) { return Iri(std::string(kRandNs) + kind + std::to_string(i)); }

 private:
  std::mt19937_64& rng_;
  const RandomKbConfig& cfg_;
};

}  // namespace

Ontology random_ontology(std::mt19937_64& rng, const RandomKbConfig& cfg) {
  Draw d(rng, cfg);
  const std::size_t n = 1 + d.below(cfg.maxAxioms);
  std::vector<Axiom> axioms;
  for (std::size_t i = 0; i < n; ++i) axioms.push_back(d.axiom());
  return Ontology(axioms);
}

Query random_query(std::mt19937_64& rng, const RandomKbConfig& cfg, std::size_t maxAtoms) {
  Draw d(rng, cfg);
  const char* vars[] = {"x", "y", "z", "w"};
  auto var = [&]() { return Variable{vars[d.below(4)]}; };
  auto term = [&](auto constant) -> QueryTerm {
    if (d.chance(0.65)) return var();
    return constant();
  };
  auto any_name = [&]() {
    const std::size_t k = d.below(3);
    return k == 0 ? d.cls() : k == 1 ? d.role_name() : Draw::name("a", d.below(cfg.numIndividuals));
  };

  std::vector<TriplePattern> pats;
  const std::size_t n = 1 + d.below(maxAtoms);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = d.below(100);
    TriplePattern tp{Variable{"x"}, Keyword::Type, Variable{"y"}};
    if (k < 35) {
      tp = {term(any_name), Keyword::Type, term([&] { return d.cls(); })};
    } else if (k < 50) {
      tp = {term([&] { return d.cls(); }), Keyword::SubClassOf, term([&] { return d.cls(); })};
    } else if (k < 57) {
      tp = {term([&] { return d.role_name(); }), Keyword::SubPropertyOf, term([&] { return d.role_name(); })};
    } else if (k < 62) {
      tp = {term([&] { return d.cls(); }), Keyword::DisjointWith, term([&] { return d.cls(); })};
    } else if (k < 85) {
      tp = {term(any_name), Predicate{d.role_name()}, term(any_name)};
    } else {
      tp = {term(any_name), Predicate{var()}, term(any_name)};
    }
    pats.push_back(std::move(tp));
  }

  std::set<std::string> seen;
  auto note = [&](const auto& t) {
    if (const auto* v = std::get_if<Variable>(&t)) seen.insert(v->name);
  };
  for (const auto& tp : pats) {
    note(tp.subject);
    note(tp.object);
    note(tp.predicate);
  }
  if (seen.empty()) {
    pats.front().subject = Variable{"x"};
    seen.insert("x");
  }
  std::vector<std::string> select;
  for (const auto& v : seen)
    if (select.empty() || d.chance(0.75)) select.push_back(v);
  return Query(select, pats);
}

}  // namespace mser::fixture
