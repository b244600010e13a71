#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "mser/evaluate.hpp"
#include "mser/fact_store.hpp"
#include "mser/translate.hpp"

using namespace mser;
using mser::fixture::zoo;

namespace {

Term k(const std::string& local) { return Term::constant(zoo(local).str()); }
Atom fact(std::string pred, std::vector<Term> args) { return Atom{std::move(pred), std::move(args)}; }

FactStore saturate(const Ontology& o, const RqlOptions& opts = {}) {
  FactStore s;
  const auto facts = tau_ontology(o);
  s.add(facts.begin(), facts.end());
  Program p;
  p.rules = rql_rules(opts);
  evaluate(p, s);
  return s;
}

}  // namespace

TEST(Tau, Axioms) {
  EXPECT_EQ(tau_axiom(ClassInclusion{NamedClass{zoo("GoldenEagle")}, NamedClass{zoo("Eagle")}}),
            fact("isacCC", {k("GoldenEagle"), k("Eagle")}));
  EXPECT_EQ(tau_axiom(RoleAssertion{zoo("teaches"), zoo("a"), zoo("b")}),
            fact("instr", {k("teaches"), k("a"), k("b")}));
  EXPECT_EQ(tau_axiom(Different{zoo("x"), zoo("y")}), fact("diff", {k("x"), k("y")}));
  EXPECT_EQ(tau_axiom(ClassAssertion{zoo("A"), zoo("a")}), fact("instc", {k("A"), k("a")}));
  EXPECT_EQ(tau_axiom(ClassInclusion{ExistsRole{{zoo("r"), true}}, QualifiedExists{{zoo("s"), false}, zoo("B")}}),
            fact("isacIR", {k("r"), k("s"), k("B")}));
  EXPECT_EQ(tau_axiom(RoleInclusion{zoo("r"), {zoo("s"), true}}), fact("isarRI", {k("r"), k("s")}));
}

TEST(Tau, GoldenEagleCounts) {
  // 5 axiom facts, individuals Harry and GoldenEagle, 5 class names.
  const auto facts = tau_ontology(fixture::golden_eagle());
  EXPECT_EQ(facts.size(), 12u);
  auto count = [&](const std::string& p) {
    return std::count_if(facts.begin(), facts.end(), [&](const Atom& a) { return a.pred == p; });
  };
  EXPECT_EQ(count("individual"), 2);
  EXPECT_EQ(count("classname"), 5);
  EXPECT_EQ(count("rolename"), 0);
  EXPECT_TRUE(tau_ontology(Ontology{}).empty());
}

TEST(Tau, ReflexiveRole) {
  const auto facts = tau_ontology(fixture::zoo_ontology("refl(knows) .\nknows(a, b) .\n"));
  EXPECT_EQ(facts, (std::set<Atom>{fact("refl", {k("knows")}), fact("instr", {k("knows"), k("a"), k("b")}),
                                   fact("rolename", {k("knows")}), fact("individual", {k("a")}),
                                   fact("individual", {k("b")})}));
}

TEST(TauQuery, GoldenEagleExample) {
  const Rule r = tau_query(fixture::load_query("golden_eagle.rq"));
  EXPECT_EQ(to_string(r), "q(X, Y, Z) :- instc(Y, X), isacCC(Y, Z).");
}

TEST(TauQuery, Mappings) {
  EXPECT_EQ(to_string(tau_query(fixture::zoo_query("SELECT ?x WHERE { ?x rdf:type :Species }"))),
            "q(X) :- instc(\"" + zoo("Species").str() + "\", X).");
  EXPECT_EQ(to_string(tau_query(fixture::zoo_query("SELECT ?y ?z WHERE { ?y owl:disjointWith ?z }"))),
            "q(Y, Z) :- disjcCC(Y, Z).");
  EXPECT_EQ(to_string(tau_query(fixture::zoo_query("SELECT ?p WHERE { :a ?p ?o . ?p rdfs:subPropertyOf ?o }"))),
            "q(P) :- instr(P, \"" + zoo("a").str() + "\", O), isarRR(P, O).");
}

TEST(TauQuery, CaseCollisionsStayDistinct) {
  const Rule r = tau_query(fixture::zoo_query("SELECT ?x ?X WHERE { ?x :r ?X }"));
  EXPECT_NE(r.head.args[0], r.head.args[1]);
}

TEST(Rql, ContainsChainRule) {
  const auto rules = rql_rules();
  const Rule expected{fact("isacCR", {Term::var("S"), Term::var("A"), Term::var("F")}),
                      {fact("isacCC", {Term::var("S"), Term::var("M")}),
                       fact("isacCR", {Term::var("M"), Term::var("A"), Term::var("F")})},
                      ""};
  EXPECT_NE(std::find(rules.begin(), rules.end(), expected), rules.end());
  for (const auto& r : rules) EXPECT_NO_THROW(check_range_restricted(r)) << r.label;
}

TEST(Rql, LabelsAreUnique) {
  std::set<std::string> labels;
  for (const auto& r : rql_rules()) EXPECT_TRUE(labels.insert(r.label).second) << r.label;
}

TEST(Rql, OmitAndReflexivityFlags) {
  const auto full = rql_rules();
  RqlOptions o;
  o.omitRules = {"F1.CC.CC"};
  EXPECT_EQ(rql_rules(o).size() + 1, full.size());
  o.omitRules.clear();
  o.subsumptionReflexivity = false;
  EXPECT_EQ(rql_rules(o).size() + 2, full.size());
}

TEST(Rql, Transitivity) {
  const FactStore s = saturate(fixture::golden_eagle());
  EXPECT_TRUE(s.contains(fact("isacCC", {k("GoldenEagle"), k("Bird")})));
  EXPECT_TRUE(s.contains(fact("instc", {k("Species"), k("GoldenEagle")})));
  EXPECT_TRUE(s.contains(fact("instc", {k("Bird"), k("Harry")})));
  EXPECT_FALSE(s.contains(fact("instc", {k("Species"), k("Harry")})));
  EXPECT_TRUE(s.contains(fact("isacCC", {k("Bird"), k("Bird")})));
  EXPECT_FALSE(saturate(fixture::golden_eagle(), {false, {}}).contains(fact("isacCC", {k("Bird"), k("Bird")})));
}

TEST(Rql, ExistentialChains) {
  const FactStore s = saturate(fixture::zoo_ontology(
      "A isa exists r.B .\nB isa C .\nexists r isa D .\nr isarole s- .\nexists s- isa E .\nA(a) .\n"));
  EXPECT_TRUE(s.contains(fact("isacCR", {k("A"), k("r"), k("C")})));
  EXPECT_TRUE(s.contains(fact("isacCI", {k("A"), k("s"), k("B")})));
  EXPECT_TRUE(s.contains(fact("isacCC", {k("A"), k("D")})));
  EXPECT_TRUE(s.contains(fact("isacCC", {k("A"), k("E")})));
  EXPECT_TRUE(s.contains(fact("instc", {k("E"), k("a")})));
  EXPECT_FALSE(s.contains(fact("isarRI", {k("s"), k("r")})));
}

TEST(Rql, RoleHierarchyWithInverses) {
  const FactStore s = saturate(fixture::zoo_ontology("r isarole s- .\ns isarole t- .\nr(a, b) .\n"));
  EXPECT_TRUE(s.contains(fact("isarRR", {k("r"), k("t")})));
  EXPECT_TRUE(s.contains(fact("instr", {k("s"), k("b"), k("a")})));
  EXPECT_TRUE(s.contains(fact("instr", {k("t"), k("a"), k("b")})));
}

TEST(Rql, Violations) {
  auto inconsistent = [](const std::string& text) {
    return saturate(fixture::zoo_ontology(text)).count("inconsist") > 0;
  };
  EXPECT_TRUE(inconsistent("A disjoint B .\nA(p) .\nB(p) .\n"));
  EXPECT_TRUE(inconsistent("irrefl(r) .\nr(a, a) .\n"));
  EXPECT_TRUE(inconsistent("A disjoint exists r .\nC isa A .\nC(x) .\nr(x, y) .\n"));
  EXPECT_TRUE(inconsistent("r disjointrole s- .\nr(a, b) .\ns(b, a) .\n"));
  EXPECT_TRUE(inconsistent("a != a .\n"));
  EXPECT_TRUE(inconsistent("refl(r) .\nirrefl(r) .\nA(a) .\n"));
  EXPECT_FALSE(inconsistent("A disjoint B .\nA(p) .\nB(q) .\n"));
  EXPECT_FALSE(inconsistent("r disjointrole s- .\nr(a, b) .\ns(a, b) .\n"));
}

TEST(InterfaceSpec, Intersections) {
  const Ontology o = fixture::golden_eagle();
  const ImportSpec all = interface_spec(signature_of_ontology(o), o);
  EXPECT_EQ(all.classImports, (IriSet{zoo("Eagle"), zoo("Bird"), zoo("GoldenEagle"), zoo("EndangeredSpecies"),
                                      zoo("Species")}));
  EXPECT_TRUE(all.roleImports.empty());
  const ImportSpec some = interface_spec(IriSet{zoo("Species"), zoo("Harry")}, o);
  EXPECT_EQ(some.classImports, IriSet{zoo("Species")});
  EXPECT_TRUE(some.roleImports.empty());
  EXPECT_EQ(some.individualImports, IriSet{zoo("Harry")});

  const Ontology t = fixture::zoo_ontology("exists teaches isa Faculty .\n");
  const ImportSpec m = interface_spec(IriSet{zoo("teaches"), zoo("Faculty")}, t);
  EXPECT_EQ(m.classImports, IriSet{zoo("Faculty")});
  EXPECT_EQ(m.roleImports, IriSet{zoo("teaches")});
}
