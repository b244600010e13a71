#include <gtest/gtest.h>

#include "chase.hpp"
#include "fixtures.hpp"
#include "mser/evaluate.hpp"
#include "mser/translate.hpp"
#include "random_kb.hpp"

using namespace mser;
using mser::fixture::chase;
using mser::fixture::zoo;

// Sanity checks on the test oracle itself, against hand-derived results.

TEST(Chase, GoldenEagle) {
  const auto r = chase(fixture::golden_eagle());
  EXPECT_FALSE(r.inconsistent);
  EXPECT_TRUE(r.instc.contains({zoo("Bird").str(), zoo("Harry").str()}));
  EXPECT_TRUE(r.instc.contains({zoo("Species").str(), zoo("GoldenEagle").str()}));
  EXPECT_FALSE(r.instc.contains({zoo("Species").str(), zoo("Harry").str()}));
  EXPECT_EQ(r.instc.size(), 5u);
  EXPECT_TRUE(r.isacCC.contains({zoo("GoldenEagle").str(), zoo("Bird").str()}));
  EXPECT_TRUE(r.isacCC.contains({zoo("Bird").str(), zoo("Bird").str()}));
  EXPECT_EQ(r.isacCC.size(), 5u + 3u + 1u);
}

TEST(Chase, ExistentialsAndInverses) {
  const auto r = chase(fixture::zoo_ontology(
      "A isa exists r.B .\nexists r- isa C .\nB isa D .\nr isarole s- .\nexists s isa E .\nA(a) .\n"));
  EXPECT_FALSE(r.inconsistent);
  EXPECT_TRUE(r.instc.contains({zoo("A").str(), zoo("a").str()}));
  EXPECT_FALSE(r.instc.contains({zoo("C").str(), zoo("a").str()}));
  EXPECT_TRUE(r.isacCC.contains({zoo("B").str(), zoo("D").str()}));
  EXPECT_FALSE(r.isacCC.contains({zoo("A").str(), zoo("E").str()}));
}

TEST(Chase, DomainThroughInverseInclusion) {
  const auto r = chase(fixture::zoo_ontology("r isarole s- .\nexists s- isa E .\nr(a, b) .\n"));
  EXPECT_TRUE(r.instr.contains({zoo("s").str(), zoo("b").str(), zoo("a").str()}));
  EXPECT_TRUE(r.instc.contains({zoo("E").str(), zoo("a").str()}));
}

TEST(Chase, Clashes) {
  EXPECT_TRUE(chase(fixture::load_ontology("professors_inconsistent.qlf")).inconsistent);
  EXPECT_TRUE(chase(fixture::load_ontology("irreflexive.qlf")).inconsistent);
  // The clash sits on an anonymous element.
  EXPECT_TRUE(chase(fixture::zoo_ontology("A isa exists r.B .\nB disjoint C .\nexists r- isa C .\nA(a) .\n"))
                  .inconsistent);
  EXPECT_FALSE(chase(fixture::zoo_ontology("A disjoint B .\nA(a) .\nB(b) .\n")).inconsistent);
}

TEST(Chase, ReflexiveRoles) {
  const auto r = chase(fixture::zoo_ontology("refl(knows) .\nexists knows isa Agent .\nC isa D .\nC(a) .\n"));
  EXPECT_TRUE(r.instr.contains({zoo("knows").str(), zoo("a").str(), zoo("a").str()}));
  EXPECT_TRUE(r.instc.contains({zoo("Agent").str(), zoo("a").str()}));
  EXPECT_TRUE(r.isacCC.contains({zoo("C").str(), zoo("Agent").str()}));
}

TEST(RandomKb, RespectsLimits) {
  std::mt19937_64 rng(3);
  fixture::RandomKbConfig cfg;
  for (int i = 0; i < 50; ++i) {
    const Ontology o = fixture::random_ontology(rng, cfg);
    EXPECT_LE(o.size(), cfg.maxAxioms);
    EXPECT_LE(signature_of_ontology(o).size(), 8u);
    const Query q = fixture::random_query(rng, cfg);
    EXPECT_LE(q.patterns().size(), 3u);
    EXPECT_FALSE(q.select_vars().empty());
  }
}

TEST(Chase, CatchesDroppedSaturationRules) {
  for (const char* label : {"F1.CC.CC", "F4.instc", "F2.CR.RC"}) {
    std::mt19937_64 rng(977);
    fixture::RandomKbConfig cfg;
    RqlOptions mutant;
    mutant.omitRules = {label};
    int caught = 0;
    for (int i = 0; i < 500 && caught == 0; ++i) {
      const Ontology o = fixture::random_ontology(rng, cfg);
      const auto ch = chase(o);
      if (ch.inconsistent) continue;
      FactStore s;
      const auto facts = tau_ontology(o);
      s.add(facts.begin(), facts.end());
      Program p;
      p.rules = rql_rules(mutant);
      evaluate(p, s);
      const auto& voc = o.vocab();
      std::set<std::pair<std::string, std::string>> isa;
      std::set<std::pair<std::string, std::string>> inst;
      for (const auto& t : s.tuples("isacCC"))
        if (voc.classes.contains(Iri(t[0])) && voc.classes.contains(Iri(t[1]))) isa.emplace(t[0], t[1]);
      for (const auto& t : s.tuples(pred::kInstc))
        if (voc.classes.contains(Iri(t[0])) && voc.individuals.contains(Iri(t[1]))) inst.emplace(t[0], t[1]);
      if (isa != ch.isacCC || inst != ch.instc) ++caught;
    }
    EXPECT_GT(caught, 0) << label;
  }
}
