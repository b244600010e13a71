#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mser/locality.hpp"

using namespace mser;
using mser::fixture::zoo;

TEST(BottomLocal, Rules) {
  EXPECT_TRUE(bottom_local(ClassInclusion{NamedClass{zoo("EndangeredSpecies")}, NamedClass{zoo("Species")}},
                           IriSet{zoo("Species")}));
  EXPECT_FALSE(bottom_local(ClassAssertion{zoo("EndangeredSpecies"), zoo("GoldenEagle")}, IriSet{}));
  EXPECT_TRUE(bottom_local(ClassDisjointness{NamedClass{zoo("FullProfessor")}, NamedClass{zoo("AssociateProfessor")}},
                           IriSet{zoo("FullProfessor")}));
  EXPECT_FALSE(bottom_local(
      ClassDisjointness{NamedClass{zoo("FullProfessor")}, NamedClass{zoo("AssociateProfessor")}},
      IriSet{zoo("FullProfessor"), zoo("AssociateProfessor")}));
  EXPECT_FALSE(bottom_local(Reflexive{zoo("r")}, IriSet{}));
  EXPECT_TRUE(bottom_local(Irreflexive{zoo("r")}, IriSet{}));
  EXPECT_TRUE(bottom_local(RoleInclusion{zoo("r"), {zoo("s"), false}}, IriSet{zoo("s")}));
  EXPECT_FALSE(bottom_local(RoleInclusion{zoo("r"), {zoo("s"), false}}, IriSet{zoo("r")}));
  EXPECT_TRUE(bottom_local(RoleDisjointness{zoo("r"), {zoo("s"), true}}, IriSet{zoo("r")}));
  EXPECT_FALSE(bottom_local(ClassInclusion{ExistsRole{{zoo("r"), true}}, NamedClass{zoo("A")}}, IriSet{zoo("r")}));
}

TEST(ExtractModule, SpeciesSeedPullsEverything) {
  const Ontology o = fixture::golden_eagle();
  const Module m = extract_module(IriSet{zoo("Species")}, o);
  EXPECT_EQ(m.axioms, o.axiom_set());
  EXPECT_EQ(m.finalSignature, signature_of_ontology(o));
}

TEST(ExtractModule, EmptySeed) {
  const Module m = extract_module(IriSet{}, fixture::zoo_ontology("A isa B .\n"));
  EXPECT_TRUE(m.axioms.empty());
  EXPECT_TRUE(m.finalSignature.empty());
}

TEST(ExtractModule, ExistentialLeftSide) {
  const Ontology o = fixture::zoo_ontology("exists teaches isa Faculty .\nStudent isa Person .\n");
  const Module m = extract_module(IriSet{zoo("teaches")}, o);
  EXPECT_EQ(m.axioms, AxiomSet{o.tbox()[0]});
  EXPECT_EQ(m.finalSignature, (IriSet{zoo("teaches"), zoo("Faculty")}));
}

TEST(ExtractModule, SeedOutsideOntologyIsKept) {
  const Module m = extract_module(IriSet{zoo("Unused")}, fixture::zoo_ontology("A isa B .\n"));
  EXPECT_TRUE(m.axioms.empty());
  EXPECT_EQ(m.finalSignature, IriSet{zoo("Unused")});
}

TEST(ExtractModule, QualifiedFillerKeepsAxiomNonLocal) {
  // A isa exists r.B is local only when A is outside the signature.
  const Ontology o = fixture::zoo_ontology("A isa exists r.B .\nB isa C .\n");
  const Module m = extract_module(IriSet{zoo("A")}, o);
  EXPECT_EQ(m.axioms, o.axiom_set());
  EXPECT_EQ(m.finalSignature, (IriSet{zoo("A"), zoo("r"), zoo("B"), zoo("C")}));
}
