#include <gtest/gtest.h>

#include "mser/generator.hpp"
#include "mser/parser.hpp"
#include "mser/partition.hpp"

using namespace mser;

TEST(Generator, NoMetaWithoutPunning) {
  GenConfig g;
  g.seed = 1;
  EXPECT_TRUE(meta_elements(generate_ontology(g)).empty());
}

TEST(Generator, MetaWithFullPunning) {
  GenConfig g;
  g.seed = 1;
  g.metaProbability = 1.0;
  g.numABox = 5;
  EXPECT_FALSE(meta_elements(generate_ontology(g)).empty());
}

TEST(Generator, Deterministic) {
  GenConfig g;
  g.seed = 99;
  g.metaProbability = 0.2;
  EXPECT_EQ(generate_text(g), generate_text(g));
  GenConfig h = g;
  h.seed = 100;
  EXPECT_NE(generate_text(g), generate_text(h));
}

TEST(Generator, ParsesBackAndHonoursCounts) {
  GenConfig g;
  g.numTBox = 40;
  g.numABox = 70;
  g.metaProbability = 0.1;
  const Ontology o = generate_ontology(g);
  EXPECT_EQ(o.tbox().size(), 40u);
  EXPECT_EQ(o.abox().size(), 70u);
  EXPECT_EQ(parse_ontology(generate_text(g)), o);
}

TEST(Generator, RejectsBadConfig) {
  GenConfig g;
  g.metaProbability = 1.5;
  EXPECT_THROW(generate_ontology(g), std::invalid_argument);
  GenConfig h;
  h.numClasses = 0;
  EXPECT_THROW(generate_ontology(h), std::invalid_argument);
}

TEST(Generator, EmptyCounts) {
  GenConfig g;
  g.numTBox = 0;
  g.numABox = 0;
  EXPECT_TRUE(generate_ontology(g).empty());
}
