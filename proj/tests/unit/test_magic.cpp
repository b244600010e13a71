#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mser/evaluate.hpp"
#include "mser/magic.hpp"
#include "mser/translate.hpp"

using namespace mser;

namespace {

const char* kPath =
    "path(X, Y) :- edge(X, Y).\n"
    "path(X, Z) :- edge(X, Y), path(Y, Z).\n";

FactStore chain_graph() {
  // a -> b -> c, plus an unrelated component x -> y -> z -> w.
  FactStore s;
  for (const char* f : {"edge(a, b)", "edge(b, c)", "edge(x, y)", "edge(y, z)", "edge(z, w)"}) s.add(parse_atom(f));
  return s;
}

std::set<std::vector<std::string>> tuples_from(const FactStore& s, const std::string& pred, const std::string& first) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : s.tuples(pred))
    if (t[0] == first) out.insert(t);
  return out;
}

}  // namespace

TEST(Magic, Names) { EXPECT_EQ(magic_name("path", "bf"), "m_path_bf"); }

TEST(Magic, BoundGoalRestrictsDerivation) {
  const Program p = parse_program(kPath);
  const Program m = magic_transform(p, parse_atom("path(a, Y)"));

  FactStore plain = chain_graph();
  const EvalStats sp = evaluate(p, plain);
  FactStore magic = chain_graph();
  const EvalStats sm = evaluate(m, magic);

  EXPECT_EQ(tuples_from(magic, "path", "a"), tuples_from(plain, "path", "a"));
  // Nothing reachable only from the other component is derived.
  EXPECT_TRUE(tuples_from(magic, "path", "x").empty());
  EXPECT_LT(sm.derivedFacts, sp.derivedFacts);
  EXPECT_EQ(sm.derivedFacts, 3u);  // path(a,b), path(a,c), path(b,c)
}

TEST(Magic, FreeGoalKeepsAnswers) {
  const Program p = parse_program(kPath);
  const Program m = magic_transform(p, parse_atom("path(X, Y)"));
  FactStore plain = chain_graph();
  FactStore magic = chain_graph();
  evaluate(p, plain);
  evaluate(m, magic);
  EXPECT_EQ(plain.tuples("path"), magic.tuples("path"));
}

TEST(Magic, UndefinedGoalRejected) {
  EXPECT_THROW(magic_transform(parse_program(kPath), parse_atom("edge(a, Y)")), std::invalid_argument);
}

TEST(Magic, RqlQueryOnGoldenEagle) {
  const Ontology o = fixture::golden_eagle();
  const Query q = fixture::zoo_query("SELECT ?x WHERE { ?x rdf:type :Species }");
  Program p;
  p.rules = rql_rules();
  p.rules.push_back(tau_query(q));
  const auto facts = tau_ontology(o);

  FactStore plain;
  plain.add(facts.begin(), facts.end());
  evaluate(p, plain);

  const Rule qr = tau_query(q);
  const Program m = magic_transform(p, qr.head);
  FactStore magic;
  magic.add(facts.begin(), facts.end());
  evaluate(m, magic);

  EXPECT_EQ(answers(plain, "q", {"x"}), answers(magic, "q", {"x"}));
  EXPECT_EQ(answers(magic, "q", {"x"}).size(), 1u);
}

TEST(Magic, RandomProgramsAgreeOnGoal) {
  // Oracle: the unrewritten program, filtered to the goal's bindings.
  std::mt19937_64 rng(7);
  const std::vector<std::string> consts{"a", "b", "c"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::vector<std::string> programs{
      kPath,
      "sg(X, X) :- node(X).\nsg(X, Y) :- edge(XP, X), sg(XP, YP), edge(YP, Y).\n",
      "r(X, Y) :- edge(X, Y).\nr(X, Y) :- r(Y, X).\ns(X, Z) :- r(X, Y), r(Y, Z), node(Z).\n",
  };
  for (int round = 0; round < 60; ++round) {
    FactStore base;
    for (int i = 0; i < 6; ++i)
      base.add(Atom{"edge", {Term::constant(consts[pick(3)]), Term::constant(consts[pick(3)])}});
    for (const auto& c : consts) base.add(Atom{"node", {Term::constant(c)}});
    const Program p = parse_program(programs[round % programs.size()]);
    const Rule& last = p.rules.back();
    Atom goal{last.head.pred, {Term::constant(consts[pick(3)]), Term::var("G")}};

    FactStore plain = base;
    evaluate(p, plain);
    FactStore magic = base;
    evaluate(magic_transform(p, goal), magic);
    EXPECT_EQ(tuples_from(plain, goal.pred, goal.args[0].text), tuples_from(magic, goal.pred, goal.args[0].text))
        << round;
  }
}
