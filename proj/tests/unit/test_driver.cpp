#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "mser/driver.hpp"

using namespace mser;
using mser::fixture::zoo;

namespace {

std::vector<RunOptions> admissible(bool reflexivity, bool magic) {
  std::vector<RunOptions> out;
  for (const auto& [v, f] : admissible_combinations()) {
    RunOptions o;
    o.variant = v;
    o.queryFn = f;
    o.reflexivity = reflexivity;
    o.magic = magic;
    out.push_back(o);
  }
  return out;
}

BenchCase eagle_case() {
  return BenchCase{"golden_eagle.qlf", "golden_eagle.rq", fixture::golden_eagle(),
                   fixture::load_query("golden_eagle.rq"), 0.0};
}

}  // namespace

TEST(Csv, FieldQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, Answers) {
  AnswerTable t({"x"});
  t.insert({zoo("b")});
  t.insert({zoo("a")});
  EXPECT_EQ(answers_to_csv(t), "x\n" + zoo("a").str() + "\n" + zoo("b").str() + "\n");
}

TEST(Json, StatsFields) {
  RunStats s;
  s.variant = Variant::NAT_CACT;
  s.queryFn = QueryFn::Mod;
  s.answerCount = 4;
  const auto j = nlohmann::json::parse(stats_to_json(s));
  for (const char* key : {"variant", "queryFn", "magic", "parseMillis", "splitMillis", "lmeMillis", "tauMillis",
                          "importMillis", "evalMillis", "factsIn", "factsDerived", "answerCount"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["variant"], "NAT_CACT");
  EXPECT_EQ(j["answerCount"], 4);
}

TEST(RunQuery, GoldenEagleAndGate) {
  RunOptions o;
  o.reflexivity = false;
  const RunResult r = run_query(fixture::golden_eagle(), fixture::load_query("golden_eagle.rq"), o);
  ASSERT_EQ(r.status, RunStatus::Ok);
  EXPECT_EQ(r.answers->size(), 4u);
  EXPECT_EQ(r.stats.answerCount, 4u);
  EXPECT_GT(r.stats.factsIn, 0u);

  const RunResult bad =
      run_query(fixture::load_ontology("professors_inconsistent.qlf"), fixture::load_query("golden_eagle.rq"), o);
  EXPECT_EQ(bad.status, RunStatus::Inconsistent);
  EXPECT_FALSE(bad.answers.has_value());
}

TEST(RunQuery, ZeroTimeout) {
  RunOptions o;
  o.timeoutSecs = 0.0;
  const RunResult r = run_query(fixture::golden_eagle(), fixture::load_query("golden_eagle.rq"), o);
  EXPECT_EQ(r.status, RunStatus::TimedOut);
}

TEST(Admissible, SevenCombinations) {
  const auto c = admissible_combinations();
  EXPECT_EQ(c.size(), 7u);
  for (const auto& [v, f] : c) EXPECT_FALSE(v == Variant::E_AT && f == QueryFn::Mod);
}

TEST(Bench, AgreementOnFixture) {
  const BenchReport r = run_bench({eagle_case()}, admissible(false, false), 3);
  EXPECT_EQ(r.rows.size(), 7u);
  EXPECT_EQ(r.mismatches, 0u);
  for (const auto& row : r.rows) EXPECT_EQ(row.result.stats.answerCount, 4u);
}

TEST(Bench, TimeoutZeroFlagsAll) {
  auto opts = admissible(false, false);
  for (auto& o : opts) o.timeoutSecs = 0.0;
  const BenchReport r = run_bench({eagle_case()}, opts);
  for (const auto& row : r.rows) EXPECT_EQ(row.result.status, RunStatus::TimedOut);
  const std::string csv = bench_to_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
}

TEST(Bench, MutationDetected) {
  auto opts = admissible(false, false);
  for (auto& o : opts)
    if (o.variant == Variant::A_T) o.omitRules = {"F1.CC.CC"};
  const BenchReport r = run_bench({eagle_case()}, opts);
  EXPECT_GT(r.mismatches, 0u);
}

TEST(Bench, MagicEconomyOnBoundQuery) {
  const BenchCase c{"golden_eagle.qlf", "species.rq", fixture::golden_eagle(), fixture::load_query("species.rq"), 0};
  auto off = admissible(true, false);
  auto on = admissible(true, true);
  off.insert(off.end(), on.begin(), on.end());
  const BenchReport r = run_bench({c}, off, 2);
  EXPECT_EQ(r.mismatches, 0u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_LE(r.rows[7 + i].result.stats.factsDerived, r.rows[i].result.stats.factsDerived)
        << to_string(r.rows[i].options.variant) << "/" << to_string(r.rows[i].options.queryFn);
  }
}

TEST(Bench, CsvIsDeterministicInAnswers) {
  RunOptions o;
  o.reflexivity = false;
  const auto a = run_query(fixture::golden_eagle(), fixture::load_query("golden_eagle.rq"), o);
  const auto b = run_query(fixture::golden_eagle(), fixture::load_query("golden_eagle.rq"), o);
  EXPECT_EQ(answers_to_csv(*a.answers), answers_to_csv(*b.answers));
}
