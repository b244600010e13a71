#include <benchmark/benchmark.h>

#include "mser/evaluate.hpp"
#include "mser/generator.hpp"
#include "mser/hybrid.hpp"
#include "mser/parser.hpp"
#include "mser/translate.hpp"

using namespace mser;

namespace {

GenConfig config(std::int64_t abox) {
  GenConfig g;
  g.numClasses = 60;
  g.numProperties = 10;
  g.numIndividuals = static_cast<std::size_t>(abox / 5 + 1);
  g.numTBox = 80;
  g.numABox = static_cast<std::size_t>(abox);
  g.metaProbability = 0.05;
  g.seed = 11;
  return g;
}

Query bound_query() {
  return parse_query("PREFIX ex: <" + std::string(kGenNamespace) + ">\nSELECT ?x WHERE { ?x a ex:C3 }");
}

void BM_Parse(benchmark::State& st) {
  const std::string text = generate_text(config(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(parse_ontology(text));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Parse)->Arg(1000)->Arg(5000);

void BM_Saturate(benchmark::State& st) {
  const auto facts = tau_ontology(generate_ontology(config(st.range(0))));
  Program p;
  p.rules = rql_rules();
  for (auto _ : st) {
    FactStore s;
    s.add(facts.begin(), facts.end());
    benchmark::DoNotOptimize(evaluate(p, s));
  }
}
BENCHMARK(BM_Saturate)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_Answer(benchmark::State& st) {
  const Ontology o = generate_ontology(config(2000));
  const HybridKB k = assemble(o, bound_query(), Variant::NAT_CACT, QueryFn::Mod);
  const bool magic = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(answer(k, magic));
}
BENCHMARK(BM_Answer)->Arg(0)->Arg(1)->ArgName("magic")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
