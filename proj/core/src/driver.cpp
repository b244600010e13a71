#include "mser/driver.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace mser {

RunResult run_query(const Ontology& o, const Query& q, const RunOptions& opts) {
  RunResult res;
  res.stats.variant = opts.variant;
  res.stats.queryFn = opts.queryFn;
  res.stats.magic = opts.magic;

  EvalOptions eval;
  if (opts.timeoutSecs) {
    eval.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(std::max(0.0, *opts.timeoutSecs)));
  }

  AssembleOptions ao;
  ao.interface = opts.interface;
  ao.rql.subsumptionReflexivity = opts.reflexivity;
  ao.rql.omitRules = opts.omitRules;
  const HybridKB k = assemble(o, q, opts.variant, opts.queryFn, ao);

  try {
    if (eval.deadline && std::chrono::steady_clock::now() >= *eval.deadline) throw Timeout();
    if (!consistency_check(o)) {
      res.status = RunStatus::Inconsistent;
      return res;
    }
    res.stats.splitMillis = k.splitMillis;
    res.stats.lmeMillis = k.lmeMillis;
    res.stats.tauMillis = k.tauMillis;
    AnswerStats as;
    res.answers = answer(k, opts.magic, &as, eval);
    res.stats.importMillis = as.importMillis;
    res.stats.evalMillis = as.evalMillis;
    res.stats.factsIn = as.factsIn;
    res.stats.factsDerived = as.eval.derivedFacts;
    res.stats.answerCount = res.answers->size();
  } catch (const Timeout&) {
    res.status = RunStatus::TimedOut;
    res.answers.reset();
  }
  return res;
}

std::vector<std::pair<Variant, QueryFn>> admissible_combinations() {
  std::vector<std::pair<Variant, QueryFn>> out{{Variant::E_AT, QueryFn::All}};
  for (Variant v : {Variant::A_T, Variant::NAT_CAT, Variant::NAT_CACT})
    for (QueryFn f : {QueryFn::All, QueryFn::Mod}) out.emplace_back(v, f);
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
  if (!out) throw std::runtime_error("error writing " + p.string());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string answers_to_csv(const AnswerTable& t) {
  std::string out;
  auto line = [&out](const auto& cells, auto get) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += csv_field(get(cells[i]));
    }
    out.push_back('\n');
  };
  line(t.header(), [](const std::string& s) { return s; });
  for (const auto& row : t.rows()) line(row, [](const Iri& i) { return i.str(); });
  return out;
}

std::string stats_to_json(const RunStats& s) {
  nlohmann::ordered_json j;
  j["variant"] = to_string(s.variant);
  j["queryFn"] = to_string(s.queryFn);
  j["magic"] = s.magic;
  j["parseMillis"] = s.parseMillis;
  j["splitMillis"] = s.splitMillis;
  j["lmeMillis"] = s.lmeMillis;
  j["tauMillis"] = s.tauMillis;
  j["importMillis"] = s.importMillis;
  j["evalMillis"] = s.evalMillis;
  j["factsIn"] = s.factsIn;
  j["factsDerived"] = s.factsDerived;
  j["answerCount"] = s.answerCount;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

BenchReport run_bench(const std::vector<BenchCase>& cases, const std::vector<RunOptions>& options,
                      std::size_t jobs) {
  std::vector<BenchRun> runs;
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (const auto& o : options) runs.push_back(BenchRun{c, o});

  BenchReport report;
  report.rows.resize(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      const BenchCase& bc = cases[runs[i].caseIndex];
      BenchRow& row = report.rows[i];
      row.ontologyName = bc.ontologyName;
      row.queryName = bc.queryName;
      row.options = runs[i].options;
      row.result = run_query(bc.ontology, bc.query, row.options);
      row.result.stats.parseMillis = bc.parseMillis;
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, runs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  using Key = std::tuple<std::size_t, bool, InterfaceMode>;
  std::map<Key, std::size_t> reference;
  auto is_baseline = [](const BenchRow& r) {
    return r.options.variant == Variant::E_AT && !r.options.magic && r.options.omitRules.empty();
  };
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const BenchRow& r = report.rows[i];
    if (r.result.status != RunStatus::Ok) continue;
    const Key key{runs[i].caseIndex, r.options.reflexivity, r.options.interface};
    auto it = reference.find(key);
    if (it == reference.end()) {
      reference.emplace(key, i);
    } else if (is_baseline(r) && !is_baseline(report.rows[it->second])) {
      it->second = i;
    }
  }
  for (std::size_t i = 0; i < runs.size(); ++i) {
    BenchRow& r = report.rows[i];
    if (r.result.status != RunStatus::Ok) continue;
    const Key key{runs[i].caseIndex, r.options.reflexivity, r.options.interface};
    const BenchRow& ref = report.rows[reference.at(key)];
    r.mismatch = *r.result.answers != *ref.result.answers;
    if (r.mismatch) ++report.mismatches;
  }
  return report;
}

std::string bench_to_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "ontology,query,variant,queryFn,magic,reflexivity,interface,status,parseMillis,splitMillis,"
         "lmeMillis,tauMillis,importMillis,evalMillis,factsIn,factsDerived,answerCount,timedOut,mismatch\n";
  for (const auto& row : r.rows) {
    const RunStats& s = row.result.stats;
    const char* status = row.result.status == RunStatus::Ok             ? "ok"
                         : row.result.status == RunStatus::Inconsistent ? "inconsistent"
                                                                        : "timeout";
    out << csv_field(row.ontologyName) << ',' << csv_field(row.queryName) << ',' << to_string(row.options.variant)
        << ',' << to_string(row.options.queryFn) << ',' << (row.options.magic ? "on" : "off") << ','
        << (row.options.reflexivity ? "on" : "off") << ',' << to_string(row.options.interface) << ',' << status
        << ',' << s.parseMillis << ',' << s.splitMillis << ',' << s.lmeMillis << ',' << s.tauMillis << ','
        << s.importMillis << ',' << s.evalMillis << ',' << s.factsIn << ',' << s.factsDerived << ','
        << s.answerCount << ',' << (row.result.status == RunStatus::TimedOut ? 1 : 0) << ','
        << (row.mismatch ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace mser
