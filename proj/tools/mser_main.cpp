// mser: hybrid query answering over OWL 2 QL ontologies with meta-modelling.

#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mser/driver.hpp"
#include "mser/generator.hpp"
#include "mser/hybrid.hpp"
#include "mser/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitTimeout = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool on_off(const std::string& flag, const std::string& value) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw ConfigError(flag + " expects on or off, got '" + value + "'");
}

mser::Variant variant_of(const std::string& s) {
  if (auto v = mser::parse_variant(s)) return *v;
  throw ConfigError("unknown variant '" + s + "' (expected e-at, a-t, nat-cat or nat-cact)");
}

mser::QueryFn query_fn_of(const std::string& s) {
  if (auto f = mser::parse_query_fn(s)) return *f;
  throw ConfigError("unknown query function '" + s + "' (expected all or mod)");
}

mser::InterfaceMode interface_of(const std::string& s) {
  if (auto m = mser::parse_interface_mode(s)) return *m;
  throw ConfigError("unknown interface mode '" + s + "' (expected complete or literal)");
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Common {
  std::string reflexivity = "on";
  std::string interface = "complete";
  double timeoutSecs = -1;
  std::vector<std::string> dropRules;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--subsumption-reflexivity", c.reflexivity, "Derive C isa C for every class (on|off)")
      ->capture_default_str();
  cmd->add_option("--interface", c.interface, "Interface between ontology and rule side (complete|literal)")
      ->capture_default_str();
  cmd->add_option("--timeout-secs", c.timeoutSecs, "Per-run wall-clock limit in seconds");
  cmd->add_option("--drop-rule", c.dropRules, "Omit a rule by label for one variant, VARIANT:LABEL (fault injection)");
}

// Applies --drop-rule entries that target this variant.
std::set<std::string> dropped_for(const Common& c, mser::Variant v) {
  std::set<std::string> out;
  for (const auto& d : c.dropRules) {
    const auto colon = d.find(':');
    if (colon == std::string::npos) throw ConfigError("--drop-rule expects VARIANT:LABEL, got '" + d + "'");
    if (variant_of(d.substr(0, colon)) == v) out.insert(d.substr(colon + 1));
  }
  return out;
}

mser::RunOptions base_options(const Common& c) {
  mser::RunOptions o;
  o.reflexivity = on_off("--subsumption-reflexivity", c.reflexivity);
  o.interface = interface_of(c.interface);
  if (c.timeoutSecs >= 0) o.timeoutSecs = c.timeoutSecs;
  return o;
}

// ---------------------------------------------------------------------------

struct QueryArgs {
  std::string ontology;
  std::string query;
  std::string variant = "nat-cact";
  std::string queryFn = "mod";
  std::string magic = "off";
  std::string out;
  std::string stats;
  Common common;
};

int cmd_query(const QueryArgs& a) {
  mser::RunOptions opts = base_options(a.common);
  opts.variant = variant_of(a.variant);
  opts.queryFn = query_fn_of(a.queryFn);
  opts.magic = on_off("--magic", a.magic);
  opts.omitRules = dropped_for(a.common, opts.variant);
  if (opts.variant == mser::Variant::E_AT && opts.queryFn == mser::QueryFn::Mod) {
    throw ConfigError("variant e-at only admits --query-fn all");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const mser::Ontology o = mser::parse_ontology(mser::read_file(a.ontology));
  const mser::Query q = mser::parse_query(mser::read_file(a.query));
  const double parseMillis = millis_since(t0);

  mser::RunResult r = mser::run_query(o, q, opts);
  r.stats.parseMillis = parseMillis;
  if (r.status == mser::RunStatus::Inconsistent) {
    std::cerr << "mser: ontology is inconsistent; no answers produced\n";
    return kExitInconsistent;
  }
  if (r.status == mser::RunStatus::TimedOut) {
    std::cerr << "mser: timed out\n";
    return kExitTimeout;
  }
  const std::string csv = mser::answers_to_csv(*r.answers);
  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
  } else {
    mser::write_file(a.out, csv);
  }
  if (!a.stats.empty()) mser::write_file(a.stats, mser::stats_to_json(r.stats));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> ontologies;
  std::vector<std::string> queries;
  std::vector<std::string> variants;
  std::string magic = "off";
  std::string out;
  unsigned jobs = 1;
  Common common;
};

int cmd_bench(const BenchArgs& a) {
  const mser::RunOptions base = base_options(a.common);

  std::vector<bool> magics;
  if (a.magic == "both") {
    magics = {false, true};
  } else {
    magics = {on_off("--magic", a.magic)};
  }
  std::set<mser::Variant> only;
  for (const auto& v : a.variants) only.insert(variant_of(v));

  std::vector<mser::RunOptions> configs;
  for (const auto& [v, f] : mser::admissible_combinations()) {
    if (!only.empty() && !only.contains(v)) continue;
    for (bool m : magics) {
      mser::RunOptions o = base;
      o.variant = v;
      o.queryFn = f;
      o.magic = m;
      o.omitRules = dropped_for(a.common, v);
      configs.push_back(o);
    }
  }

  std::vector<mser::BenchCase> cases;
  for (const auto& op : a.ontologies) {
    const auto t0 = std::chrono::steady_clock::now();
    const mser::Ontology o = mser::parse_ontology(mser::read_file(op));
    const double ontoMillis = millis_since(t0);
    for (const auto& qp : a.queries) {
      const auto t1 = std::chrono::steady_clock::now();
      mser::Query q = mser::parse_query(mser::read_file(qp));
      cases.push_back(mser::BenchCase{op, qp, o, std::move(q), ontoMillis + millis_since(t1)});
    }
  }

  const mser::BenchReport report = mser::run_bench(cases, configs, a.jobs == 0 ? 1 : a.jobs);
  const std::string csv = mser::bench_to_csv(report);
  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
  } else {
    mser::write_file(a.out, csv);
  }
  if (report.mismatches > 0) {
    std::cerr << "mser: " << report.mismatches << " run(s) disagree with the reference answers\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_generate(const mser::GenConfig& g, const std::string& out) {
  if (g.metaProbability < 0 || g.metaProbability > 1) throw ConfigError("--meta must lie in [0,1]");
  const std::string text = mser::generate_text(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    mser::write_file(out, text);
  }
  return kExitOk;
}

int cmd_check(const std::string& path) {
  const mser::Ontology o = mser::parse_ontology(mser::read_file(path));
  if (mser::consistency_check(o)) {
    std::cout << "consistent\n";
    return kExitOk;
  }
  std::cout << "inconsistent\n";
  return kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid query answering for OWL 2 QL with meta-modelling"};
  app.require_subcommand(1);

  QueryArgs qa;
  auto* query = app.add_subcommand("query", "Answer a query over an ontology");
  query->add_option("ontology", qa.ontology, "Ontology file")->required();
  query->add_option("query", qa.query, "Query file")->required();
  query->add_option("--variant", qa.variant, "e-at|a-t|nat-cat|nat-cact")->capture_default_str();
  query->add_option("--query-fn", qa.queryFn, "all|mod")->capture_default_str();
  query->add_option("--magic", qa.magic, "Magic-set rewriting (on|off)")->capture_default_str();
  query->add_option("--out", qa.out, "Answer CSV path (default stdout)");
  query->add_option("--stats", qa.stats, "Statistics JSON path");
  add_common(query, qa.common);

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run every admissible variant and cross-check the answers");
  bench->add_option("--ontology", ba.ontologies, "Ontology file (repeatable)")->required();
  bench->add_option("--query", ba.queries, "Query file (repeatable)")->required();
  bench->add_option("--variant", ba.variants, "Restrict to these variants (repeatable)");
  bench->add_option("--magic", ba.magic, "on|off|both")->capture_default_str();
  bench->add_option("--out", ba.out, "Report CSV path (default stdout)");
  bench->add_option("--jobs", ba.jobs, "Parallel runs")->capture_default_str();
  add_common(bench, ba.common);
  ba.common.timeoutSecs = 3600;

  mser::GenConfig gc;
  std::string genOut;
  auto* gen = app.add_subcommand("generate", "Write a seeded random ontology");
  gen->add_option("--classes", gc.numClasses)->capture_default_str();
  gen->add_option("--properties", gc.numProperties)->capture_default_str();
  gen->add_option("--individuals", gc.numIndividuals)->capture_default_str();
  gen->add_option("--tbox", gc.numTBox)->capture_default_str();
  gen->add_option("--abox", gc.numABox)->capture_default_str();
  gen->add_option("--meta", gc.metaProbability, "Probability that an individual position holds a class or property")
      ->capture_default_str();
  gen->add_option("--seed", gc.seed)->capture_default_str();
  gen->add_option("--out", genOut, "Output path (default stdout)");

  std::string checkPath;
  auto* check = app.add_subcommand("check", "Consistency check only");
  check->add_option("ontology", checkPath, "Ontology file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (query->parsed()) return cmd_query(qa);
    if (bench->parsed()) return cmd_bench(ba);
    if (gen->parsed()) return cmd_generate(gc, genOut);
    if (check->parsed()) return cmd_check(checkPath);
  } catch (const mser::ParseError& e) {
    std::cerr << "mser: parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "mser: " << e.what() << "\n";
  }
  return kExitError;
}
