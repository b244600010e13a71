#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mser/hybrid.hpp"
#include "mser/model.hpp"
#include "mser/partition.hpp"

namespace mser {

struct RunOptions {
  Variant variant = Variant::NAT_CACT;
  QueryFn queryFn = QueryFn::Mod;
  bool magic = false;
  bool reflexivity = true;
  InterfaceMode interface = InterfaceMode::Complete;
  std::optional<double> timeoutSecs;
  std::set<std::string> omitRules;
};

struct RunStats {
  Variant variant = Variant::E_AT;
  QueryFn queryFn = QueryFn::All;
  bool magic = false;
  double parseMillis = 0;
  double splitMillis = 0;
  double lmeMillis = 0;
  double tauMillis = 0;
  double importMillis = 0;
  double evalMillis = 0;
  std::size_t factsIn = 0;
  std::size_t factsDerived = 0;
  std::size_t answerCount = 0;
};

enum class RunStatus { Ok, Inconsistent, TimedOut };

struct RunResult {
  RunStatus status = RunStatus::Ok;
  std::optional<AnswerTable> answers;
  RunStats stats;
};

/// Consistency gate, assembly and evaluation for one configuration.
/// Throws std::invalid_argument for inadmissible configurations.
RunResult run_query(const Ontology& o, const Query& q, const RunOptions& opts);

/// The seven admissible (variant, query function) pairs.
std::vector<std::pair<Variant, QueryFn>> admissible_combinations();

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
/// Header of variable names, then one row per answer in sorted order.
std::string answers_to_csv(const AnswerTable& t);
std::string stats_to_json(const RunStats& s);

struct BenchCase {
  std::string ontologyName;
  std::string queryName;
  Ontology ontology;
  Query query;
  double parseMillis = 0;
};

struct BenchRun {
  std::size_t caseIndex = 0;
  RunOptions options;
};

struct BenchRow {
  std::string ontologyName;
  std::string queryName;
  RunOptions options;
  RunResult result;
  bool mismatch = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t mismatches = 0;
};

/// Every case under every option set, on up to `jobs` threads. Completed
/// runs that share (case, reflexivity, interface) must agree; rows that
/// differ from the group's reference (E_AT/All when present) are flagged.
BenchReport run_bench(const std::vector<BenchCase>& cases, const std::vector<RunOptions>& options,
                      std::size_t jobs = 1);

std::string bench_to_csv(const BenchReport& r);

}  // namespace mser
