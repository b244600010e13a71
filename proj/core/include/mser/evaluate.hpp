#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mser/fact_store.hpp"
#include "mser/model.hpp"
#include "mser/rules.hpp"

namespace mser {

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("evaluation deadline exceeded") {}
};

struct EvalOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EvalStats {
  std::size_t iterations = 0;
  /// New facts of ordinary predicates.
  std::size_t derivedFacts = 0;
  /// New facts of the program's auxiliary predicates.
  std::size_t auxiliaryFacts = 0;
  /// Head instantiations, duplicates included.
  std::size_t ruleFirings = 0;
  double wallMillis = 0;
};

/// Semi-naive least fixpoint of `p` over `store`, in place. Throws Timeout
/// past the deadline and std::invalid_argument for rules that are not
/// range-restricted.
EvalStats evaluate(const Program& p, FactStore& store, const EvalOptions& opts = {});

/// Index-free naive fixpoint; reference implementation for tests.
EvalStats evaluate_naive(const Program& p, FactStore& store);

/// Rows of `pred` as IRIs under `header`.
AnswerTable answers(const FactStore& store, const std::string& pred, const std::vector<std::string>& header);

}  // namespace mser
