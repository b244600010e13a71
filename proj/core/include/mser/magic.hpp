#pragma once

#include <string>

#include "mser/rules.hpp"

namespace mser {

/// Name of the magic predicate for `pred` under adornment `ad` ("bf...").
std::string magic_name(const std::string& pred, const std::string& ad);

/// Magic-set rewriting for `goal` (constants bound, variables free).
/// Original predicate names are kept; each reachable rule is guarded by the
/// magic atom of its head adornment and unreachable rules are dropped.
/// Body atoms are ordered most-bound-first for sideways information passing.
/// Throws std::invalid_argument if no rule defines the goal predicate.
Program magic_transform(const Program& p, const Atom& goal);

}  // namespace mser
