#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mser {

/// A constant (an IRI or a reserved token) or a variable.
struct Term {
  enum class Kind { Const, Var };
  Kind kind = Kind::Const;
  std::string text;

  static Term constant(std::string s) { return Term{Kind::Const, std::move(s)}; }
  static Term var(std::string s) { return Term{Kind::Var, std::move(s)}; }
  bool is_var() const noexcept { return kind == Kind::Var; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_ground() const;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Rule {
  Atom head;
  std::vector<Atom> body;
  std::string label;  // optional tag, not part of identity

  friend bool operator==(const Rule& a, const Rule& b) { return a.head == b.head && a.body == b.body; }
};

struct Program {
  std::vector<Rule> rules;
  std::optional<std::string> queryPred;
  /// Predicates introduced by rewriting; excluded from derived-fact counts.
  std::set<std::string> auxiliaryPreds;
};

/// Throws std::invalid_argument if a head variable is missing from the body.
void check_range_restricted(const Rule& r);

/// Predicates occurring in some rule head.
std::set<std::string> defined_predicates(const Program& p);

// Text form: pred(a, "http://x", V). for facts, head :- b1, b2. for rules.
// Constants print bare when they are lowercase identifiers, quoted otherwise.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Rule& r);
std::string format_program(const Program& p);

/// Parses the text form above; '%' starts a line comment.
Program parse_program(std::string_view text);
Atom parse_atom(std::string_view text);

}  // namespace mser
