#include "mser/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mser {

bool Atom::is_ground() const {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_var(); });
}

void check_range_restricted(const Rule& r) {
  std::set<std::string> bodyVars;
  for (const auto& a : r.body)
    for (const auto& t : a.args)
      if (t.is_var()) bodyVars.insert(t.text);
  for (const auto& t : r.head.args) {
    if (t.is_var() && !bodyVars.contains(t.text)) {
      throw std::invalid_argument("rule is not range-restricted: variable " + t.text +
                                  " occurs only in the head of " + to_string(r));
    }
  }
}

std::set<std::string> defined_predicates(const Program& p) {
  std::set<std::string> out;
  for (const auto& r : p.rules) out.insert(r.head.pred);
  return out;
}

namespace {

bool bare_constant(const std::string& s) {
  if (s.empty() || std::islower(static_cast<unsigned char>(s[0])) == 0) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; });
}

}  // namespace

std::string to_string(const Term& t) {
  if (t.is_var() || bare_constant(t.text)) return t.text;
  std::string out = "\"";
  for (char c : t.text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.pred;
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(a.args[i]);
  }
  return out + ")";
}

std::string to_string(const Rule& r) {
  std::string out = to_string(r.head);
  if (!r.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(r.body[i]);
    }
  }
  return out + ".";
}

std::string format_program(const Program& p) {
  std::ostringstream out;
  for (const auto& r : p.rules) {
    if (!r.label.empty()) out << "% " << r.label << '\n';
    out << to_string(r) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

class DatalogReader {
 public:
  explicit DatalogReader(std::string_view s) : s_(s) {}

  bool done() {
    skip();
    return pos_ >= s_.size();
  }

  Rule rule() {
    Rule r;
    r.head = atom();
    skip();
    if (consume(":-")) {
      do {
        r.body.push_back(atom());
        skip();
      } while (consume(","));
    }
    expect('.');
    check_range_restricted(r);
    return r;
  }

  Atom atom() {
    skip();
    Atom a;
    a.pred = ident();
    if (a.pred.empty()) fail("expected a predicate name");
    skip();
    if (consume("(")) {
      do {
        a.args.push_back(term());
        skip();
      } while (consume(","));
      expect(')');
    }
    return a;
  }

 private:
  Term term() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '"') {
      ++pos_;
      std::string out;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        out.push_back(s_[pos_++]);
      }
      expect('"');
      return Term::constant(std::move(out));
    }
    std::string id = ident();
    if (id.empty()) fail("expected a term");
    if (std::isupper(static_cast<unsigned char>(id[0])) != 0 || id[0] == '_') return Term::var(std::move(id));
    return Term::constant(std::move(id));
  }

  std::string ident() {
    std::string out;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '_')) {
      out.push_back(s_[pos_++]);
    }
    return out;
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) {
        ++pos_;
      } else if (s_[pos_] == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool consume(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("datalog syntax error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) {
  DatalogReader in(text);
  Program p;
  while (!in.done()) p.rules.push_back(in.rule());
  return p;
}

Atom parse_atom(std::string_view text) {
  DatalogReader in(text);
  Atom a = in.atom();
  if (!in.done()) throw std::invalid_argument("trailing input after atom");
  return a;
}

}  // namespace mser
