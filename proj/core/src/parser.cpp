#include "mser/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace mser {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Tok { Name, IriRef, Var, LParen, RParen, LBrace, RBrace, Comma, Dot, Neq, Minus, Star, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '(' || c == ')' || c == ',' ||
         c == '.' || c == '<' || c == '>' || c == '{' || c == '}' || c == '"' || c == '\'';
}

const char* describe(Tok k) {
  switch (k) {
    case Tok::Name: return "name";
    case Tok::IriRef: return "IRI";
    case Tok::Var: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Neq: return "'!='";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::End: return "end of input";
  }
  return "token";
}

// Shared lexer for both formats. '#' opens a comment only at a token start,
// so IRIs like <http://x#y> and names like ex:a#b survive.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (c == '<') {
        advance();
        std::string iri;
        while (pos_ < text_.size() && text_[pos_] != '>') {
          if (text_[pos_] == '\n' || std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            throw ParseError(line_, col_, "whitespace inside IRI reference");
          }
          iri.push_back(text_[pos_]);
          advance();
        }
        if (pos_ >= text_.size()) throw ParseError(t.line, t.column, "unterminated IRI reference");
        advance();
        if (iri.empty()) throw ParseError(t.line, t.column, "empty IRI reference");
        t.kind = Tok::IriRef;
        t.text = std::move(iri);
      } else if (c == '"' || c == '\'') {
        throw ParseError(t.line, t.column,
                         "literal values are not supported (data properties and datatypes are "
                         "outside the language)");
      } else if (c == '(' || c == ')' || c == ',' || c == '.' || c == '{' || c == '}' || c == '*') {
        t.kind = c == '(' ? Tok::LParen
                 : c == ')' ? Tok::RParen
                 : c == ',' ? Tok::Comma
                 : c == '.' ? Tok::Dot
                 : c == '{' ? Tok::LBrace
                 : c == '}' ? Tok::RBrace
                            : Tok::Star;
        t.text = std::string(1, c);
        advance();
      } else if (c == '!' && peek(1) == '=') {
        t.kind = Tok::Neq;
        t.text = "!=";
        advance();
        advance();
      } else if (c == '-') {
        t.kind = Tok::Minus;
        t.text = "-";
        advance();
      } else if (c == '^' && peek(1) == '^') {
        throw ParseError(t.line, t.column, "typed literal '^^' is not supported (datatypes are outside the language)");
      } else if (c == '?' || c == '$') {
        advance();
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
          name.push_back(text_[pos_]);
          advance();
        }
        if (name.empty()) throw ParseError(t.line, t.column, "variable without a name");
        t.kind = Tok::Var;
        t.text = std::move(name);
      } else {
        std::string name;
        while (pos_ < text_.size() && !is_delim(text_[pos_])) {
          if (text_[pos_] == '!' && peek(1) == '=') break;
          if (text_[pos_] == '^' && peek(1) == '^') break;
          name.push_back(text_[pos_]);
          advance();
        }
        t.kind = Tok::Name;
        t.text = std::move(name);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Cursor over a token range with IRI resolution against a prefix scope.
class Cursor {
 public:
  Cursor(const std::vector<Token>& toks, std::size_t begin, std::size_t end, PrefixMap& prefixes)
      : toks_(toks), pos_(begin), end_(end), prefixes_(prefixes) {}

  const Token& peek(std::size_t off = 0) const {
    return pos_ + off < end_ ? toks_[pos_ + off] : toks_[end_ < toks_.size() ? end_ : toks_.size() - 1];
  }
  bool at_end() const { return pos_ >= end_; }
  bool is(Tok k, std::size_t off = 0) const { return pos_ + off < end_ && toks_[pos_ + off].kind == k; }
  bool is_word(std::string_view w, std::size_t off = 0) const {
    return is(Tok::Name, off) && toks_[pos_ + off].text == w;
  }

  const Token& take() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }

  const Token& expect(Tok k, const char* what) {
    if (!is(k)) fail(std::string("expected ") + what + ", found " + found());
    return take();
  }

  void expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "', found " + found());
    take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, msg);
  }

  std::string found() const {
    if (at_end()) return "end of line";
    const Token& t = peek();
    if (t.kind == Tok::Name || t.kind == Tok::Var) return "'" + t.text + "'";
    if (t.kind == Tok::IriRef) return "<" + t.text + ">";
    return describe(t.kind);
  }

  // Resolves a Name or IriRef token into a full IRI string.
  std::string resolve(const Token& t) const {
    if (t.kind == Tok::IriRef) return t.text;
    if (t.kind != Tok::Name) throw ParseError(t.line, t.column, std::string("expected an IRI, found ") + describe(t.kind));
    const auto colon = t.text.find(':');
    if (colon == std::string::npos) {
      if (auto it = prefixes_.find(""); it != prefixes_.end()) return it->second + t.text;
      return t.text;
    }
    const std::string prefix = t.text.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw ParseError(t.line, t.column, "undeclared prefix '" + prefix + ":'");
    return it->second + t.text.substr(colon + 1);
  }

  PrefixMap& prefixes() { return prefixes_; }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
  PrefixMap& prefixes_;
};

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// Rejects datatype vocabulary and reserved names. owl:Thing passes only when
// `thingOk` (filler of an unqualified existential).
void check_reserved(const std::string& iri, const Token& at, bool thingOk) {
  if (starts_with(iri, vocab::kXsd) || iri == std::string(vocab::kRdfs) + "Literal" ||
      iri == std::string(vocab::kRdfs) + "Datatype" ||
      iri == std::string(vocab::kOwl) + "DatatypeProperty" ||
      iri == std::string(vocab::kOwl) + "topDataProperty" ||
      iri == std::string(vocab::kOwl) + "bottomDataProperty") {
    throw ParseError(at.line, at.column,
                     "datatype or data property '" + iri + "' is not supported (data properties and "
                     "datatypes are outside the language)");
  }
  if (iri == vocab::kThing) {
    if (thingOk) return;
    throw ParseError(at.line, at.column, "owl:Thing is only allowed as the filler of an existential");
  }
  if (starts_with(iri, vocab::kOwl) || starts_with(iri, vocab::kRdf) || starts_with(iri, vocab::kRdfs)) {
    throw ParseError(at.line, at.column, "reserved vocabulary term '" + iri + "' cannot be used here");
  }
}

Iri make_iri(const std::string& s, const Token& at) {
  try {
    return Iri(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(at.line, at.column, e.what());
  }
}

bool is_iri_token(const Cursor& c, std::size_t off = 0) { return c.is(Tok::Name, off) || c.is(Tok::IriRef, off); }

// ---------------------------------------------------------------------------
// Ontology lines

class LineParser {
 public:
  explicit LineParser(Cursor& c) : c_(c) {}

  Iri iri(bool thingOk = false) {
    if (!is_iri_token(c_)) c_.fail("expected an IRI, found " + c_.found());
    const Token& t = c_.take();
    if (t.kind == Tok::Name) check_keyword(t);
    const std::string s = c_.resolve(t);
    check_reserved(s, t, thingOk);
    return make_iri(s, t);
  }

  RoleExpr role_x() {
    if (!is_iri_token(c_)) c_.fail("expected a role, found " + c_.found());
    const Token& t = c_.peek();
    std::string text = t.text;
    bool inverse = false;
    if (t.kind == Tok::Name && text.size() > 1 && text.back() == '-') {
      inverse = true;
      text.pop_back();
    }
    Token copy = t;
    copy.text = text;
    c_.take();
    if (!inverse && c_.is(Tok::Minus)) {
      c_.take();
      inverse = true;
    }
    if (copy.kind == Tok::Name) check_keyword(copy);
    const std::string s = c_.resolve(copy);
    check_reserved(s, copy, false);
    return RoleExpr{make_iri(s, copy), inverse};
  }

  BasicConcept basic() {
    if (c_.is_word("exists")) {
      c_.take();
      return ExistsRole{role_x()};
    }
    return NamedClass{iri()};
  }

  RhsConcept rhs() {
    if (c_.is_word("exists")) {
      c_.take();
      RoleExpr r = role_x();
      if (c_.is(Tok::Dot)) {
        c_.take();
        return QualifiedExists{std::move(r), iri(true)};
      }
      return QualifiedExists{std::move(r), thing()};
    }
    return NamedClass{iri()};
  }

  Axiom axiom() {
    if ((c_.is_word("refl") || c_.is_word("irrefl")) && c_.is(Tok::LParen, 1)) {
      const bool refl = c_.peek().text == "refl";
      c_.take();
      c_.take();
      Iri r = role_x_plain();
      c_.expect(Tok::RParen, "')'");
      if (refl) return Reflexive{std::move(r)};
      return Irreflexive{std::move(r)};
    }
    if (is_iri_token(c_) && c_.is(Tok::LParen, 1)) {
      Iri p = iri();
      c_.take();
      Iri a = iri();
      if (c_.is(Tok::Comma)) {
        c_.take();
        Iri b = iri();
        c_.expect(Tok::RParen, "')'");
        return RoleAssertion{std::move(p), std::move(a), std::move(b)};
      }
      c_.expect(Tok::RParen, "')' or ','");
      return ClassAssertion{std::move(p), std::move(a)};
    }
    if (is_iri_token(c_) && c_.is(Tok::Neq, 1)) {
      Iri a = iri();
      c_.take();
      Iri b = iri();
      return Different{std::move(a), std::move(b)};
    }
    // Role axioms: the operator is the second token, or the third after a
    // detached '-'.
    const std::size_t opAt = c_.is(Tok::Minus, 1) ? 2 : 1;
    if (!c_.is_word("exists") && (c_.is_word("isarole", opAt) || c_.is_word("disjointrole", opAt))) {
      RoleExpr lhs = role_x();
      const bool incl = c_.is_word("isarole");
      c_.take();
      RoleExpr rhs = role_x();
      return incl ? make_role_inclusion(lhs, rhs) : make_role_disjointness(lhs, rhs);
    }
    BasicConcept lhs = basic();
    if (c_.is_word("isa")) {
      c_.take();
      return ClassInclusion{std::move(lhs), rhs()};
    }
    if (c_.is_word("disjoint")) {
      c_.take();
      return make_class_disjointness(lhs, basic());
    }
    c_.fail("expected 'isa' or 'disjoint', found " + c_.found());
  }

 private:
  Iri role_x_plain() {
    RoleExpr r = role_x();
    if (r.inverse) c_.fail("inverse role not allowed here");
    return r.name;
  }

  void check_keyword(const Token& t) const {
    static const char* const kWords[] = {"isa", "disjoint", "isarole", "disjointrole", "exists"};
    for (const char* w : kWords) {
      if (t.text == w) throw ParseError(t.line, t.column, "keyword '" + t.text + "' used as an IRI");
    }
  }

  Cursor& c_;
};

void parse_prefix_decl(Cursor& c, bool needDot) {
  const Token& kw = c.take();
  if (!c.is(Tok::Name) || c.peek().text.empty() || c.peek().text.back() != ':' ||
      std::count(c.peek().text.begin(), c.peek().text.end(), ':') != 1) {
    c.fail("expected a prefix name ending in ':', found " + c.found());
  }
  std::string name = c.take().text;
  name.pop_back();
  if (!c.is(Tok::IriRef)) c.fail("expected <namespace IRI>, found " + c.found());
  const std::string ns = c.take().text;
  if (needDot) c.expect(Tok::Dot, "'.' after prefix declaration");
  (void)kw;
  c.prefixes()[name] = ns;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(std::max(line, 1)),
      column_(std::max(column, 1)),
      message_(message) {}

const PrefixMap& builtin_prefixes() {
  static const PrefixMap m{{"rdf", std::string(vocab::kRdf)},
                           {"rdfs", std::string(vocab::kRdfs)},
                           {"owl", std::string(vocab::kOwl)},
                           {"xsd", std::string(vocab::kXsd)}};
  return m;
}

Ontology parse_ontology(std::string_view text) {
  const std::vector<Token> toks = Lexer(text).run();
  PrefixMap prefixes = builtin_prefixes();
  std::vector<Axiom> axioms;

  std::size_t i = 0;
  const std::size_t n = toks.size() - 1;  // drop End
  while (i < n) {
    // An axiom is the token run up to the last '.' on its line.
    const int line = toks[i].line;
    std::size_t j = i;
    while (j < n && toks[j].line == line) ++j;
    if (toks[i].kind == Tok::Name && toks[i].text == "@prefix") {
      Cursor c(toks, i, j, prefixes);
      parse_prefix_decl(c, true);
      if (!c.at_end()) c.fail("unexpected " + c.found() + " after prefix declaration");
      i = j;
      continue;
    }
    if (toks[j - 1].kind != Tok::Dot) {
      const Token& last = toks[j - 1];
      throw ParseError(last.line, last.column + static_cast<int>(last.text.size()),
                       "axiom must end with '.'");
    }
    Cursor c(toks, i, j - 1, prefixes);
    LineParser lp(c);
    axioms.push_back(lp.axiom());
    if (!c.at_end()) c.fail("unexpected " + c.found());
    i = j;
  }
  return Ontology(axioms);
}

Query parse_query(std::string_view text) {
  const std::vector<Token> toks = Lexer(text).run();
  PrefixMap prefixes = builtin_prefixes();
  Cursor c(toks, 0, toks.size() - 1, prefixes);

  auto upper = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
    return s;
  };
  auto word_is = [&](std::string_view w) { return c.is(Tok::Name) && upper(c.peek().text) == w; };

  while (word_is("PREFIX") || c.is_word("@prefix")) {
    const bool turtle = c.is_word("@prefix");
    parse_prefix_decl(c, turtle);
  }
  if (!word_is("SELECT")) c.fail("expected SELECT, found " + c.found());
  const Token selectTok = c.take();
  if (word_is("DISTINCT") || word_is("REDUCED")) c.take();
  if (c.is(Tok::Star)) c.fail("SELECT * is not supported; list the variables");
  std::vector<std::string> select;
  while (c.is(Tok::Var)) select.push_back(c.take().text);
  if (select.empty()) c.fail("expected at least one variable after SELECT, found " + c.found());
  if (!word_is("WHERE")) c.fail("expected WHERE, found " + c.found());
  c.take();
  c.expect(Tok::LBrace, "'{'");

  static const char* const kUnsupported[] = {"OPTIONAL", "FILTER", "UNION", "MINUS", "GRAPH",
                                             "BIND", "VALUES", "SERVICE", "SELECT"};
  auto check_unsupported = [&]() {
    if (c.is(Tok::LBrace)) c.fail("nested group patterns are not supported");
    if (!c.is(Tok::Name)) return;
    const std::string u = upper(c.peek().text);
    for (const char* w : kUnsupported) {
      if (u == w) c.fail("unsupported SPARQL feature: " + u);
    }
  };

  auto term = [&]() -> QueryTerm {
    check_unsupported();
    if (c.is(Tok::Var)) return Variable{c.take().text};
    if (!is_iri_token(c)) c.fail("expected an IRI or variable, found " + c.found());
    const Token& t = c.take();
    const std::string s = c.resolve(t);
    check_reserved(s, t, true);
    return make_iri(s, t);
  };

  auto predicate = [&]() -> Predicate {
    check_unsupported();
    if (c.is(Tok::Var)) return Variable{c.take().text};
    if (!is_iri_token(c)) c.fail("expected a predicate, found " + c.found());
    const Token& t = c.take();
    if (t.kind == Tok::Name && t.text == "a") return Keyword::Type;
    const std::string s = c.resolve(t);
    const std::string rdfs(vocab::kRdfs);
    if (s == std::string(vocab::kRdf) + "type") return Keyword::Type;
    if (s == rdfs + "subClassOf" || s == rdfs + "SubClassOf") return Keyword::SubClassOf;
    if (s == rdfs + "subPropertyOf" || s == rdfs + "SubPropertyOf") return Keyword::SubPropertyOf;
    if (s == std::string(vocab::kOwl) + "disjointWith") return Keyword::DisjointWith;
    check_reserved(s, t, false);
    return make_iri(s, t);
  };

  std::vector<TriplePattern> patterns;
  while (!c.is(Tok::RBrace)) {
    if (c.at_end()) c.fail("unterminated WHERE clause");
    TriplePattern tp{term(), predicate(), term()};
    patterns.push_back(std::move(tp));
    if (c.is(Tok::Dot)) {
      c.take();
    } else if (!c.is(Tok::RBrace)) {
      check_unsupported();
      c.fail("expected '.' or '}', found " + c.found());
    }
  }
  c.take();
  if (patterns.empty()) c.fail("empty WHERE clause");
  while (!c.at_end()) {
    check_unsupported();
    const std::string u = c.is(Tok::Name) ? upper(c.peek().text) : "";
    if (u == "ORDER" || u == "LIMIT" || u == "OFFSET" || u == "GROUP") {
      c.fail("unsupported SPARQL feature: " + u);
    }
    c.fail("unexpected " + c.found() + " after WHERE clause");
  }
  try {
    return Query(std::move(select), std::move(patterns));
  } catch (const std::invalid_argument& e) {
    throw ParseError(selectTok.line, selectTok.column, e.what());
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_plain_local(std::string_view s, bool bare) {
  if (s.empty() || s.front() == '-' || s.back() == '-') return false;
  const bool clean = std::none_of(s.begin(), s.end(), [](char ch) {
    return is_delim(ch) || ch == '#' || ch == '!' || ch == '^' || ch == '?' || ch == '$' || ch == '*';
  });
  if (!clean || !bare) return clean;
  if (s.find(':') != std::string_view::npos) return false;
  static const char* const kWords[] = {"isa", "disjoint", "isarole", "disjointrole", "exists", "refl",
                                       "irrefl", "a", "@prefix"};
  for (const char* w : kWords) {
    if (s == w) return false;
  }
  std::string u(s);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char ch) { return std::toupper(ch); });
  static const char* const kSparql[] = {"SELECT", "WHERE", "PREFIX", "DISTINCT", "REDUCED", "OPTIONAL",
                                        "FILTER", "UNION", "MINUS", "GRAPH", "BIND", "VALUES",
                                        "SERVICE", "ORDER", "LIMIT", "OFFSET", "GROUP"};
  for (const char* w : kSparql) {
    if (u == w) return false;
  }
  return true;
}

std::string role_text(const RoleExpr& r, const PrefixMap& p) {
  return format_iri(r.name, p) + (r.inverse ? "-" : "");
}

std::string basic_text(const BasicConcept& b, const PrefixMap& p) {
  return std::visit(overloaded{[&](const NamedClass& c) { return format_iri(c.name, p); },
                               [&](const ExistsRole& e) { return "exists " + role_text(e.role, p); }},
                    b);
}

}  // namespace

std::string format_iri(const Iri& iri, const PrefixMap& prefixes) {
  const std::string& s = iri.str();
  // Longest matching namespace wins.
  const std::pair<const std::string, std::string>* best = nullptr;
  auto consider = [&](const auto& entry) {
    if (!starts_with(s, entry.second)) return;
    if (!is_plain_local(std::string_view(s).substr(entry.second.size()), false)) return;
    if (best == nullptr || entry.second.size() > best->second.size()) best = &entry;
  };
  for (const auto& e : builtin_prefixes()) consider(e);
  for (const auto& e : prefixes) consider(e);
  if (best != nullptr) return best->first + ":" + s.substr(best->second.size());
  if (!prefixes.contains("") && is_plain_local(s, true)) return s;
  return "<" + s + ">";
}

std::string format_axiom(const Axiom& a, const PrefixMap& p) {
  auto f = [&p](const Iri& i) { return format_iri(i, p); };
  return std::visit(
      overloaded{
          [&](const ClassInclusion& x) {
            std::string rhs = std::visit(
                overloaded{[&](const NamedClass& c) { return f(c.name); },
                           [&](const QualifiedExists& q) {
                             std::string out = "exists " + role_text(q.role, p);
                             if (!is_thing(q.filler)) out += "." + f(q.filler);
                             return out;
                           }},
                x.rhs);
            return basic_text(x.lhs, p) + " isa " + rhs + " .";
          },
          [&](const ClassDisjointness& x) {
            return basic_text(x.lhs, p) + " disjoint " + basic_text(x.rhs, p) + " .";
          },
          [&](const RoleInclusion& x) { return f(x.lhs) + " isarole " + role_text(x.rhs, p) + " ."; },
          [&](const RoleDisjointness& x) {
            return f(x.lhs) + " disjointrole " + role_text(x.rhs, p) + " .";
          },
          [&](const Reflexive& x) { return "refl(" + f(x.role) + ") ."; },
          [&](const Irreflexive& x) { return "irrefl(" + f(x.role) + ") ."; },
          [&](const ClassAssertion& x) { return f(x.cls) + "(" + f(x.individual) + ") ."; },
          [&](const RoleAssertion& x) {
            return f(x.role) + "(" + f(x.subject) + ", " + f(x.object) + ") .";
          },
          [&](const Different& x) { return f(x.a) + " != " + f(x.b) + " ."; },
      },
      a);
}

std::string format_ontology(const Ontology& o, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [name, ns] : prefixes) {
    if (builtin_prefixes().contains(name)) continue;
    out << "@prefix " << name << ": <" << ns << "> .\n";
  }
  for (const auto& a : o.tbox()) out << format_axiom(a, prefixes) << '\n';
  for (const auto& a : o.abox()) out << format_axiom(a, prefixes) << '\n';
  return out.str();
}

std::string format_query(const Query& q, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [name, ns] : prefixes) {
    if (builtin_prefixes().contains(name)) continue;
    out << "PREFIX " << name << ": <" << ns << ">\n";
  }
  auto term = [&](const QueryTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
    return format_iri(std::get<Iri>(t), prefixes);
  };
  out << "SELECT";
  for (const auto& v : q.select_vars()) out << " ?" << v;
  out << " WHERE {";
  for (const auto& tp : q.patterns()) {
    out << ' ' << term(tp.subject) << ' ';
    std::visit(overloaded{[&](Keyword k) {
                            switch (k) {
                              case Keyword::Type: out << "rdf:type"; break;
                              case Keyword::SubClassOf: out << "rdfs:subClassOf"; break;
                              case Keyword::SubPropertyOf: out << "rdfs:subPropertyOf"; break;
                              case Keyword::DisjointWith: out << "owl:disjointWith"; break;
                            }
                          },
                          [&](const Iri& i) { out << format_iri(i, prefixes); },
                          [&](const Variable& v) { out << '?' << v.name; }},
               tp.predicate);
    out << ' ' << term(tp.object) << " .";
  }
  out << " }\n";
  return out.str();
}

}  // namespace mser
