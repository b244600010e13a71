#include "mser/hybrid.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mser/locality.hpp"
#include "mser/magic.hpp"

namespace mser {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

FactStore saturate(const Ontology& o, const RqlOptions& opts, const EvalOptions& eval = {}) {
  FactStore store;
  const auto facts = tau_ontology(o);
  store.add(facts.begin(), facts.end());
  Program p;
  p.rules = rql_rules(opts);
  evaluate(p, store, eval);
  return store;
}

Program with_query(const RqlOptions& opts, const Query& q) {
  Program p;
  p.rules = rql_rules(opts);
  p.rules.push_back(tau_query(q));
  p.queryPred = pred::kQuery;
  return p;
}

Atom free_goal(const Rule& queryRule) {
  Atom g{queryRule.head.pred, {}};
  for (std::size_t i = 0; i < queryRule.head.args.size(); ++i) g.args.push_back(Term::var("G" + std::to_string(i)));
  return g;
}

const Rule& query_rule(const Program& p, const std::string& pred) {
  for (const auto& r : p.rules)
    if (r.head.pred == pred) return r;
  throw std::logic_error("program has no rule for " + pred);
}

}  // namespace

std::string_view to_string(QueryFn f) { return f == QueryFn::All ? "All" : "Mod"; }
std::string_view to_string(InterfaceMode m) { return m == InterfaceMode::Complete ? "complete" : "literal"; }

std::optional<QueryFn> parse_query_fn(std::string_view text) {
  const std::string s = lower(text);
  if (s == "all") return QueryFn::All;
  if (s == "mod") return QueryFn::Mod;
  return std::nullopt;
}

std::optional<InterfaceMode> parse_interface_mode(std::string_view text) {
  const std::string s = lower(text);
  if (s == "complete") return InterfaceMode::Complete;
  if (s == "literal") return InterfaceMode::Literal;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Oracle::Oracle(const Ontology& o, const RqlOptions& opts, const EvalOptions& eval)
    : saturated_(saturate(o, opts, eval)) {}

IriSet Oracle::class_extension(const Iri& c) const {
  IriSet out;
  for (const auto& t : saturated_.tuples(pred::kInstc))
    if (t[0] == c.str()) out.emplace(t[1]);
  return out;
}

std::set<std::pair<Iri, Iri>> Oracle::role_extension(const Iri& r) const {
  std::set<std::pair<Iri, Iri>> out;
  for (const auto& t : saturated_.tuples(pred::kInstr))
    if (t[0] == r.str()) out.emplace(Iri(t[1]), Iri(t[2]));
  return out;
}

std::vector<Atom> Oracle::entailed_atoms(const IriSet& n) const {
  std::set<std::string> allowed;
  for (const auto& i : n) allowed.insert(i.str());
  allowed.insert(std::string(vocab::kThing));
  std::vector<Atom> out;
  for (auto& a : saturated_.atoms()) {
    if (a.pred == pred::kInconsist || a.pred == pred::kQuery) continue;
    if (std::all_of(a.args.begin(), a.args.end(), [&](const Term& t) { return allowed.contains(t.text); })) {
      out.push_back(std::move(a));
    }
  }
  return out;
}

IriSet oracle_class_extension(const Ontology& o, const Iri& c) { return Oracle(o).class_extension(c); }

std::set<std::pair<Iri, Iri>> oracle_role_extension(const Ontology& o, const Iri& r) {
  return Oracle(o).role_extension(r);
}

// ---------------------------------------------------------------------------

bool has_meta_variable(const Query& q) {
  for (const auto& tp : q.patterns()) {
    if (std::holds_alternative<Variable>(tp.predicate)) return true;
    const auto* k = std::get_if<Keyword>(&tp.predicate);
    if (k == nullptr) continue;
    if (std::holds_alternative<Variable>(tp.object)) return true;
    if (*k != Keyword::Type && std::holds_alternative<Variable>(tp.subject)) return true;
  }
  return false;
}

HybridKB assemble(const Ontology& o, const Query& q, Variant v, QueryFn f, const AssembleOptions& opts) {
  if (v == Variant::E_AT && f == QueryFn::Mod) {
    throw std::invalid_argument("E_AT has an empty ontology side; the Mod query function does not apply");
  }
  HybridKB k;
  k.variant = v;
  k.queryFn = f;
  k.interface = opts.interface;
  k.rql = opts.rql;

  auto t0 = Clock::now();
  Partition part = split(o, v);
  k.ontoSide = std::move(part.ontoSide);
  k.splitMillis = millis_since(t0);

  t0 = Clock::now();
  if (v != Variant::E_AT) {
    if (f == QueryFn::All) {
      k.interfaceSignature = signature_of_ontology(k.ontoSide);
    } else if (opts.interface == InterfaceMode::Literal) {
      k.interfaceSignature = extract_module(signature_of_query(q, k.ontoSide), k.ontoSide).finalSignature;
    } else {
      const IriSet seed = has_meta_variable(q) ? signature_of_ontology(o) : signature_of_query(q, o);
      k.interfaceSignature = extract_module(seed, o).finalSignature;
    }
    k.imports = interface_spec(k.interfaceSignature, k.ontoSide);
  }
  k.lmeMillis = millis_since(t0);

  t0 = Clock::now();
  k.facts = tau_ontology(part.datalogSide);
  k.rules = with_query(opts.rql, q);
  k.queryPred = pred::kQuery;
  k.header = q.select_vars();
  k.tauMillis = millis_since(t0);
  return k;
}

std::vector<Atom> import_facts(const HybridKB& k, const EvalOptions& eval) {
  std::vector<Atom> out;
  if (k.variant == Variant::E_AT || k.ontoSide.empty()) return out;
  const Oracle oracle(k.ontoSide, k.rql, eval);
  if (k.interface == InterfaceMode::Complete) {
    IriSet n = k.imports.classImports;
    n.insert(k.imports.roleImports.begin(), k.imports.roleImports.end());
    n.insert(k.imports.individualImports.begin(), k.imports.individualImports.end());
    return oracle.entailed_atoms(n);
  }
  for (const auto& c : k.imports.classImports)
    for (const auto& x : oracle.class_extension(c))
      out.push_back(Atom{pred::kInstc, {Term::constant(c.str()), Term::constant(x.str())}});
  for (const auto& r : k.imports.roleImports)
    for (const auto& [x, y] : oracle.role_extension(r))
      out.push_back(Atom{pred::kInstr, {Term::constant(r.str()), Term::constant(x.str()), Term::constant(y.str())}});
  return out;
}

AnswerTable answer(const HybridKB& k, bool magic, AnswerStats* stats, const EvalOptions& eval) {
  AnswerStats local;
  AnswerStats& st = stats != nullptr ? *stats : local;

  FactStore store;
  store.add(k.facts.begin(), k.facts.end());
  auto t0 = Clock::now();
  const auto imported = import_facts(k, eval);
  store.add(imported.begin(), imported.end());
  st.importedFacts = imported.size();
  st.importMillis = millis_since(t0);
  st.factsIn = store.count();

  t0 = Clock::now();
  const Program prog = magic ? magic_transform(k.rules, free_goal(query_rule(k.rules, k.queryPred))) : k.rules;
  st.eval = evaluate(prog, store, eval);
  st.evalMillis = millis_since(t0);
  return answers(store, k.queryPred, k.header);
}

AnswerTable baseline_answer(const Ontology& o, const Query& q, const RqlOptions& opts) {
  FactStore store;
  const auto facts = tau_ontology(o);
  store.add(facts.begin(), facts.end());
  evaluate(with_query(opts, q), store);
  return answers(store, pred::kQuery, q.select_vars());
}

bool consistency_check(const Ontology& o) {
  return saturate(o, RqlOptions{}).count(pred::kInconsist) == 0;
}

}  // namespace mser
