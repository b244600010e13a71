#include "mser/translate.hpp"

#include <cctype>
#include <map>

namespace mser {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Term c(const Iri& i) { return Term::constant(i.str()); }
Term v(const char* n) { return Term::var(n); }
Term thing_term() { return Term::constant(std::string(vocab::kThing)); }

Atom mk(std::string p, std::vector<Term> args) { return Atom{std::move(p), std::move(args)}; }

char sort_of(const BasicConcept& b) {
  return std::visit(overloaded{[](const NamedClass&) { return 'C'; },
                               [](const ExistsRole& e) { return e.role.inverse ? 'I' : 'R'; }},
                    b);
}

Term arg_of(const BasicConcept& b) {
  return std::visit(overloaded{[](const NamedClass& n) { return c(n.name); },
                               [](const ExistsRole& e) { return c(e.role.name); }},
                    b);
}

// isacXY(s, a) when y is C, isacXY(s, a, f) otherwise.
Atom isac(char x, char y, Term s, Term a, Term f = Term::var("F")) {
  std::string p = std::string("isac") + x + y;
  if (y == 'C') return mk(std::move(p), {std::move(s), std::move(a)});
  return mk(std::move(p), {std::move(s), std::move(a), std::move(f)});
}

// ξ ⊑ ¬ζ with ξ of sort y, ζ of sort z. There is no disjcCR; that shape is
// stored as disjcRC with the arguments swapped.
Atom disj(char y, char z, Term a, Term b) {
  if (y == 'C' && z == 'R') return mk("disjcRC", {std::move(b), std::move(a)});
  return mk(std::string("disjc") + y + z, {std::move(a), std::move(b)});
}

char flip(char s) { return s == 'R' ? 'I' : 'R'; }

constexpr char kSorts[] = {'C', 'R', 'I'};
constexpr char kRoleSorts[] = {'R', 'I'};

struct RuleBuilder {
  std::vector<Rule> out;
  void add(std::string label, Atom head, std::vector<Atom> body) {
    out.push_back(Rule{std::move(head), std::move(body), std::move(label)});
  }
};

// How a class-like expression of sort s holds for element x.
Atom member(char s, Term b, Term x, const char* other) {
  if (s == 'C') return mk(pred::kInstc, {std::move(b), std::move(x)});
  if (s == 'R') return mk(pred::kInstr, {std::move(b), std::move(x), v(other)});
  return mk(pred::kInstr, {std::move(b), v(other), std::move(x)});
}

}  // namespace

Atom tau_axiom(const Axiom& a) {
  return std::visit(
      overloaded{
          [](const ClassInclusion& x) {
            const char lx = sort_of(x.lhs);
            return std::visit(
                overloaded{[&](const NamedClass& n) { return isac(lx, 'C', arg_of(x.lhs), c(n.name)); },
                           [&](const QualifiedExists& q) {
                             return isac(lx, q.role.inverse ? 'I' : 'R', arg_of(x.lhs), c(q.role.name),
                                         c(q.filler));
                           }},
                x.rhs);
          },
          [](const ClassDisjointness& x) {
            return disj(sort_of(x.lhs), sort_of(x.rhs), arg_of(x.lhs), arg_of(x.rhs));
          },
          [](const RoleInclusion& x) {
            return mk(x.rhs.inverse ? "isarRI" : "isarRR", {c(x.lhs), c(x.rhs.name)});
          },
          [](const RoleDisjointness& x) {
            return mk(x.rhs.inverse ? "disjrRI" : "disjrRR", {c(x.lhs), c(x.rhs.name)});
          },
          [](const Reflexive& x) { return mk("refl", {c(x.role)}); },
          [](const Irreflexive& x) { return mk("irrefl", {c(x.role)}); },
          [](const ClassAssertion& x) { return mk(pred::kInstc, {c(x.cls), c(x.individual)}); },
          [](const RoleAssertion& x) {
            return mk(pred::kInstr, {c(x.role), c(x.subject), c(x.object)});
          },
          [](const Different& x) { return mk(pred::kDiff, {c(x.a), c(x.b)}); },
      },
      a);
}

std::set<Atom> tau_ontology(const Ontology& o) {
  std::set<Atom> out;
  for (const auto& a : o.tbox()) out.insert(tau_axiom(a));
  for (const auto& a : o.abox()) out.insert(tau_axiom(a));
  for (const auto& i : o.vocab().individuals) out.insert(mk(pred::kIndividual, {c(i)}));
  for (const auto& i : o.vocab().classes) out.insert(mk(pred::kClassname, {c(i)}));
  for (const auto& i : o.vocab().objectProperties) out.insert(mk(pred::kRolename, {c(i)}));
  return out;
}

std::string datalog_var(const std::string& name) {
  std::string out = name;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  if (out.empty() || std::isupper(static_cast<unsigned char>(out[0])) == 0) out = "V_" + name;
  return out;
}

Rule tau_query(const Query& q) {
  // Capitalizing can merge ?x and ?X; suffix later arrivals.
  std::map<std::string, std::string> names;
  std::set<std::string> used;
  auto var_for = [&](const std::string& n) {
    if (auto it = names.find(n); it != names.end()) return it->second;
    std::string base = datalog_var(n);
    std::string cand = base;
    for (int k = 2; used.contains(cand); ++k) cand = base + "_" + std::to_string(k);
    used.insert(cand);
    names.emplace(n, cand);
    return cand;
  };
  auto term = [&](const QueryTerm& t) {
    if (const auto* x = std::get_if<Variable>(&t)) return Term::var(var_for(x->name));
    return c(std::get<Iri>(t));
  };

  Rule r;
  r.label = "query";
  for (const auto& tp : q.patterns()) {
    Term s = term(tp.subject);
    Term o = term(tp.object);
    std::visit(overloaded{[&](Keyword k) {
                            switch (k) {
                              case Keyword::Type: r.body.push_back(mk(pred::kInstc, {o, s})); break;
                              case Keyword::SubClassOf: r.body.push_back(mk("isacCC", {s, o})); break;
                              case Keyword::SubPropertyOf: r.body.push_back(mk("isarRR", {s, o})); break;
                              case Keyword::DisjointWith: r.body.push_back(mk("disjcCC", {s, o})); break;
                            }
                          },
                          [&](const Iri& p) { r.body.push_back(mk(pred::kInstr, {c(p), s, o})); },
                          [&](const Variable& p) {
                            r.body.push_back(mk(pred::kInstr, {Term::var(var_for(p.name)), s, o}));
                          }},
               tp.predicate);
  }
  r.head.pred = pred::kQuery;
  for (const auto& sv : q.select_vars()) r.head.args.push_back(Term::var(var_for(sv)));
  return r;
}

std::vector<Rule> rql_rules(const RqlOptions& opts) {
  RuleBuilder b;
  const Term S = v("S"), M = v("M"), A = v("A"), F = v("F"), F0 = v("F0"), G = v("G");
  const Term P = v("P"), Q = v("Q"), R = v("R"), B = v("B"), B2 = v("B2"), C = v("C"), D = v("D");
  const Term X = v("X"), Y = v("Y");

  // F1: chaining through a named class.
  for (char x : kSorts)
    for (char y : kSorts)
      b.add(std::string("F1.") + x + "C.C" + y, isac(x, y, S, A, F), {isac(x, 'C', S, M), isac('C', y, M, A, F)});

  // F2: chaining through an existential's role. Only the unqualified form
  // matters here, and FT guarantees it exists for every qualified one.
  for (char x : kSorts)
    for (char via : kRoleSorts)
      for (char y : kSorts)
        b.add(std::string("F2.") + x + via + "." + via + y, isac(x, y, S, A, F),
              {isac(x, via, S, P, thing_term()), isac(via, y, P, A, F)});
  for (char x : kSorts)
    for (char via : kRoleSorts)
      b.add(std::string("FT.") + x + via, isac(x, via, S, P, thing_term()), {isac(x, via, S, P, F0)});

  // Filler weakening and role lifting.
  for (char x : kSorts) {
    for (char via : kRoleSorts) {
      b.add(std::string("FW.") + x + via, isac(x, via, S, P, G), {isac(x, via, S, P, F), mk("isacCC", {F, G})});
      b.add(std::string("RL.") + x + via + ".RR", isac(x, via, S, Q, F), {isac(x, via, S, P, F), mk("isarRR", {P, Q})});
      b.add(std::string("RL.") + x + via + ".RI", isac(x, flip(via), S, Q, F),
            {isac(x, via, S, P, F), mk("isarRI", {P, Q})});
    }
  }

  // Role inclusions induce unqualified existential inclusions.
  b.add("RE.RR.R", isac('R', 'R', P, Q, thing_term()), {mk("isarRR", {P, Q})});
  b.add("RE.RR.I", isac('I', 'I', P, Q, thing_term()), {mk("isarRR", {P, Q})});
  b.add("RE.RI.R", isac('R', 'I', P, Q, thing_term()), {mk("isarRI", {P, Q})});
  b.add("RE.RI.I", isac('I', 'R', P, Q, thing_term()), {mk("isarRI", {P, Q})});

  // F3: role hierarchy.
  b.add("F3.RR.RR", mk("isarRR", {P, R}), {mk("isarRR", {P, Q}), mk("isarRR", {Q, R})});
  b.add("F3.RR.RI", mk("isarRI", {P, R}), {mk("isarRR", {P, Q}), mk("isarRI", {Q, R})});
  b.add("F3.RI.RR", mk("isarRI", {P, R}), {mk("isarRI", {P, Q}), mk("isarRR", {Q, R})});
  b.add("F3.RI.RI", mk("isarRR", {P, R}), {mk("isarRI", {P, Q}), mk("isarRI", {Q, R})});

  // F4: instance propagation.
  b.add("F4.instc", mk(pred::kInstc, {D, X}), {mk(pred::kInstc, {C, X}), mk("isacCC", {C, D})});
  b.add("F4.domain", mk(pred::kInstc, {C, X}), {mk(pred::kInstr, {R, X, Y}), mk("isacRC", {R, C})});
  b.add("F4.range", mk(pred::kInstc, {C, Y}), {mk(pred::kInstr, {R, X, Y}), mk("isacIC", {R, C})});
  b.add("F4.instr.RR", mk(pred::kInstr, {Q, X, Y}), {mk(pred::kInstr, {P, X, Y}), mk("isarRR", {P, Q})});
  b.add("F4.instr.RI", mk(pred::kInstr, {Q, Y, X}), {mk(pred::kInstr, {P, X, Y}), mk("isarRI", {P, Q})});
  b.add("F4.refl", mk(pred::kInstr, {R, X, X}), {mk("refl", {R}), mk(pred::kIndividual, {X})});
  b.add("F4.refl.RR", mk("refl", {Q}), {mk("refl", {P}), mk("isarRR", {P, Q})});
  b.add("F4.refl.RI", mk("refl", {Q}), {mk("refl", {P}), mk("isarRI", {P, Q})});

  // A reflexive role gives every element itself as a witness.
  b.add("SW.CR", isac('C', 'R', C, P, C), {mk("refl", {P}), mk(pred::kClassname, {C})});
  b.add("SW.CI", isac('C', 'I', C, P, C), {mk("refl", {P}), mk(pred::kClassname, {C})});
  for (char x : kRoleSorts)
    for (char y : kRoleSorts)
      b.add(std::string("SW.") + x + y, isac(x, y, Q, P, thing_term()), {mk("refl", {P}), mk(pred::kRolename, {Q})});

  // F5: negative closure. Symmetry first; disjcRC is its own mirror.
  for (char y : kSorts) {
    for (char z : kSorts) {
      if ((y == 'C' && z == 'R') || (y == 'R' && z == 'C')) continue;
      b.add(std::string("F5.sym.") + y + z, disj(z, y, B, A), {disj(y, z, A, B)});
    }
  }
  b.add("F5.sym.rRR", mk("disjrRR", {B, A}), {mk("disjrRR", {A, B})});
  b.add("F5.sym.rRI", mk("disjrRI", {B, A}), {mk("disjrRI", {A, B})});

  // ξ ⊑ B and B ⊑ ¬B2 give ξ ⊑ ¬B2; qualified existentials read unqualified.
  for (char x : kSorts)
    for (char y : kSorts)
      for (char z : kSorts)
        b.add(std::string("F5.ls.") + x + y + z, disj(x, z, S, B2), {isac(x, y, S, B, F), disj(y, z, B, B2)});

  b.add("F5.lsr.RR.RR", mk("disjrRR", {P, R}), {mk("isarRR", {P, Q}), mk("disjrRR", {Q, R})});
  b.add("F5.lsr.RR.RI", mk("disjrRI", {P, R}), {mk("isarRR", {P, Q}), mk("disjrRI", {Q, R})});
  b.add("F5.lsr.RI.RR", mk("disjrRI", {P, R}), {mk("isarRI", {P, Q}), mk("disjrRR", {Q, R})});
  b.add("F5.lsr.RI.RI", mk("disjrRR", {P, R}), {mk("isarRI", {P, Q}), mk("disjrRI", {Q, R})});
  b.add("F5.irrefl.RR", mk("irrefl", {P}), {mk("isarRR", {P, Q}), mk("irrefl", {Q})});
  b.add("F5.irrefl.RI", mk("irrefl", {P}), {mk("isarRI", {P, Q}), mk("irrefl", {Q})});

  // Empty roles.
  b.add("F5.empty.rR", mk("disjcRR", {P, P}), {mk("disjrRR", {P, P})});
  b.add("F5.empty.rI", mk("disjcII", {P, P}), {mk("disjrRR", {P, P})});
  b.add("F5.empty.RI", mk("disjcII", {P, P}), {mk("disjcRR", {P, P})});
  b.add("F5.empty.IR", mk("disjcRR", {P, P}), {mk("disjcII", {P, P})});
  b.add("F5.empty.Rr", mk("disjrRR", {P, P}), {mk("disjcRR", {P, P})});

  // Unsatisfiable fillers make the subject unsatisfiable.
  for (char x : kSorts) {
    for (char via : kRoleSorts) {
      const std::string tag = std::string(1, x) + via;
      b.add("F5.fu.CC." + tag, disj(x, x, S, S), {isac(x, via, S, P, F), mk("disjcCC", {F, F})});
      if (via == 'R') {
        b.add("F5.fu.IC." + tag, disj(x, x, S, S), {isac(x, via, S, P, F), mk("disjcIC", {P, F})});
      } else {
        b.add("F5.fu.RC." + tag, disj(x, x, S, S), {isac(x, via, S, P, F), mk("disjcRC", {P, F})});
      }
    }
  }

  // Violations.
  const Atom inc = mk(pred::kInconsist, {});
  for (char y : kSorts) {
    for (char z : kSorts) {
      if (y == 'C' && z == 'R') continue;
      b.add(std::string("F5.v.") + y + z, inc, {disj(y, z, A, B), member(y, A, X, "Y"), member(z, B, X, "Z")});
    }
  }
  b.add("F5.v.rRR", inc, {mk("disjrRR", {P, Q}), mk(pred::kInstr, {P, X, Y}), mk(pred::kInstr, {Q, X, Y})});
  b.add("F5.v.rRI", inc, {mk("disjrRI", {P, Q}), mk(pred::kInstr, {P, X, Y}), mk(pred::kInstr, {Q, Y, X})});
  b.add("F5.v.irrefl", inc, {mk("irrefl", {P}), mk(pred::kInstr, {P, X, X})});
  b.add("F5.v.diff", inc, {mk(pred::kDiff, {X, X})});

  if (opts.subsumptionReflexivity) {
    b.add("F6.class", mk("isacCC", {C, C}), {mk(pred::kClassname, {C})});
    b.add("F6.role", mk("isarRR", {R, R}), {mk(pred::kRolename, {R})});
  }
  if (!opts.omitRules.empty()) {
    std::erase_if(b.out, [&](const Rule& r) { return opts.omitRules.contains(r.label); });
  }
  return std::move(b.out);
}

ImportSpec interface_spec(const IriSet& n, const Ontology& o) {
  ImportSpec s;
  const Vocabulary& voc = o.vocab();
  for (const auto& i : n) {
    if (voc.classes.contains(i)) s.classImports.insert(i);
    if (voc.objectProperties.contains(i)) s.roleImports.insert(i);
    if (voc.individuals.contains(i)) s.individualImports.insert(i);
  }
  return s;
}

}  // namespace mser
