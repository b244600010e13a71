#include "mser/evaluate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace mser {

namespace {

using Clock = std::chrono::steady_clock;

struct Arg {
  bool var = false;
  std::uint32_t id = 0;  // var slot or symbol
};

enum class Range { Old, Delta, Full };

struct Step {
  std::size_t rel = 0;
  std::uint32_t mask = 0;
  std::vector<Arg> key;                                  // first two masked positions
  std::vector<std::pair<std::size_t, Arg>> checks;       // remaining masked positions
  std::vector<std::pair<std::size_t, std::uint32_t>> binds;
  std::vector<std::pair<std::size_t, std::size_t>> same;  // repeated fresh variable
  Range range = Range::Full;
};

struct Plan {
  std::size_t deltaAtom = 0;
  std::vector<Step> steps;
};

struct CompiledRule {
  std::size_t head = 0;
  std::vector<Arg> headArgs;
  std::vector<std::size_t> bodyRels;
  std::vector<Plan> plans;
  std::size_t nvars = 0;
};

struct Watermark {
  std::size_t start = 0;
  std::size_t end = 0;
};

class Engine {
 public:
  Engine(const Program& p, FactStore& store, const EvalOptions& opts)
      : store_(store), opts_(opts) {
    for (const auto& r : p.rules) compile(r);
    for (const auto& name : p.auxiliaryPreds) auxNames_.insert(name);
    aux_.resize(rels_.size(), false);
    for (std::size_t i = 0; i < rels_.size(); ++i) aux_[i] = auxNames_.contains(relNames_[i]);
  }

  EvalStats run() {
    const auto t0 = Clock::now();
    EvalStats st;
    marks_.resize(rels_.size());
    for (std::size_t i = 0; i < rels_.size(); ++i) marks_[i] = {0, rels_[i]->size()};
    reset_pending();
    bool first = true;
    while (true) {
      ++st.iterations;
      for (const auto& r : rules_) {
        if (r.bodyRels.empty()) {
          if (first) emit(r, vals_);
          continue;
        }
        for (const auto& plan : r.plans) {
          if (!plan_live(r, plan)) continue;
          check_deadline();
          vals_.assign(r.nvars, 0);
          exec(r, plan, 0);
        }
      }
      st.ruleFirings += firings_;
      firings_ = 0;
      bool grew = false;
      for (std::size_t i = 0; i < rels_.size(); ++i) {
        const Relation& buf = pending_[i];
        for (std::size_t k = 0; k < buf.size(); ++k) {
          if (rels_[i]->insert(buf.row(k))) {
            (aux_[i] ? st.auxiliaryFacts : st.derivedFacts) += 1;
            grew = true;
          }
        }
        marks_[i] = {marks_[i].end, rels_[i]->size()};
      }
      reset_pending();
      first = false;
      if (!grew) break;
    }
    st.wallMillis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return st;
  }

 private:
  std::size_t rel_index(const std::string& pred, std::size_t arity) {
    if (arity > 32) throw std::invalid_argument("predicate " + pred + " exceeds 32 arguments");
    if (auto it = relIdx_.find(pred); it != relIdx_.end()) {
      if (rels_[it->second]->arity() != arity) store_.relation(pred, arity);  // throws
      return it->second;
    }
    rels_.push_back(&store_.relation(pred, arity));
    relNames_.push_back(pred);
    relIdx_.emplace(pred, rels_.size() - 1);
    return rels_.size() - 1;
  }

  void compile(const Rule& r) {
    check_range_restricted(r);
    CompiledRule cr;
    std::map<std::string, std::uint32_t> slots;
    auto slot = [&slots](const std::string& v) {
      auto it = slots.find(v);
      if (it != slots.end()) return it->second;
      const auto s = static_cast<std::uint32_t>(slots.size());
      slots.emplace(v, s);
      return s;
    };
    for (const auto& a : r.body)
      for (const auto& t : a.args)
        if (t.is_var()) slot(t.text);
    cr.nvars = slots.size();
    cr.head = rel_index(r.head.pred, r.head.args.size());
    for (const auto& t : r.head.args) cr.headArgs.push_back(to_arg(t, slot));
    for (const auto& a : r.body) cr.bodyRels.push_back(rel_index(a.pred, a.args.size()));

    for (std::size_t d = 0; d < r.body.size(); ++d) {
      Plan plan;
      plan.deltaAtom = d;
      std::vector<bool> bound(cr.nvars, false);
      std::vector<bool> used(r.body.size(), false);
      auto score = [&](const Atom& a) {
        int n = 0;
        for (const auto& t : a.args) n += (!t.is_var() || bound[slots.at(t.text)]) ? 1 : 0;
        return n;
      };
      std::size_t next = d;
      for (std::size_t k = 0; k < r.body.size(); ++k) {
        if (k > 0) {
          int best = -1;
          for (std::size_t j = 0; j < r.body.size(); ++j) {
            if (used[j]) continue;
            const int s = score(r.body[j]);
            if (s > best) {
              best = s;
              next = j;
            }
          }
        }
        used[next] = true;
        const Range range = next == d ? Range::Delta : (next < d ? Range::Old : Range::Full);
        plan.steps.push_back(make_step(r.body[next], cr.bodyRels[next], range, bound, slots));
      }
      cr.plans.push_back(std::move(plan));
    }
    rules_.push_back(std::move(cr));
  }

  template <class SlotFn>
  Arg to_arg(const Term& t, SlotFn& slot) {
    if (t.is_var()) return Arg{true, slot(t.text)};
    return Arg{false, store_.symbols().intern(t.text)};
  }

  Step make_step(const Atom& a, std::size_t rel, Range range, std::vector<bool>& bound,
                 const std::map<std::string, std::uint32_t>& slots) {
    Step s;
    s.rel = rel;
    s.range = range;
    std::map<std::uint32_t, std::size_t> freshAt;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      const Term& t = a.args[i];
      Arg arg;
      bool isBound = true;
      if (t.is_var()) {
        const std::uint32_t v = slots.at(t.text);
        arg = Arg{true, v};
        if (!bound[v]) {
          isBound = false;
          if (auto it = freshAt.find(v); it != freshAt.end()) {
            s.same.emplace_back(i, it->second);
          } else {
            freshAt.emplace(v, i);
            s.binds.emplace_back(i, v);
          }
        }
      } else {
        arg = Arg{false, store_.symbols().intern(t.text)};
      }
      if (!isBound) continue;
      s.mask |= 1U << i;
      if (s.key.size() < 2) {
        s.key.push_back(arg);
      } else {
        s.checks.emplace_back(i, arg);
      }
    }
    for (const auto& [_, v] : s.binds) bound[v] = true;
    return s;
  }

  std::pair<std::size_t, std::size_t> bounds(const Step& s) const {
    const Watermark& m = marks_[s.rel];
    switch (s.range) {
      case Range::Old: return {0, m.start};
      case Range::Delta: return {m.start, m.end};
      case Range::Full: return {0, m.end};
    }
    return {0, 0};
  }

  bool plan_live(const CompiledRule&, const Plan& plan) const {
    for (const auto& s : plan.steps) {
      auto [lo, hi] = bounds(s);
      if (lo >= hi) return false;
    }
    return true;
  }

  Sym value(const Arg& a) const { return a.var ? vals_[a.id] : a.id; }

  void exec(const CompiledRule& r, const Plan& plan, std::size_t k) {
    if (k == plan.steps.size()) {
      emit(r, vals_);
      return;
    }
    const Step& s = plan.steps[k];
    Relation& rel = *rels_[s.rel];
    auto [lo, hi] = bounds(s);
    auto visit = [&](std::size_t id) {
      const Sym* row = rel.row(id);
      for (const auto& [pos, arg] : s.checks)
        if (row[pos] != value(arg)) return;
      for (const auto& [pos, other] : s.same)
        if (row[pos] != row[other]) return;
      for (const auto& [pos, v] : s.binds) vals_[v] = row[pos];
      exec(r, plan, k + 1);
    };
    if (s.mask == 0) {
      for (std::size_t id = lo; id < hi; ++id) visit(id);
      return;
    }
    Sym key[2] = {value(s.key[0]), s.key.size() > 1 ? value(s.key[1]) : 0};
    const auto& ids = rel.lookup(s.mask, key);
    for (auto it = std::lower_bound(ids.begin(), ids.end(), static_cast<std::uint32_t>(lo));
         it != ids.end() && *it < hi; ++it) {
      visit(*it);
    }
  }

  void reset_pending() {
    pending_.clear();
    for (const Relation* r : rels_) pending_.emplace_back(r->arity());
  }

  // Rows already known or already pending are dropped here, so the buffer
  // holds each new fact once.
  void emit(const CompiledRule& r, const std::vector<Sym>& vals) {
    head_.clear();
    for (const auto& a : r.headArgs) head_.push_back(a.var ? vals[a.id] : a.id);
    if (!rels_[r.head]->contains(head_.data())) pending_[r.head].insert(head_.data());
    if ((++firings_ & 0xFFF) == 0) check_deadline();
  }

  void check_deadline() const {
    if (opts_.deadline && Clock::now() >= *opts_.deadline) throw Timeout();
  }

  FactStore& store_;
  EvalOptions opts_;
  std::vector<Relation*> rels_;
  std::vector<std::string> relNames_;
  std::unordered_map<std::string, std::size_t> relIdx_;
  std::set<std::string> auxNames_;
  std::vector<bool> aux_;
  std::vector<CompiledRule> rules_;
  std::vector<Watermark> marks_;
  std::vector<Relation> pending_;
  std::vector<Sym> head_;
  std::vector<Sym> vals_;
  std::size_t firings_ = 0;
};

// Naive evaluation over plain tuples with explicit substitutions.
using Binding = std::map<std::string, std::string>;

void match_all(const std::vector<Atom>& body, std::size_t k, Binding& b, const FactStore& store,
               const std::map<std::string, std::vector<std::vector<std::string>>>& snapshot,
               const std::function<void(const Binding&)>& out) {
  if (k == body.size()) {
    out(b);
    return;
  }
  const Atom& a = body[k];
  auto it = snapshot.find(a.pred);
  if (it == snapshot.end()) return;
  for (const auto& row : it->second) {
    if (row.size() != a.args.size()) continue;
    Binding next = b;
    bool ok = true;
    for (std::size_t i = 0; i < row.size() && ok; ++i) {
      const Term& t = a.args[i];
      if (!t.is_var()) {
        ok = t.text == row[i];
      } else if (auto bi = next.find(t.text); bi != next.end()) {
        ok = bi->second == row[i];
      } else {
        next.emplace(t.text, row[i]);
      }
    }
    if (ok) match_all(body, k + 1, next, store, snapshot, out);
  }
}

}  // namespace

EvalStats evaluate(const Program& p, FactStore& store, const EvalOptions& opts) {
  Engine e(p, store, opts);
  return e.run();
}

EvalStats evaluate_naive(const Program& p, FactStore& store) {
  for (const auto& r : p.rules) check_range_restricted(r);
  const auto t0 = Clock::now();
  EvalStats st;
  while (true) {
    ++st.iterations;
    std::map<std::string, std::vector<std::vector<std::string>>> snapshot;
    for (const auto& name : store.predicates()) snapshot.emplace(name, store.tuples(name));
    std::vector<Atom> derived;
    for (const auto& r : p.rules) {
      Binding b;
      match_all(r.body, 0, b, store, snapshot, [&](const Binding& bind) {
        Atom h{r.head.pred, {}};
        for (const auto& t : r.head.args) h.args.push_back(t.is_var() ? Term::constant(bind.at(t.text)) : t);
        derived.push_back(std::move(h));
        ++st.ruleFirings;
      });
    }
    bool grew = false;
    for (const auto& a : derived) {
      if (store.add(a)) {
        (p.auxiliaryPreds.contains(a.pred) ? st.auxiliaryFacts : st.derivedFacts) += 1;
        grew = true;
      }
    }
    if (!grew) break;
  }
  st.wallMillis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return st;
}

AnswerTable answers(const FactStore& store, const std::string& pred, const std::vector<std::string>& header) {
  AnswerTable table(header);
  for (const auto& t : store.tuples(pred)) {
    if (t.size() != header.size()) continue;
    AnswerTable::Row row;
    row.reserve(t.size());
    for (const auto& s : t) row.emplace_back(s);
    table.insert(std::move(row));
  }
  return table;
}

}  // namespace mser
