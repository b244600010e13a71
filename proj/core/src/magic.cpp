#include "mser/magic.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace mser {

namespace {

bool bound_term(const Term& t, const std::set<std::string>& bound) {
  return !t.is_var() || bound.contains(t.text);
}

std::string adornment(const Atom& a, const std::set<std::string>& bound) {
  std::string ad;
  for (const auto& t : a.args) ad.push_back(bound_term(t, bound) ? 'b' : 'f');
  return ad;
}

Atom magic_atom(const Atom& a, const std::string& ad) {
  Atom m{magic_name(a.pred, ad), {}};
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (ad[i] == 'b') m.args.push_back(a.args[i]);
  return m;
}

void bind_all(const Atom& a, std::set<std::string>& bound) {
  for (const auto& t : a.args)
    if (t.is_var()) bound.insert(t.text);
}

}  // namespace

std::string magic_name(const std::string& pred, const std::string& ad) { return "m_" + pred + "_" + ad; }

Program magic_transform(const Program& p, const Atom& goal) {
  const std::set<std::string> idb = defined_predicates(p);
  if (!idb.contains(goal.pred)) {
    throw std::invalid_argument("goal predicate " + goal.pred + " is not defined by the program");
  }
  std::multimap<std::string, const Rule*> byHead;
  for (const auto& r : p.rules) byHead.emplace(r.head.pred, &r);

  Program out;
  out.queryPred = p.queryPred;

  const std::string goalAd = adornment(goal, {});
  Rule seed{magic_atom(goal, goalAd), {}, "magic.seed"};
  out.rules.push_back(seed);
  out.auxiliaryPreds.insert(seed.head.pred);

  std::set<std::pair<std::string, std::string>> seen{{goal.pred, goalAd}};
  std::deque<std::pair<std::string, std::string>> work{{goal.pred, goalAd}};
  std::set<std::string> emitted;  // textual dedup of magic rules

  while (!work.empty()) {
    const auto [pred, ad] = work.front();
    work.pop_front();
    auto [lo, hi] = byHead.equal_range(pred);
    for (auto it = lo; it != hi; ++it) {
      const Rule& r = *it->second;
      if (r.head.args.size() != ad.size()) continue;
      const Atom guard = magic_atom(r.head, ad);
      std::set<std::string> bound;
      for (std::size_t i = 0; i < ad.size(); ++i)
        if (ad[i] == 'b' && r.head.args[i].is_var()) bound.insert(r.head.args[i].text);

      std::vector<bool> used(r.body.size(), false);
      std::vector<Atom> prefix{guard};
      for (std::size_t k = 0; k < r.body.size(); ++k) {
        std::size_t pick = 0;
        int best = -1;
        for (std::size_t j = 0; j < r.body.size(); ++j) {
          if (used[j]) continue;
          int score = 0;
          for (const auto& t : r.body[j].args) score += bound_term(t, bound) ? 1 : 0;
          if (score > best) {
            best = score;
            pick = j;
          }
        }
        used[pick] = true;
        const Atom& a = r.body[pick];
        if (idb.contains(a.pred)) {
          const std::string sub = adornment(a, bound);
          Rule mr{magic_atom(a, sub), prefix, "magic." + r.label};
          out.auxiliaryPreds.insert(mr.head.pred);
          if (emitted.insert(to_string(mr)).second) out.rules.push_back(std::move(mr));
          if (seen.emplace(a.pred, sub).second) work.emplace_back(a.pred, sub);
        }
        prefix.push_back(a);
        bind_all(a, bound);
      }
      Rule guarded{r.head, prefix, r.label};
      if (emitted.insert(to_string(guarded)).second) out.rules.push_back(std::move(guarded));
    }
  }
  return out;
}

}  // namespace mser
