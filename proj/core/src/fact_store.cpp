#include "mser/fact_store.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mser {

Sym SymbolTable::intern(std::string_view s) {
  if (auto it = ids_.find(s); it != ids_.end()) return it->second;
  const Sym id = static_cast<Sym>(names_.size());
  names_.emplace_back(s);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<Sym> SymbolTable::find(std::string_view s) const {
  if (auto it = ids_.find(s); it != ids_.end()) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Relation::Relation(std::size_t arity) : arity_(arity), slots_(16, 0) {}

std::uint64_t Relation::hash_row(const Sym* row) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ arity_;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= row[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h ^ (h >> 33);
}

bool Relation::row_equals(std::uint32_t id, const Sym* row) const {
  return std::equal(row, row + arity_, data_.begin() + static_cast<std::ptrdiff_t>(id * arity_));
}

void Relation::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::uint32_t id = 0; id < rows_; ++id) {
    std::size_t at = hash_row(row(id)) & mask;
    while (fresh[at] != 0) at = (at + 1) & mask;
    fresh[at] = id + 1;
  }
  slots_ = std::move(fresh);
}

bool Relation::contains(const Sym* r) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t at = hash_row(r) & mask;
  while (slots_[at] != 0) {
    if (row_equals(slots_[at] - 1, r)) return true;
    at = (at + 1) & mask;
  }
  return false;
}

bool Relation::insert(const Sym* r) {
  if ((rows_ + 1) * 2 > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t at = hash_row(r) & mask;
  while (slots_[at] != 0) {
    if (row_equals(slots_[at] - 1, r)) return false;
    at = (at + 1) & mask;
  }
  slots_[at] = static_cast<std::uint32_t>(rows_ + 1);
  data_.insert(data_.end(), r, r + arity_);
  ++rows_;
  return true;
}

const std::vector<std::uint32_t>& Relation::lookup(std::uint32_t mask, const Sym* key) {
  Index& idx = indexes_[mask];
  if (idx.pos0 < 0) {
    const int first = std::countr_zero(mask);
    idx.pos0 = first;
    const std::uint32_t rest = mask & ~(1U << first);
    idx.pos1 = rest != 0 ? std::countr_zero(rest) : -1;
  }
  auto key_of = [&idx](const Sym* vals0, const Sym* vals1) {
    return (static_cast<std::uint64_t>(*vals0) << 32) | (vals1 != nullptr ? *vals1 : 0U);
  };
  for (; idx.builtUpTo < rows_; ++idx.builtUpTo) {
    const Sym* r = row(idx.builtUpTo);
    const std::uint64_t k = key_of(r + idx.pos0, idx.pos1 >= 0 ? r + idx.pos1 : nullptr);
    idx.buckets[k].push_back(static_cast<std::uint32_t>(idx.builtUpTo));
  }
  static const std::vector<std::uint32_t> kEmpty;
  const std::uint64_t k = key_of(key, idx.pos1 >= 0 ? key + 1 : nullptr);
  auto it = idx.buckets.find(k);
  return it == idx.buckets.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------

FactStore::FactStore() : symbols_(std::make_shared<SymbolTable>()) {}

Relation& FactStore::relation(const std::string& pred, std::size_t arity) {
  auto it = relations_.find(pred);
  if (it == relations_.end()) it = relations_.emplace(pred, Relation(arity)).first;
  if (it->second.arity() != arity) {
    throw std::invalid_argument("predicate " + pred + " used with arity " + std::to_string(arity) +
                                " and " + std::to_string(it->second.arity()));
  }
  return it->second;
}

Relation* FactStore::find(std::string_view pred) {
  auto it = relations_.find(pred);
  return it == relations_.end() ? nullptr : &it->second;
}

const Relation* FactStore::find(std::string_view pred) const {
  auto it = relations_.find(pred);
  return it == relations_.end() ? nullptr : &it->second;
}

bool FactStore::add(const Atom& fact) {
  if (!fact.is_ground()) throw std::invalid_argument("fact is not ground: " + to_string(fact));
  Relation& rel = relation(fact.pred, fact.args.size());
  std::vector<Sym> row;
  row.reserve(fact.args.size());
  for (const auto& t : fact.args) row.push_back(symbols_->intern(t.text));
  return rel.insert(row.data());
}

bool FactStore::contains(const Atom& fact) const {
  const Relation* rel = find(fact.pred);
  if (rel == nullptr || rel->arity() != fact.args.size() || !fact.is_ground()) return false;
  std::vector<Sym> row;
  for (const auto& t : fact.args) {
    auto id = symbols_->find(t.text);
    if (!id) return false;
    row.push_back(*id);
  }
  return rel->contains(row.data());
}

std::size_t FactStore::count() const {
  std::size_t n = 0;
  for (const auto& [_, r] : relations_) n += r.size();
  return n;
}

std::size_t FactStore::count(std::string_view pred) const {
  const Relation* r = find(pred);
  return r == nullptr ? 0 : r->size();
}

std::vector<std::string> FactStore::predicates() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : relations_) out.push_back(name);
  return out;
}

std::vector<std::vector<std::string>> FactStore::tuples(std::string_view pred) const {
  std::vector<std::vector<std::string>> out;
  const Relation* r = find(pred);
  if (r == nullptr) return out;
  out.reserve(r->size());
  for (std::size_t i = 0; i < r->size(); ++i) {
    const Sym* row = r->row(i);
    std::vector<std::string> t;
    t.reserve(r->arity());
    for (std::size_t k = 0; k < r->arity(); ++k) t.push_back(symbols_->name(row[k]));
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Atom> FactStore::atoms() const {
  std::vector<Atom> out;
  for (const auto& [name, _] : relations_) {
    for (auto& t : tuples(name)) {
      Atom a{name, {}};
      for (auto& s : t) a.args.push_back(Term::constant(std::move(s)));
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace mser
