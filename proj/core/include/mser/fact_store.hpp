#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mser/rules.hpp"

namespace mser {

using Sym = std::uint32_t;

/// Append-only string interning. Ids are dense and stable.
class SymbolTable {
 public:
  Sym intern(std::string_view s);
  std::optional<Sym> find(std::string_view s) const;
  const std::string& name(Sym id) const { return names_[id]; }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, Sym> ids_;
};

/// Flat tuple storage for one predicate. Rows are never removed, so row ids
/// double as insertion timestamps for semi-naive watermarks.
class Relation {
 public:
  explicit Relation(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return rows_; }
  const Sym* row(std::size_t i) const { return data_.data() + i * arity_; }

  /// Returns true when the row was not present.
  bool insert(const Sym* row);
  bool contains(const Sym* row) const;

  /// Ascending ids of rows whose values at the first (up to two) positions
  /// set in `mask` equal `key[0..]`. Other masked positions are not checked.
  const std::vector<std::uint32_t>& lookup(std::uint32_t mask, const Sym* key);

 private:
  struct Index {
    int pos0 = -1;
    int pos1 = -1;
    std::size_t builtUpTo = 0;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  };

  std::uint64_t hash_row(const Sym* row) const;
  bool row_equals(std::uint32_t id, const Sym* row) const;
  void grow();

  std::size_t arity_;
  std::size_t rows_ = 0;
  std::vector<Sym> data_;
  std::vector<std::uint32_t> slots_;  // row id + 1, 0 = empty
  std::unordered_map<std::uint32_t, Index> indexes_;
};

/// Ground facts grouped by predicate. Copies share the symbol table.
class FactStore {
 public:
  FactStore();

  /// Throws std::invalid_argument for non-ground atoms or an arity that
  /// disagrees with earlier facts of the same predicate.
  bool add(const Atom& fact);
  template <class It>
  void add(It first, It last) {
    for (; first != last; ++first) add(*first);
  }
  bool contains(const Atom& fact) const;

  std::size_t count() const;
  std::size_t count(std::string_view pred) const;
  std::vector<std::string> predicates() const;

  /// Tuples of `pred` as strings, lexicographically sorted.
  std::vector<std::vector<std::string>> tuples(std::string_view pred) const;
  /// Every fact, sorted by predicate then arguments.
  std::vector<Atom> atoms() const;

  SymbolTable& symbols() { return *symbols_; }
  const SymbolTable& symbols() const { return *symbols_; }
  Relation* find(std::string_view pred);
  const Relation* find(std::string_view pred) const;
  /// Creates the relation when absent; throws on arity mismatch.
  Relation& relation(const std::string& pred, std::size_t arity);

  friend bool operator==(const FactStore& a, const FactStore& b) { return a.atoms() == b.atoms(); }

 private:
  std::shared_ptr<SymbolTable> symbols_;
  std::map<std::string, Relation, std::less<>> relations_;
};

}  // namespace mser
