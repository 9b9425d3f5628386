#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace invgrp {

/// Index of an element inside its group. Id 0 is always the identity.
using ElementId = std::uint16_t;

/// Resource limits shared by every algorithm in the library.
struct Caps {
  std::size_t max_order = 768;
  std::size_t max_subgroups = 1'000'000;
  std::size_t max_aut_maps = 100'000;
  std::size_t max_aut_table = 2048;
  std::size_t max_actions = 10'000;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when a configured resource limit is hit. Callers that can
/// degrade gracefully catch this and report "unknown".
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A finite group given by its full multiplication table.
///
/// Copies are cheap: the table lives in shared immutable storage, so a
/// FiniteGroup can be handed to any number of worker threads.
class FiniteGroup {
 public:
  /// Builds a group from a row-major n*n table. With `check_associativity`
  /// the table is fully validated; built families skip the cubic check.
  FiniteGroup(std::size_t order, std::vector<ElementId> table, std::string spec,
              bool check_associativity = false);

  /// The trivial group.
  FiniteGroup();

  std::size_t order() const { return d_->order; }
  ElementId mul(ElementId a, ElementId b) const { return d_->table[std::size_t(a) * d_->order + b]; }
  ElementId inv(ElementId a) const { return d_->inverses[a]; }
  std::size_t element_order(ElementId a) const { return d_->element_orders[a]; }
  std::span<const ElementId> table() const { return d_->table; }
  std::span<const ElementId> row(ElementId a) const {
    return std::span<const ElementId>(d_->table).subspan(std::size_t(a) * d_->order, d_->order);
  }
  std::span<const std::uint32_t> element_orders() const { return d_->element_orders; }
  const std::string& spec() const { return d_->spec; }

  /// x^k with k >= 0.
  ElementId power(ElementId x, std::size_t k) const;
  /// a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  /// g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }

  bool is_abelian() const;
  std::size_t exponent() const;

  /// FNV-1a over the table; used as the cache key for derived data.
  std::uint64_t table_hash() const { return d_->hash; }

  /// Same group, different provenance label.
  FiniteGroup relabeled(std::string spec) const;

  bool same_table(const FiniteGroup& other) const {
    return d_ == other.d_ || (order() == other.order() && d_->table == other.d_->table);
  }

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<ElementId> table;
    std::vector<ElementId> inverses;
    std::vector<std::uint32_t> element_orders;
    std::uint64_t hash = 0;
    std::string spec;
  };
  std::shared_ptr<const Data> d_;
};

/// Fixed-width membership set over the ids of a parent group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(ElementId x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(ElementId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(ElementId x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;
  std::vector<ElementId> ids() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// A subgroup of a parent group: membership bits plus the sorted id list.
class Subgroup {
 public:
  /// Trusts that `members` is closed; use closure() for arbitrary seeds.
  Subgroup(FiniteGroup parent, ElementSet members);
  Subgroup(FiniteGroup parent, std::span<const ElementId> sorted_ids);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<ElementId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(ElementId x) const { return members_.test(x); }
  bool subgroup_of(const Subgroup& other) const { return members_.subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  FiniteGroup parent_;
  ElementSet members_;
  std::vector<ElementId> ids_;
};

/// Smallest subgroup containing `seed`.
Subgroup closure(const FiniteGroup& parent, std::span<const ElementId> seed);

/// <k, x>, extending a subgroup by one element. `gens` must generate k.
Subgroup join_element(const Subgroup& k, std::span<const ElementId> gens, ElementId x);

/// Smallest subgroup containing both.
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

Subgroup centralizer(const FiniteGroup& parent, const Subgroup& k);

/// Greedy generating sequence: repeatedly append the smallest id outside
/// the closure of the current sequence.
std::vector<ElementId> greedy_generators(const Subgroup& k);
std::vector<ElementId> greedy_generators(const FiniteGroup& g);

/// Subgroup k as a standalone group, renumbered by ascending parent id
/// (the identity stays at 0).
FiniteGroup as_group(const Subgroup& k);

/// Quotient by a normal subgroup; cosets numbered by their minimal id in
/// order of appearance, identity coset first.
FiniteGroup quotient(const FiniteGroup& parent, const Subgroup& n);

bool is_normal(const FiniteGroup& parent, const Subgroup& k);

/// Re-checks every table invariant. Throws ValidationError on failure.
/// Associativity is exhaustive up to order 256 and sampled above that;
/// returns true when the exhaustive path was taken.
bool validate_table(std::size_t order, std::span<const ElementId> table, bool check_associativity);

}  // namespace invgrp
