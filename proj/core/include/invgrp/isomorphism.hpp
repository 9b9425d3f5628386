#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "invgrp/group.hpp"

namespace invgrp {

/// Cheap isomorphism invariants. Equal for isomorphic groups; the converse
/// does not hold.
struct Fingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::size_t exponent = 1;
  /// (element order, count), ascending by order.
  std::vector<std::pair<std::size_t, std::size_t>> element_order_histogram;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
  std::size_t conjugacy_class_count = 1;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// Per-element invariant used to restrict candidate images during
/// backtracking: (element order, centralizer order).
std::vector<std::pair<std::uint32_t, std::uint32_t>> element_profile(const FiniteGroup& g);

struct Isomorphism {
  FiniteGroup source;
  FiniteGroup target;
  /// map[x] is the image of source element x.
  std::vector<ElementId> map;
};

/// Checks bijectivity, identity and the homomorphism property.
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<ElementId>& map);

/// An isomorphism a -> b, or nullopt. The search order is deterministic,
/// so repeated calls return the same map.
std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Stable colour refinement of the multiplication table, starting from
/// characteristic per-element data. Colours are named canonically (by rank
/// of their defining signature), so isomorphic groups get equal hashes and
/// an isomorphism maps each element to one of the same colour.
struct RefinedColouring {
  std::vector<std::uint32_t> colours;
  std::uint64_t hash = 0;

  /// The same refinement seeded also with, for each x, the histogram of
  /// |<x, y>| over all y. Much sharper on 2-groups with large automorphism
  /// groups, and about a hundred times dearer, so it is built on first use
  /// and shared between copies. `g` must be the group this colours.
  const RefinedColouring& deepened(const FiniteGroup& g) const;

 private:
  struct Deeper {
    std::once_flag once;
    std::unique_ptr<RefinedColouring> colouring;
  };
  std::shared_ptr<Deeper> deeper_ = std::make_shared<Deeper>();
};
RefinedColouring refined_colouring(const FiniteGroup& g);

/// As find_isomorphism, for callers that already compared fingerprints.
std::optional<Isomorphism> find_isomorphism_prefiltered(const FiniteGroup& a, const FiniteGroup& b);

/// As find_isomorphism, reusing refined colourings computed earlier.
std::optional<Isomorphism> find_isomorphism_refined(const FiniteGroup& a, const RefinedColouring& ra,
                                                    const FiniteGroup& b, const RefinedColouring& rb);
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

struct IsoClass {
  std::size_t representative;
  std::vector<std::size_t> members;
};

/// Partition by isomorphism; each representative is the first member in
/// input order and classes are listed in order of their representative.
std::vector<IsoClass> iso_class_representatives(const std::vector<FiniteGroup>& groups);

/// Backtracking over images of a generating sequence.
///
/// `candidates[i]` lists the allowed images of `gens[i]`, tried in order.
/// Each complete consistent assignment is extended to the whole of
/// <gens> and handed to `visit` as a map indexed by source id (entries
/// outside <gens> are 0xffff). Returning false from `visit` stops the
/// search. Returns the number of homomorphisms visited.
struct HomSearch {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<ElementId> gens;
  std::vector<std::vector<ElementId>> candidates;
  bool injective = false;
};

std::size_t enumerate_homomorphisms(const HomSearch& search,
                                    const std::function<bool(const std::vector<ElementId>&)>& visit);

}  // namespace invgrp
