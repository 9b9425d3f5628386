#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "invgrp/group.hpp"

namespace invgrp {

/// Every subgroup of a group, sorted by (size, member list).
struct SubgroupLattice {
  FiniteGroup parent;
  std::vector<Subgroup> subgroups;
  /// A generating list for each subgroup (parallel to `subgroups`).
  std::vector<std::vector<ElementId>> generators;
  std::vector<std::size_t> maximal_ids;
  std::vector<std::size_t> normal_ids;
  std::vector<std::vector<std::size_t>> conjugacy_classes;
  /// Conjugacy class index of each subgroup.
  std::vector<std::size_t> class_of;

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  const Subgroup& trivial() const { return subgroups.front(); }
  const Subgroup& whole() const { return subgroups.back(); }
  bool is_normal(std::size_t i) const { return conjugacy_classes[class_of[i]].size() == 1; }

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup;
};

/// Seeds with the distinct cyclic subgroups and closes under joins until
/// nothing new appears. Throws CapExceeded past caps.max_subgroups.
SubgroupLattice all_subgroups(const FiniteGroup& g, const Caps& caps = {});

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat);

/// Orbits of the conjugation action on the subgroup list.
std::vector<std::vector<std::size_t>> conjugacy_classes_of_subgroups(const SubgroupLattice& lat);

/// Subgroups of order p^k where p^k exactly divides |G|.
std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lat, std::size_t p);

/// G = g_1 >= [G,G] >= [[G,G],G] >= ... until it stabilises.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

/// Sylow criterion: exactly one Sylow p-subgroup for every prime p.
bool is_nilpotent_by_sylow(const SubgroupLattice& lat);

std::vector<std::size_t> prime_divisors(std::size_t n);

}  // namespace invgrp
