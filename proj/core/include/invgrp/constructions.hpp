#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invgrp/families.hpp"
#include "invgrp/group.hpp"
#include "invgrp/lattice.hpp"

namespace invgrp {

enum class Construction { Z, D, Phi, F, M, Aut, Inn };

std::string to_string(Construction f);
Construction parse_construction(std::string_view s);
inline constexpr Construction kAllConstructions[] = {Construction::Z,   Construction::D,   Construction::Phi,
                                                     Construction::F,   Construction::M,   Construction::Aut,
                                                     Construction::Inn};

Subgroup center(const FiniteGroup& g);

/// Closure of all commutators a^-1 b^-1 a b.
Subgroup derived(const FiniteGroup& g);

/// Intersection of the maximal subgroups (the whole group when there are
/// none, which only happens for the trivial group).
Subgroup frattini(const FiniteGroup& g, const SubgroupLattice& lat);

/// H' H^p. Only meaningful for p-groups; used as a cross-check.
Subgroup frattini_by_powers(const FiniteGroup& g);

/// Join of all normal nilpotent subgroups.
Subgroup fitting(const FiniteGroup& g, const SubgroupLattice& lat);

/// Product over p of the intersection of the Sylow p-subgroups.
Subgroup fitting_by_pcores(const FiniteGroup& g, const SubgroupLattice& lat);

struct CdLattice {
  FiniteGroup parent;
  std::size_t max_measure = 1;
  std::vector<Subgroup> members;
  /// Positions of the members in the subgroup lattice they came from.
  std::vector<std::size_t> lattice_ids;
};

/// |K| * |C_G(K)|
std::size_t cd_measure(const FiniteGroup& g, const Subgroup& k);
CdLattice cd_lattice(const FiniteGroup& g, const SubgroupLattice& lat);

/// Minimal member of the Chermak-Delgado lattice.
Subgroup chermak_delgado_subgroup(const CdLattice& cd);

struct AutGroup {
  FiniteGroup base;
  /// Element permutations; index 0 is the identity map.
  std::vector<Perm> automorphisms;
  /// Composition table, (a*b)(x) = b(a(x)); present when the enumeration
  /// finished and fits under caps.max_aut_table.
  std::optional<FiniteGroup> table_group;
  /// Indices of the conjugation maps x -> g^-1 x g.
  std::vector<std::size_t> inner_ids;
  /// Enumeration stopped early; automorphisms is a strict prefix.
  bool truncated = false;
  /// Upper bound from counting candidate generator images.
  double preflight_estimate = 0;

  std::size_t count() const { return automorphisms.size(); }
};

/// Enumerates Aut(g) by backtracking over images of g's greedy generating
/// sequence. Stops (truncated = true) once more than
/// min(caps.max_aut_maps, limit) maps are found.
AutGroup automorphism_group(const FiniteGroup& g, const Caps& caps = {}, std::size_t limit = SIZE_MAX);

/// Inn(g) as a subgroup of the materialized table group. Throws
/// CapExceeded when the table was not materialized.
Subgroup inner_automorphisms(const AutGroup& aut);

/// Inn(g) built directly as g / Z(g).
FiniteGroup inner_automorphism_group(const FiniteGroup& g);

}  // namespace invgrp
