#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "invgrp/constructions.hpp"
#include "invgrp/group.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/spec.hpp"

namespace invgrp {

struct EngineOptions {
  Caps caps;
  std::size_t jobs = 1;
  /// When set, subgroup lattices are persisted under <dir>/lattices.
  std::optional<std::filesystem::path> cache_dir;
};

/// Shared state for a run: caps, worker count and the lattice cache.
/// Safe to use from several threads; cache entries are written once.
class Engine {
 public:
  explicit Engine(EngineOptions options = {});

  const Caps& caps() const { return options_.caps; }
  std::size_t jobs() const { return options_.jobs; }

  std::shared_ptr<const SubgroupLattice> lattice(const FiniteGroup& g);

 private:
  EngineOptions options_;
  std::mutex mutex_;
  std::map<std::uint64_t, std::vector<std::shared_ptr<const SubgroupLattice>>> lattices_;
};

enum class EvalStatus {
  Ok,
  /// |f(H)| is known to exceed the requested bound.
  TooLarge,
  /// A resource cap stopped the computation; the result is unknown.
  Capped,
};

struct EvalOutcome {
  EvalStatus status = EvalStatus::Ok;
  std::optional<FiniteGroup> group;
  /// For subgroup-valued constructions, f(H) inside H.
  std::optional<Subgroup> subgroup;
  std::string note;
};

/// f(h) as a standalone group. Aut returns the automorphism table group;
/// Inn returns h / Z(h). `size_bound` lets Aut stop once more than that
/// many automorphisms are found (reported as TooLarge).
EvalOutcome eval_construction(Engine& engine, Construction f, const FiniteGroup& h,
                              std::size_t size_bound = SIZE_MAX);

/// Throwing convenience wrapper.
FiniteGroup eval_construction(Construction f, const FiniteGroup& h, const Caps& caps = {});

// ---------------------------------------------------------------------------
// Catalog

enum class Completeness { Complete, ConstructibleOnly };

struct CatalogEntry {
  std::string spec;
  FiniteGroup group;
  Fingerprint fingerprint;
};

struct CatalogOptions {
  bool abelian = true;
  bool dihedral = true;
  bool dicyclic = true;
  bool symmetric = true;
  bool heisenberg = true;
  bool sl23 = true;
  bool products = true;
  bool wreath = true;
  bool semidirect = true;
  /// Semidirect products are only formed up to this order.
  std::size_t semidirect_max_order = 128;
  /// When Aut(N) is larger than the table cap but has at most this many
  /// elements, cyclic K still act through its permutations.
  std::size_t permutation_aut_max = 30'000;
  /// Skip N x| K when K itself splits; those groups come from a smaller
  /// acting group. Only exact when the intermediate N x| K1 made it into
  /// the catalog, which the per-order counts confirm at certified orders.
  bool skip_split_acting_groups = true;
  std::size_t jobs = 1;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::size_t max_order = 0;
  /// completeness[n] for n in [1, max_order]; index 0 unused.
  std::vector<Completeness> completeness;
  /// Free-form notes about truncated enumerations.
  std::vector<std::string> notes;

  std::vector<const CatalogEntry*> of_order(std::size_t n) const;
  /// Entries with order <= max_order (a prefix, since entries are
  /// generated order by order).
  Catalog slice(std::size_t max_order) const;
  std::size_t count_of_order(std::size_t n) const { return of_order(n).size(); }
  bool complete_through(std::size_t n) const;
};

/// Number of isomorphism classes of groups of order n, for n <= 128.
std::optional<std::size_t> known_group_count(std::size_t n);

/// Generates every group the constructor algebra reaches up to max_order,
/// deduplicated up to isomorphism. Orders whose count matches the known
/// classification are flagged complete; a mismatch at orders <= 15 throws.
Catalog build_catalog(std::size_t max_order, const CatalogOptions& options = {}, const Caps& caps = {});

/// Continues `base` (built with the same options) up to max_order.
Catalog extend_catalog(Catalog base, std::size_t max_order, const CatalogOptions& options = {},
                       const Caps& caps = {});

void save_catalog(const Catalog& catalog, const std::filesystem::path& dir);
std::optional<Catalog> load_catalog(const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// Searches and checks

struct Skip {
  std::string spec;
  std::string reason;
};

struct Realisation {
  std::string spec;
  std::size_t order = 0;
  /// Isomorphism f(H) -> G, indexed by the reified ids of f(H).
  std::vector<ElementId> map;
};

struct SearchResult {
  std::vector<Realisation> hits;
  std::vector<Skip> skipped;
};

/// Catalog entries H with f(H) isomorphic to g, ascending by (order, spec).
SearchResult find_realisations(Engine& engine, const FiniteGroup& g, Construction f, const Catalog& catalog);

enum class Verdict { True, False, Unknown };
std::string to_string(Verdict v);

struct SubgroupMatch {
  /// G1 as ids of the target group.
  std::vector<ElementId> target_subgroup;
  /// H1 as ids of the host group.
  std::vector<ElementId> host_subgroup;
  /// f(H1) -> G1: entry i is the target id matched with the i-th element
  /// of f(H1) (ascending host ids for subgroup-valued f).
  std::vector<ElementId> map;
};

struct Unmatched {
  std::vector<ElementId> subgroup;
  /// Short human-readable description (order, abelian, histogram).
  std::string description;
  std::size_t order = 0;
  /// Present when the unmatched group is f(H1) (condition iii).
  std::optional<FiniteGroup> group;
};

struct RealisabilityReport {
  Construction f = Construction::D;
  std::string target;
  std::string host;
  Verdict cond_i = Verdict::Unknown;
  Verdict cond_ii = Verdict::Unknown;
  Verdict cond_iii = Verdict::Unknown;
  std::vector<ElementId> iso_i;
  std::vector<SubgroupMatch> witnesses_ii;
  std::vector<SubgroupMatch> witnesses_iii;
  std::vector<Unmatched> failures_ii;
  std::vector<Unmatched> failures_iii;
  std::vector<Skip> skipped;
  /// Target subgroups whose class reps are listed as G1 (for reporting).
  std::size_t target_classes = 0;
  std::size_t host_classes = 0;

  Verdict overall() const;
  bool all_true() const { return overall() == Verdict::True; }
};

RealisabilityReport check_completely_realisable(Engine& engine, const FiniteGroup& g, const FiniteGroup& h,
                                                Construction f);

struct CompleteSearchResult {
  std::vector<std::pair<std::string, RealisabilityReport>> passing;
  std::vector<std::pair<std::string, RealisabilityReport>> failing;
  std::vector<Skip> skipped;
};

CompleteSearchResult find_complete_realisations(Engine& engine, const FiniteGroup& g, Construction f,
                                                const Catalog& catalog, bool keep_failing = false);

struct FrattiniCriterion {
  bool holds = false;
  std::size_t inn_order = 0;
  std::size_t frattini_order = 0;
  std::size_t aut_order = 0;
};

/// Whether Inn(g) lies inside the Frattini subgroup of Aut(g). Throws
/// CapExceeded when Aut(g) cannot be materialized.
FrattiniCriterion frattini_criterion(Engine& engine, const FiniteGroup& g);

}  // namespace invgrp
