#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "invgrp/realisability.hpp"
#include "invgrp/report.hpp"

// Declarative checks of the realisability results. Each claim in the
// manifest names a check kind and its parameters; the runner evaluates
// them against freshly built catalogs.

namespace invgrp {

enum class Scale { Small, Full };
Scale parse_scale(std::string_view s);

enum class ClaimStatus { Pass, Fail, Unknown };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  int criterion = 0;
  std::string statement;
  ClaimStatus status = ClaimStatus::Unknown;
  std::string detail;
  double seconds = 0;
};

struct CriterionInfo {
  int number = 0;
  std::string title;
  double budget_seconds = 0;
};

/// The compiled-in manifest.
const Json& claims_manifest();
std::vector<CriterionInfo> manifest_criteria(const Json& manifest = claims_manifest());

/// Builds catalogs incrementally; later requests reuse earlier orders.
class CatalogProvider {
 public:
  explicit CatalogProvider(CatalogOptions options = {}, Caps caps = {},
                           std::optional<std::filesystem::path> cache_dir = std::nullopt);
  const Catalog& get(std::size_t max_order);

 private:
  CatalogOptions options_;
  Caps caps_;
  std::optional<std::filesystem::path> cache_dir_;
  Catalog full_;
  std::map<std::size_t, std::unique_ptr<Catalog>> slices_;
};

struct ClaimRunOptions {
  Scale scale = Scale::Full;
  std::size_t jobs = 1;
  Caps caps;
  std::optional<std::filesystem::path> cache_dir;
  /// Criterion numbers to run; empty means all.
  std::vector<int> criteria;
  std::function<void(const ClaimResult&)> on_result;
};

std::vector<ClaimResult> run_claims(const ClaimRunOptions& options, const Json& manifest = claims_manifest());

/// Worst status per criterion (Fail > Unknown > Pass), with total time.
struct CriterionResult {
  CriterionInfo info;
  ClaimStatus status = ClaimStatus::Pass;
  double seconds = 0;
  bool over_budget = false;
  std::vector<const ClaimResult*> claims;
};
std::vector<CriterionResult> summarize(const std::vector<ClaimResult>& results,
                                       const std::vector<CriterionInfo>& criteria);

// Brute-force oracles used by the claims and the tests.

/// Isomorphism by trying every bijection fixing the identity (order <= 9).
bool isomorphic_by_bijections(const FiniteGroup& a, const FiniteGroup& b);

/// Whether every computed automorphism maps k onto itself.
bool invariant_under(const AutGroup& aut, const Subgroup& k);

}  // namespace invgrp
