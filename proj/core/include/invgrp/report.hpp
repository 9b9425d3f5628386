#pragma once

#include <json.hpp>

#include "invgrp/constructions.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/realisability.hpp"

// JSON views of library results. Key order follows insertion order of
// nlohmann::ordered_json so dumps are byte-stable.

namespace invgrp {

using Json = nlohmann::ordered_json;

Json to_json(const Fingerprint& f);
std::string describe(const Fingerprint& f);

Json to_json(const SubgroupLattice& lat);
/// Rebuilds a lattice from to_json output. Throws ValidationError if the
/// data does not describe subgroups of g.
SubgroupLattice lattice_from_json(const FiniteGroup& g, const Json& j);

Json to_json(const CdLattice& cd);
Json to_json(const AutGroup& aut);

/// Construction result: tag, subgroup members (or Aut order and
/// generator images) and the reified group's table hash.
Json construction_json(Construction f, const FiniteGroup& h, const EvalOutcome& outcome);

Json to_json(const SearchResult& r);
Json to_json(const RealisabilityReport& r);
Json to_json(const CompleteSearchResult& r);
Json to_json(const FrattiniCriterion& c);
Json catalog_index(const Catalog& c);

std::string hex64(std::uint64_t v);

}  // namespace invgrp
