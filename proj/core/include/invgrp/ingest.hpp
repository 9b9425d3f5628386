#pragma once

#include <filesystem>
#include <string>

#include "invgrp/group.hpp"

namespace invgrp {

struct IngestResult {
  FiniteGroup group;
  /// False when associativity was checked on sampled triples only.
  bool exhaustive_associativity = true;
};

/// Reads a multiplication-table (.mt) or permutation-generator (.pg) file.
/// Files with another extension are sniffed: a '(' on the second
/// non-comment line means permutation generators.
IngestResult ingest(const std::filesystem::path& path, const Caps& caps = {});

IngestResult parse_multiplication_table(std::string_view text, const Caps& caps = {}, std::string label = "mt");
IngestResult parse_permutation_generators(std::string_view text, const Caps& caps = {}, std::string label = "pg");

/// Inverse of parse_multiplication_table.
std::string format_multiplication_table(const FiniteGroup& g);

}  // namespace invgrp
