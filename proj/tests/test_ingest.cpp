#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "invgrp/families.hpp"
#include "invgrp/ingest.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace fs = std::filesystem;

TEST_CASE("multiplication table files") {
  auto r = ingest(fs::path(INVGRP_TEST_DATA) / "c2.mt");
  CHECK(r.group.order() == 2);
  CHECK(r.exhaustive_associativity);
  CHECK(isomorphic(r.group, cyclic(2)));
  CHECK_THROWS_AS(ingest(fs::path(INVGRP_TEST_DATA) / "nonassoc.mt"), ValidationError);
}

TEST_CASE("permutation generator files") {
  auto r = ingest(fs::path(INVGRP_TEST_DATA) / "dih4.pg");
  CHECK(r.group.order() == 8);
  CHECK(isomorphic(r.group, dihedral(4)));
  CHECK(isomorphic(parse_permutation_generators("5\n(1 2 3 4 5)\n(1 2)\n").group, symmetric(5)));
  CHECK(isomorphic(parse_permutation_generators("4\n(1 2)(3 4)\n(1 3)(2 4)\n").group, elementary_abelian(2, 2)));
  // No generators: the trivial group.
  CHECK(parse_permutation_generators("3\n").group.order() == 1);
}

TEST_CASE("table round trip") {
  for (const char* spec : {"C1", "S3", "Q8", "C2 x A4"}) {
    auto g = build(spec);
    auto back = parse_multiplication_table(format_multiplication_table(g)).group;
    CHECK(back.same_table(g));
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_multiplication_table(""), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("2\n0 1\n1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("-1\n"), ParseError);
  CHECK_THROWS_AS(parse_multiplication_table("2\n0 1\n0 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_permutation_generators("3\n(1 4)\n"), ParseError);
  CHECK_THROWS_AS(parse_permutation_generators("3\n(1 2)(2 3)\n"), ParseError);
  CHECK_THROWS_AS(parse_permutation_generators("3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(ingest(fs::path(INVGRP_TEST_DATA) / "missing.mt"), ParseError);
}

TEST_CASE("caps apply to ingested groups") {
  Caps caps;
  caps.max_order = 100;
  CHECK_THROWS_AS(parse_permutation_generators("5\n(1 2 3 4 5)\n(1 2)\n", caps), CapExceeded);
  CHECK_THROWS_AS(parse_multiplication_table("200\n", caps), CapExceeded);
}

TEST_CASE("comments and blank lines are ignored") {
  auto g = parse_multiplication_table("# header\n\n2 # order\n0 1\n\n1 0  # last\n").group;
  CHECK(g.order() == 2);
}

TEST_CASE("file specs") {
  auto path = (fs::path(INVGRP_TEST_DATA) / "dih4.pg").string();
  auto g = build("file:" + path);
  CHECK(g.order() == 8);
  CHECK(build("file:" + path + " x C3").order() == 24);
}
