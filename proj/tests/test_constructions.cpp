#include <doctest.h>

#include <numeric>

#include "invgrp/constructions.hpp"
#include "invgrp/families.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/realisability.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

std::size_t totient(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

bool invariant(const AutGroup& aut, const Subgroup& k) {
  for (const auto& p : aut.automorphisms)
    for (auto x : k.ids())
      if (!k.contains(p[x])) return false;
  return true;
}

const char* kSample[] = {"C1", "C12", "S3", "Q8", "Dih4", "A4", "Dic3", "S4", "C2 x Q8", "He3", "SL23", "wr2(C3)",
                         "C2^3", "Dih6", "C3 x S3"};

}  // namespace

TEST_CASE("parse constructions") {
  for (auto f : kAllConstructions) CHECK(parse_construction(to_string(f)) == f);
  CHECK_THROWS(parse_construction("X"));
}

TEST_CASE("small examples") {
  auto q8 = build("Q8");
  auto lat = all_subgroups(q8);
  CHECK(center(q8).size() == 2);
  CHECK(derived(q8).size() == 2);
  CHECK(frattini(q8, lat).size() == 2);
  CHECK(fitting(q8, lat).size() == 8);

  auto s4 = symmetric(4);
  auto s4lat = all_subgroups(s4);
  CHECK(center(s4).size() == 1);
  CHECK(isomorphic(as_group(derived(s4)), alternating(4)));
  CHECK(frattini(s4, s4lat).size() == 1);
  CHECK(isomorphic(as_group(fitting(s4, s4lat)), build("C2^2")));

  auto sl = sl23();
  CHECK(isomorphic(as_group(fitting(sl, all_subgroups(sl))), q8));
  CHECK(isomorphic(as_group(derived(sl)), q8));
  CHECK(frattini(sl, all_subgroups(sl)).size() == 2);

  CHECK(isomorphic(as_group(frattini(cyclic(8), all_subgroups(cyclic(8)))), cyclic(4)));
  CHECK(frattini(cyclic(1), all_subgroups(cyclic(1))).size() == 1);
  CHECK(derived(alternating(5)).size() == 60);
}

TEST_CASE("chermak-delgado examples") {
  auto s3 = symmetric(3);
  auto cd = cd_lattice(s3, all_subgroups(s3));
  CHECK(cd.max_measure == 9);
  REQUIRE(cd.members.size() == 1);
  CHECK(cd.members[0].size() == 3);

  auto q8 = build("Q8");
  auto cdq = cd_lattice(q8, all_subgroups(q8));
  CHECK(cdq.max_measure == 16);
  CHECK(cdq.members.size() == 5);
  CHECK(chermak_delgado_subgroup(cdq).size() == 2);

  auto a = build("C6 x C2");
  auto cda = cd_lattice(a, all_subgroups(a));
  REQUIRE(cda.members.size() == 1);
  CHECK(cda.members[0].size() == 12);
  CHECK(cd_measure(a, Subgroup::trivial(a)) == 12);
}

TEST_CASE("automorphism group orders") {
  for (std::size_t n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(automorphism_group(cyclic(n)).count() == totient(n));
  }
  CHECK(automorphism_group(build("C2^2")).count() == 6);
  CHECK(automorphism_group(build("C2^3")).count() == 168);
  CHECK(automorphism_group(build("Q8")).count() == 24);
  CHECK(automorphism_group(build("Dih4")).count() == 8);
  CHECK(automorphism_group(symmetric(3)).count() == 6);
  CHECK(automorphism_group(symmetric(4)).count() == 24);
  CHECK(automorphism_group(alternating(4)).count() == 24);
  CHECK(automorphism_group(build("C4 x C2")).count() == 8);
}

TEST_CASE("automorphism group structure") {
  auto aut = automorphism_group(build("Q8"));
  REQUIRE(aut.table_group);
  CHECK(isomorphic(*aut.table_group, symmetric(4)));
  CHECK(aut.inner_ids.size() == 4);
  CHECK(inner_automorphisms(aut).size() == 4);
  for (const auto& p : aut.automorphisms) CHECK(is_automorphism(aut.base, p));

  auto c8 = automorphism_group(cyclic(8));
  REQUIRE(c8.table_group);
  CHECK(isomorphic(*c8.table_group, build("C2^2")));
  CHECK(isomorphic(*automorphism_group(cyclic(16)).table_group, build("C4 x C2")));
  CHECK(isomorphic(*automorphism_group(build("C8 x C3")).table_group, build("C2^3")));
}

TEST_CASE("automorphism caps") {
  Caps caps;
  caps.max_aut_maps = 10;
  auto aut = automorphism_group(build("C2^3"), caps);
  CHECK(aut.truncated);
  CHECK_FALSE(aut.table_group);
  auto limited = automorphism_group(build("C2^3"), {}, 20);
  CHECK(limited.truncated);
  CHECK_THROWS_AS(inner_automorphisms(aut), CapExceeded);
}

TEST_CASE("inner automorphisms two ways") {
  for (const char* spec : kSample) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    auto inn = inner_automorphism_group(g);
    CHECK(inn.order() * center(g).size() == g.order());
    auto aut = automorphism_group(g);
    if (aut.table_group) CHECK(isomorphic(inn, as_group(inner_automorphisms(aut))));
  }
}

TEST_CASE("construction properties") {
  for (const char* spec : kSample) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    auto lat = all_subgroups(g);
    auto aut = automorphism_group(g);
    REQUIRE_FALSE(aut.truncated);

    auto z = center(g), d = derived(g), phi = frattini(g, lat), fit = fitting(g, lat);
    auto cd = cd_lattice(g, lat);
    auto m = chermak_delgado_subgroup(cd);
    for (const auto* k : {&z, &d, &phi, &fit, &m}) {
      CHECK(g.order() % k->size() == 0);
      CHECK(invariant(aut, *k));
    }
    CHECK(as_group(z).is_abelian());
    CHECK(quotient(g, d).is_abelian());
    for (auto i : lat.maximal_ids) CHECK(phi.subgroup_of(lat.subgroups[i]));
    CHECK(is_nilpotent(as_group(fit)));
    CHECK(fit == fitting_by_pcores(g, lat));
    CHECK(as_group(m).is_abelian());
    CHECK(z.subgroup_of(m));
    for (const auto& member : cd.members) {
      CHECK(cd_measure(g, member) == cd.max_measure);
      CHECK(m.subgroup_of(member));
    }
    if (g.is_abelian()) {
      CHECK(z.size() == g.order());
      CHECK(m.size() == g.order());
    }
  }
}

TEST_CASE("frattini by powers agrees on p-groups") {
  for (const char* spec : {"C8", "Q8", "Dih4", "C4 x C2", "He3", "C2 x Q8", "wr2(C2) x C2", "C9 x C3", "Q16"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    CHECK(frattini(g, all_subgroups(g)) == frattini_by_powers(g));
  }
}

TEST_CASE("eval_construction wrapper") {
  CHECK(isomorphic(eval_construction(Construction::D, symmetric(4)), alternating(4)));
  CHECK(isomorphic(eval_construction(Construction::Aut, cyclic(8)), build("C2^2")));
  CHECK(isomorphic(eval_construction(Construction::Inn, symmetric(4)), symmetric(4)));
  CHECK(isomorphic(eval_construction(Construction::Phi, cyclic(25)), cyclic(5)));
  CHECK(eval_construction(Construction::M, build("Q8")).order() == 2);
  CHECK(isomorphic(eval_construction(Construction::Z, build("C2 x S3")), cyclic(2)));
  CHECK(isomorphic(eval_construction(Construction::F, sl23()), build("Q8")));
  Caps caps;
  caps.max_aut_table = 100;
  CHECK_THROWS_AS(eval_construction(Construction::Aut, build("C2^3"), caps), CapExceeded);
}
