#include <doctest.h>

#include <algorithm>
#include <set>

#include "invgrp/families.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

// Every subset containing the identity that is closed under multiplication.
std::size_t brute_force_subgroup_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> b & 1) && !(mask >> g.mul(ElementId(a), ElementId(b)) & 1)) closed = false;
    }
    count += closed;
  }
  return count;
}

// Distinct closures of element pairs; complete for groups whose subgroups
// are all 2-generated.
std::set<std::vector<ElementId>> two_generated(const FiniteGroup& g) {
  std::set<std::vector<ElementId>> out;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b)
      out.insert(closure(g, std::vector<ElementId>{ElementId(a), ElementId(b)}).ids());
  return out;
}

}  // namespace

TEST_CASE("lattice sizes against subset enumeration") {
  for (const char* spec : {"C1", "C2", "C6", "Q8", "Dih4", "C2^3", "S3", "C4 x C2", "Dih5", "Dic3", "A4"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    if (g.order() > 12) continue;
    CHECK(all_subgroups(g).subgroups.size() == brute_force_subgroup_count(g));
  }
  CHECK(all_subgroups(build("Q8")).subgroups.size() == 6);
}

TEST_CASE("S4 has 30 subgroups in 11 conjugacy classes") {
  auto s4 = symmetric(4);
  auto lat = all_subgroups(s4);
  CHECK(lat.subgroups.size() == 30);
  CHECK(two_generated(s4).size() == 30);
  CHECK(lat.conjugacy_classes.size() == 11);
  std::multiset<std::size_t> order2;
  for (const auto& cls : lat.conjugacy_classes)
    if (lat.subgroups[cls.front()].size() == 2) order2.insert(cls.size());
  CHECK(order2 == std::multiset<std::size_t>{3, 6});
  CHECK(lat.normal_ids.size() == 4);
  CHECK(lat.maximal_ids.size() == 8);  // A4, three D4, four S3
}

TEST_CASE("lattice invariants") {
  for (const char* spec : {"S4", "Dic3 x C2", "He3", "C2 x Q8", "SL23", "wr2(C3)"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    auto lat = all_subgroups(g);
    CHECK(lat.trivial().size() == 1);
    CHECK(lat.whole().size() == g.order());
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
      const auto& k = lat.subgroups[i];
      CHECK(g.order() % k.size() == 0);
      CHECK(closure(g, lat.generators[i]) == k);
      CHECK(lat.index_of(k.members()) == i);
      if (i) CHECK(lat.subgroups[i - 1].size() <= k.size());
    }
    // Closed under intersection and join.
    for (std::size_t i = 0; i < lat.subgroups.size(); i += 3)
      for (std::size_t j = 0; j < lat.subgroups.size(); j += 5) {
        CHECK(lat.index_of(intersect(lat.subgroups[i], lat.subgroups[j]).members()).has_value());
        CHECK(lat.index_of(join(lat.subgroups[i], lat.subgroups[j]).members()).has_value());
      }
    // Normal subgroups are exactly the singleton classes.
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
      CHECK(lat.is_normal(i) == is_normal(g, lat.subgroups[i]));
    // Classes partition the lattice into equal-order orbits whose sizes divide |G|.
    std::size_t total = 0;
    for (const auto& cls : lat.conjugacy_classes) {
      total += cls.size();
      CHECK(g.order() % cls.size() == 0);
      for (auto i : cls) CHECK(lat.subgroups[i].size() == lat.subgroups[cls.front()].size());
    }
    CHECK(total == lat.subgroups.size());
    // Maximal: no proper subgroup strictly between.
    for (auto m : lat.maximal_ids) {
      CHECK(lat.subgroups[m].size() < g.order());
      for (const auto& k : lat.subgroups)
        if (lat.subgroups[m].subgroup_of(k)) CHECK((k == lat.subgroups[m] || k.size() == g.order()));
    }
  }
}

TEST_CASE("subgroup cap") {
  Caps caps;
  caps.max_subgroups = 10;
  CHECK_THROWS_AS(all_subgroups(symmetric(4), caps), CapExceeded);
}

TEST_CASE("sylow subgroups") {
  auto lat = all_subgroups(symmetric(4));
  CHECK(sylow_subgroups(lat, 2).size() == 3);
  CHECK(sylow_subgroups(lat, 3).size() == 4);
  CHECK(sylow_subgroups(lat, 5).size() == 1);  // trivial
  auto a5 = all_subgroups(alternating(5));
  CHECK(sylow_subgroups(a5, 5).size() == 6);
  CHECK(sylow_subgroups(a5, 2).size() == 5);
}

TEST_CASE("nilpotency by two routes") {
  for (const char* spec : {"C1", "C12", "Q8", "Dih4", "He3", "C2 x Q8", "S3", "A4", "S4", "Dic3", "Dih8", "SL23"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    CHECK(is_nilpotent(g) == is_nilpotent_by_sylow(all_subgroups(g)));
  }
  CHECK(is_nilpotent(build("Dih8")));
  CHECK_FALSE(is_nilpotent(build("Dih6")));
  auto lcs = lower_central_series(symmetric(4));
  REQUIRE(lcs.size() == 2);
  CHECK(lcs[1].size() == 12);
  CHECK(lower_central_series(build("Dih8")).back().size() == 1);
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(360) == std::vector<std::size_t>{2, 3, 5});
  CHECK(prime_divisors(97) == std::vector<std::size_t>{97});
}
