#include <doctest.h>

#include <algorithm>
#include <random>

#include "invgrp/families.hpp"
#include "invgrp/group.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

// Direct checks of the table contract, independent of FiniteGroup's own
// validation.
void check_table_contract(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g.mul(0, ElementId(a)) == a);
    CHECK(g.mul(ElementId(a), 0) == a);
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row[g.mul(ElementId(a), ElementId(b))] = 1;
      col[g.mul(ElementId(b), ElementId(a))] = 1;
    }
    CHECK(std::count(row.begin(), row.end(), 1) == std::ptrdiff_t(n));
    CHECK(std::count(col.begin(), col.end(), 1) == std::ptrdiff_t(n));
    CHECK(g.mul(ElementId(a), g.inv(ElementId(a))) == 0);
    std::size_t k = 1;
    for (ElementId p = ElementId(a); p != 0; p = g.mul(p, ElementId(a))) ++k;
    if (a == 0) k = 1;
    CHECK(g.element_order(ElementId(a)) == k);
    CHECK(n % k == 0);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(ElementId(a), ElementId(b)), ElementId(c)) !=
            g.mul(ElementId(a), g.mul(ElementId(b), ElementId(c)))) {
          FAIL("not associative");
          return;
        }
}

}  // namespace

TEST_CASE("trivial group") {
  FiniteGroup g;
  CHECK(g.order() == 1);
  CHECK(g.is_abelian());
  CHECK(closure(g, std::vector<ElementId>{}).size() == 1);
  CHECK(build("C1").order() == 1);
}

TEST_CASE("table contract holds for built families") {
  for (const char* spec : {"C1", "C7", "U15", "E2^3", "Dih5", "Dic3", "Q16", "S4", "A4", "He3", "SL23", "C2 x S3",
                           "wr2(C3)", "C4^2"}) {
    std::string name = spec;
    CAPTURE(name);
    check_table_contract(build(spec));
  }
}

TEST_CASE("build is deterministic") {
  for (const char* spec : {"S4", "wr2(C4)", "Dic3 x C2", "He3"}) {
    auto a = build(spec), b = build(spec);
    CHECK(a.same_table(b));
    CHECK(a.table_hash() == b.table_hash());
  }
}

TEST_CASE("closure") {
  auto c6 = cyclic(6);
  CHECK(closure(c6, std::vector<ElementId>{1}).size() == 6);
  CHECK(closure(c6, std::vector<ElementId>{2}).size() == 3);
  auto s4 = symmetric(4);
  std::vector<ElementId> comms;
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b) comms.push_back(s4.commutator(ElementId(a), ElementId(b)));
  auto d = closure(s4, comms);
  CHECK(d.size() == 12);
  // Idempotent and contains the seed.
  CHECK(closure(s4, d.ids()) == d);
  for (auto c : comms) CHECK(d.contains(c));
}

TEST_CASE("centralizer") {
  auto q8 = build("Q8");
  CHECK(centralizer(q8, Subgroup::trivial(q8)).size() == 8);
  for (std::size_t x = 0; x < 8; ++x) {
    if (q8.element_order(ElementId(x)) != 4) continue;
    auto k = closure(q8, std::vector<ElementId>{ElementId(x)});
    CHECK(centralizer(q8, k) == k);
  }
  auto c12 = cyclic(12);
  CHECK(centralizer(c12, closure(c12, std::vector<ElementId>{3})).size() == 12);
}

TEST_CASE("join and intersection") {
  auto s4 = symmetric(4);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto a = closure(s4, std::vector<ElementId>{ElementId(rng() % 24)});
    auto b = closure(s4, std::vector<ElementId>{ElementId(rng() % 24)});
    auto j = join(a, b);
    auto m = intersect(a, b);
    CHECK(a.subgroup_of(j));
    CHECK(b.subgroup_of(j));
    CHECK(m.subgroup_of(a));
    CHECK(m.subgroup_of(b));
    CHECK(24 % j.size() == 0);
    CHECK(a.size() % m.size() == 0);
  }
}

TEST_CASE("quotient") {
  auto q8 = build("Q8");
  std::vector<ElementId> central;
  for (std::size_t x = 0; x < 8; ++x) {
    bool c = true;
    for (std::size_t y = 0; y < 8; ++y) c = c && q8.mul(ElementId(x), ElementId(y)) == q8.mul(ElementId(y), ElementId(x));
    if (c) central.push_back(ElementId(x));
  }
  auto z = Subgroup(q8, central);
  auto q = quotient(q8, z);
  CHECK(q.order() == 4);
  CHECK(q.exponent() == 2);
  CHECK(quotient(q8, Subgroup::whole(q8)).order() == 1);
  CHECK(isomorphic(quotient(q8, Subgroup::trivial(q8)), q8));

  auto d3 = dihedral(3);
  auto refl = closure(d3, std::vector<ElementId>{3});
  CHECK_FALSE(is_normal(d3, refl));
  CHECK_THROWS_AS(quotient(d3, refl), ValidationError);
  auto rot = closure(d3, std::vector<ElementId>{1});
  CHECK(is_normal(d3, rot));
  CHECK(quotient(d3, rot).order() * rot.size() == d3.order());
}

TEST_CASE("as_group renumbers with identity first") {
  auto s4 = symmetric(4);
  auto whole = as_group(Subgroup::whole(s4));
  CHECK(whole.same_table(s4));
  CHECK(as_group(Subgroup::trivial(s4)).order() == 1);
  std::vector<ElementId> comms;
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b) comms.push_back(s4.commutator(ElementId(a), ElementId(b)));
  CHECK(isomorphic(as_group(closure(s4, comms)), alternating(4)));
}

TEST_CASE("validate_table rejects broken tables") {
  std::vector<ElementId> not_latin = {0, 1, 1, 1};
  CHECK_THROWS_AS(validate_table(2, not_latin, true), ValidationError);
  std::vector<ElementId> wrong_identity = {1, 0, 0, 1};
  CHECK_THROWS_AS(validate_table(2, wrong_identity, true), ValidationError);
  std::vector<ElementId> c2 = {0, 1, 1, 0};
  CHECK(validate_table(2, c2, true));
  CHECK_THROWS_AS(FiniteGroup(2, not_latin, "bad", true), ValidationError);
}

TEST_CASE("element sets") {
  ElementSet s(130);
  s.set(0);
  s.set(129);
  s.set(64);
  CHECK(s.count() == 3);
  CHECK(s.ids() == std::vector<ElementId>{0, 64, 129});
  ElementSet t(130);
  t.set(64);
  CHECK(t.subset_of(s));
  CHECK_FALSE(s.subset_of(t));
  CHECK((s & t) == t);
  s.reset(129);
  CHECK(s.count() == 2);
}
