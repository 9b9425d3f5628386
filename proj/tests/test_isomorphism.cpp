#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "invgrp/claims.hpp"
#include "invgrp/families.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

// Same group with ids 1..n-1 permuted at random.
FiniteGroup shuffled(const FiniteGroup& g, std::uint32_t seed) {
  const std::size_t n = g.order();
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), ElementId{0});
  std::mt19937 rng(seed);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[p[a] * n + p[b]] = p[g.mul(ElementId(a), ElementId(b))];
  return FiniteGroup(n, std::move(t), g.spec() + "'");
}

const char* kOrder8[] = {"C8", "C4 x C2", "C2^3", "Dih4", "Q8"};

}  // namespace

TEST_CASE("fingerprints") {
  auto f = fingerprint(build("Q8"));
  CHECK(f.order == 8);
  CHECK_FALSE(f.abelian);
  CHECK(f.exponent == 4);
  CHECK(f.center_order == 2);
  CHECK(f.derived_order == 2);
  CHECK(f.conjugacy_class_count == 5);
  CHECK(f.element_order_histogram == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {4, 6}});
  auto s4 = fingerprint(symmetric(4));
  CHECK(s4.conjugacy_class_count == 5);
  CHECK(s4.derived_order == 12);
  CHECK(s4.center_order == 1);
  CHECK(fingerprint(alternating(5)).conjugacy_class_count == 5);
  CHECK(fingerprint(cyclic(7)).conjugacy_class_count == 7);
}

TEST_CASE("agreement with the bijection oracle up to order 8") {
  std::vector<FiniteGroup> groups;
  for (const char* s : {"C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "S3", "C7"}) groups.push_back(build(s));
  for (const char* s : kOrder8) groups.push_back(build(s));
  const std::size_t originals = groups.size();
  for (std::size_t i = 0; i < originals; ++i) groups.push_back(shuffled(groups[i], std::uint32_t(i)));
  for (const auto& a : groups)
    for (const auto& b : groups) {
      if (a.order() != b.order()) continue;
      CAPTURE(a.spec());
      CAPTURE(b.spec());
      auto found = find_isomorphism(a, b);
      CHECK(found.has_value() == isomorphic_by_bijections(a, b));
      if (found) CHECK(is_isomorphism(a, b, found->map));
    }
}

TEST_CASE("symmetry and determinism") {
  std::vector<FiniteGroup> groups;
  for (const char* s : {"Dic3", "C6 x C2", "A4", "Dih6", "C12", "wr2(C3)", "C3 x S3", "C3^2 x C2"})
    groups.push_back(build(s));
  for (const auto& a : groups)
    for (const auto& b : groups) {
      if (a.order() != b.order()) continue;
      CHECK(isomorphic(a, b) == isomorphic(b, a));
      auto m1 = find_isomorphism(a, b), m2 = find_isomorphism(a, b);
      CHECK(m1.has_value() == m2.has_value());
      if (m1) CHECK(m1->map == m2->map);
    }
  CHECK(isomorphic(build("wr2(C3)"), build("C3^2 x C2")) == false);
}

TEST_CASE("known isomorphisms") {
  CHECK(isomorphic(units(8), build("C2^2")));
  CHECK(isomorphic(units(15), build("C4 x C2")));
  CHECK(isomorphic(build("Dic2"), build("Q8")));
  CHECK(isomorphic(build("C2 x C3 x C5"), build("C30")));
  CHECK(isomorphic(shuffled(sl23(), 3), sl23()));
  CHECK(isomorphic(shuffled(build("C2 x Q8 x C2"), 9), build("Q8 x C2^2")));
  CHECK_FALSE(isomorphic(build("C4 x C4"), build("C2 x C8")));
  CHECK_FALSE(isomorphic(build("He3"), build("C9 x C3")));
  auto a = build("C4 x Q8"), b = build("C4 x Dih4");
  CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("larger groups via individualization") {
  auto g = build("Q8 x C2^2");
  for (std::uint32_t seed : {1u, 2u}) {
    auto h = shuffled(g, seed);
    auto m = find_isomorphism(g, h);
    REQUIRE(m);
    CHECK(is_isomorphism(g, h, m->map));
  }
  auto w = build("wr2(C4)");
  CHECK(isomorphic(w, shuffled(w, 5)));
  CHECK_FALSE(isomorphic(w, build("C4 x Dih4")));
  CHECK(isomorphic(build("S3 x S3 x C2"), shuffled(build("C2 x S3^2"), 4)));
}

TEST_CASE("deepened colourings") {
  for (const char* spec : {"Q8 x C2^2", "wr2(C4)", "C2 x S3^2", "He3 x C3"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    auto h = shuffled(g, 11);
    auto rg = refined_colouring(g), rh = refined_colouring(h);
    CHECK(rg.hash == rh.hash);
    const auto& dg = rg.deepened(g);
    CHECK(dg.hash == rh.deepened(h).hash);
    CHECK(&dg == &RefinedColouring(rg).deepened(g));
    // The deepened colouring refines the plain one.
    std::map<std::uint32_t, std::uint32_t> coarser;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto it = coarser.emplace(dg.colours[x], rg.colours[x]).first;
      CHECK(it->second == rg.colours[x]);
    }
  }
}

TEST_CASE("order 128 pairs that plain refinement cannot separate") {
  std::pair<const char*, const char*> pairs[] = {
      {"sd(C4 x C4, Q8, [1: 0 3 2 1 12 15 14 13 8 11 10 9 4 7 6 5; 4: 0 9 2 11 14 7 12 5 8 1 10 3 6 15 4 13])",
       "sd(C4 x C4, Q8, [1: 0 3 2 1 14 13 12 15 8 11 10 9 6 5 4 7; 4: 0 9 2 11 6 15 4 13 8 1 10 3 14 7 12 5])"},
      {"sd(C2 x C2 x C2, Q8, [1: 0 1 2 3 5 4 7 6; 4: 0 1 2 3 6 7 4 5]) x C2",
       "sd(sd(C4 x C2, C4, [1: 0 1 3 2 4 5 7 6]), C2 x C2, [1: 0 7 2 5 4 3 6 1 28 27 30 25 24 31 26 29 16 23 18 21 20 "
       "19 22 17 12 11 14 9 8 15 10 13; 2: 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 "
       "28 29 30 31])"},
  };
  for (auto [x, y] : pairs) {
    auto a = build(x), b = build(y);
    REQUIRE(a.order() == 128);
    CHECK(fingerprint(a) == fingerprint(b));
    auto ra = refined_colouring(a), rb = refined_colouring(b);
    CHECK(ra.hash == rb.hash);
    CHECK(ra.deepened(a).hash != rb.deepened(b).hash);
    CHECK_FALSE(find_isomorphism_refined(a, ra, b, rb));
    CHECK(isomorphic(b, shuffled(b, 2)));
  }
}

TEST_CASE("iso classes of subgroup lattices") {
  auto classes_of = [](const FiniteGroup& g) {
    std::vector<FiniteGroup> subs;
    for (const auto& k : all_subgroups(g).subgroups) subs.push_back(as_group(k));
    return iso_class_representatives(subs).size();
  };
  CHECK(classes_of(build("Q8")) == 4);   // 1, C2, C4, Q8
  CHECK(classes_of(symmetric(4)) == 9);  // 1, C2, C3, C4, V4, S3, D4, A4, S4
}

TEST_CASE("is_isomorphism rejects bad maps") {
  auto c4 = cyclic(4);
  CHECK(is_isomorphism(c4, c4, {0, 3, 2, 1}));
  CHECK_FALSE(is_isomorphism(c4, c4, {0, 2, 1, 3}));
  CHECK_FALSE(is_isomorphism(c4, c4, {0, 1, 1, 3}));
  CHECK_FALSE(is_isomorphism(c4, c4, {1, 0, 3, 2}));
}
