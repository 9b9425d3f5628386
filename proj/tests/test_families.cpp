#include <doctest.h>

#include <map>

#include "invgrp/families.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t x = 0; x < g.order(); ++x) ++h[g.element_order(ElementId(x))];
  return h;
}

std::size_t gcd(std::size_t a, std::size_t b) { return b ? gcd(b, a % b) : a; }

}  // namespace

TEST_CASE("family orders") {
  CHECK(cyclic(12).order() == 12);
  CHECK(units(15).order() == 8);
  CHECK(units(1).order() == 1);
  CHECK(elementary_abelian(3, 2).order() == 9);
  CHECK(dihedral(5).order() == 10);
  CHECK(dicyclic(3).order() == 12);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(5).order() == 60);
  CHECK(heisenberg(3).order() == 27);
  CHECK(sl23().order() == 24);
  CHECK(wreath_with_c2(cyclic(3)).order() == 18);
}

TEST_CASE("element order histograms") {
  using H = std::map<std::size_t, std::size_t>;
  CHECK(order_histogram(dihedral(4)) == H{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_histogram(dicyclic(2)) == H{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_histogram(alternating(4)) == H{{1, 1}, {2, 3}, {3, 8}});
  CHECK(order_histogram(sl23()) == H{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
  CHECK(order_histogram(heisenberg(3)) == H{{1, 1}, {3, 26}});
  CHECK(order_histogram(symmetric(4)) == H{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  CHECK(order_histogram(units(8)) == H{{1, 1}, {2, 3}});
}

TEST_CASE("cyclic element orders match n / gcd(n, k)") {
  for (std::size_t n : {1u, 2u, 9u, 30u, 64u}) {
    auto g = cyclic(n);
    for (std::size_t k = 0; k < n; ++k) CHECK(g.element_order(ElementId(k)) == n / gcd(n, k));
  }
}

TEST_CASE("abelian and nonabelian families") {
  CHECK(units(21).is_abelian());
  CHECK(elementary_abelian(2, 4).is_abelian());
  CHECK_FALSE(dihedral(3).is_abelian());
  CHECK(dihedral(2).is_abelian());
  CHECK_FALSE(heisenberg(5).is_abelian());
  CHECK_FALSE(wreath_with_c2(cyclic(2)).is_abelian());
}

TEST_CASE("small coincidences") {
  CHECK(isomorphic(dihedral(3), symmetric(3)));
  CHECK(isomorphic(wreath_with_c2(cyclic(2)), dihedral(4)));
  CHECK(isomorphic(units(8), elementary_abelian(2, 2)));
  CHECK(isomorphic(units(9), cyclic(6)));
  CHECK(isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  CHECK_FALSE(isomorphic(direct_product(cyclic(2), cyclic(2)), cyclic(4)));
  CHECK_FALSE(isomorphic(dihedral(4), dicyclic(2)));
  CHECK_FALSE(isomorphic(sl23(), symmetric(4)));
}

TEST_CASE("family argument validation") {
  CHECK_THROWS_AS(elementary_abelian(4, 2), ValidationError);
  CHECK_THROWS_AS(heisenberg(9), ValidationError);
  CHECK_THROWS_AS(cyclic(0), ValidationError);
  CHECK_THROWS_AS(cyclic(1000), CapExceeded);
  Caps small;
  small.max_order = 50;
  CHECK_THROWS_AS(symmetric(5, small), CapExceeded);
  CHECK_THROWS_AS(direct_product(cyclic(10), cyclic(10), small), CapExceeded);
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic(3), c2 = cyclic(2);
  Perm inversion = {0, 2, 1};
  auto act = extend_action(c3, c2, {{1, inversion}});
  CHECK(act.images.size() == 2);
  auto g = semidirect_product(c3, c2, act);
  CHECK(isomorphic(g, symmetric(3)));

  Perm identity = {0, 1, 2};
  CHECK(isomorphic(semidirect_product(c3, c2, extend_action(c3, c2, {{1, identity}})), cyclic(6)));

  // C4 acting by inversion on C3 gives Dic3.
  auto c4 = cyclic(4);
  CHECK(isomorphic(semidirect_product(c3, c4, extend_action(c3, c4, {{1, inversion}})), dicyclic(3)));

  Perm not_aut = {0, 1, 1};
  CHECK_FALSE(is_automorphism(c3, not_aut));
  CHECK_THROWS_AS(extend_action(c3, c2, {{1, not_aut}}), ValidationError);
  // An element of order 2 cannot act with order 4.
  auto c5 = cyclic(5);
  Perm times2 = {0, 2, 4, 1, 3};
  CHECK(is_automorphism(c5, times2));
  CHECK_THROWS_AS(extend_action(c5, c2, {{1, times2}}), ValidationError);
  // The faithful action gives the Frobenius group of order 20, which has trivial centre.
  auto f20 = semidirect_product(c5, c4, extend_action(c5, c4, {{1, times2}}));
  CHECK(f20.order() == 20);
  CHECK(centralizer(f20, Subgroup::whole(f20)).size() == 1);
}

TEST_CASE("spec parsing round trip") {
  for (const char* s : {"C6", "U15", "E2^3", "Dih5", "Dic3", "Q8", "Q16", "S4", "A5", "He3", "SL23", "C2 x S3",
                        "wr2(C3)", "(C2 x C3)^2", "C2^3", "wr2(C2 x C2)", "sd(C3, C2, [1: 0 2 1])"}) {
    std::string text = s;
    CAPTURE(text);
    auto spec = parse_spec(s);
    CHECK(spec.to_string() == s);
    CHECK(parse_spec(spec.to_string()) == spec);
  }
  CHECK(parse_spec("  C2x  C3 ").to_string() == "C2 x C3");
  CHECK(parse_spec("Dic2").to_string() == "Q8");
  CHECK(parse_spec("(S3)").to_string() == "S3");
}

TEST_CASE("spec parse errors") {
  for (const char* s : {"", "C", "X5", "C2 x", "Q12", "E2", "wr2(C2", "C2^0", "sd(C3, C2)", "sd(C3, C2, [1 0 2 1])",
                        "C2 C3"}) {
    std::string text = s;
    CAPTURE(text);
    CHECK_THROWS_AS(parse_spec(s), ParseError);
  }
}

TEST_CASE("built groups carry their canonical spec") {
  CHECK(build("C2 x  C3").spec() == "C2 x C3");
  CHECK(build("Dic2").spec() == "Q8");
  CHECK(build("sd(C3, C2, [1: 0 2 1])").order() == 6);
  CHECK_THROWS_AS(build("sd(C3, C2, [1: 0 1 1])"), ValidationError);
}

TEST_CASE("actions format and parse") {
  auto gens = parse_action("1: 0 2 1; 2: 0 1 2");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].first == 1);
  CHECK(gens[0].second == std::vector<ElementId>{0, 2, 1});
  CHECK(format_action(gens) == "[1: 0 2 1; 2: 0 1 2]");
  CHECK(parse_action(format_action(gens)) == gens);
}
