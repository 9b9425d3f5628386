#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "invgrp/constructions.hpp"
#include "invgrp/families.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/realisability.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace fs = std::filesystem;

namespace {

const Catalog& catalog24() {
  static const Catalog c = build_catalog(24);
  return c;
}

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("invgrp-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> hit_specs(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& h : r.hits) out.push_back(h.spec);
  return out;
}

}  // namespace

TEST_CASE("known counts") {
  CHECK(known_group_count(1) == 1u);
  CHECK(known_group_count(16) == 14u);
  CHECK(known_group_count(24) == 15u);
  CHECK(known_group_count(64) == 267u);
  CHECK(known_group_count(128) == 2328u);
  CHECK_FALSE(known_group_count(129));
}

TEST_CASE("catalog through 24 is complete") {
  const auto& cat = catalog24();
  CHECK(cat.max_order == 24);
  CHECK(cat.complete_through(24));
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(cat.count_of_order(n) == known_group_count(n));
    total += cat.count_of_order(n);
  }
  CHECK(total == cat.entries.size());
  CHECK(cat.slice(8).entries.size() == 14);
  // Pairwise non-isomorphic within each order.
  for (std::size_t n : {8u, 12u, 16u, 24u}) {
    auto list = cat.of_order(n);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) CHECK_FALSE(isomorphic(list[i]->group, list[j]->group));
  }
}

TEST_CASE("skipping split acting groups loses nothing through 48") {
  CatalogOptions all;
  all.skip_split_acting_groups = false;
  auto a = build_catalog(48, all);
  auto b = build_catalog(48);
  for (std::size_t n = 1; n <= 48; ++n) {
    CAPTURE(n);
    CHECK(a.count_of_order(n) == b.count_of_order(n));
  }
  CHECK(b.count_of_order(32) == 48);
}

TEST_CASE("order 12 classes") {
  auto list = catalog24().of_order(12);
  for (const char* spec : {"C12", "C6 x C2", "A4", "Dih6", "Dic3"}) {
    std::string name = spec;
    CAPTURE(name);
    auto g = build(spec);
    CHECK(std::count_if(list.begin(), list.end(), [&](auto* e) { return isomorphic(e->group, g); }) == 1);
  }
  std::set<std::string> names;
  for (auto* e : list) names.insert(e->spec);
  CHECK(names.count("A4"));
  CHECK(names.count("Dic3"));
}

TEST_CASE("catalog entries are built from their specs") {
  for (const auto& e : catalog24().entries) {
    CAPTURE(e.spec);
    auto g = build(e.spec);
    CHECK(g.order() == e.group.order());
    CHECK(fingerprint(g) == e.fingerprint);
  }
}

TEST_CASE("extending matches building in one go") {
  auto a = build_catalog(16);
  auto b = extend_catalog(build_catalog(10), 16);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].spec == b.entries[i].spec);
    CHECK(a.entries[i].group.same_table(b.entries[i].group));
  }
}

TEST_CASE("catalog save and load") {
  auto dir = scratch_dir("catalog");
  auto cat = build_catalog(12);
  save_catalog(cat, dir);
  auto back = load_catalog(dir);
  REQUIRE(back);
  CHECK(back->max_order == 12);
  REQUIRE(back->entries.size() == cat.entries.size());
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(back->entries[i].spec == cat.entries[i].spec);
    CHECK(back->entries[i].group.same_table(cat.entries[i].group));
  }
  CHECK(back->completeness == cat.completeness);
  CHECK_FALSE(load_catalog(dir / "missing"));
  fs::remove_all(dir);
}

TEST_CASE("lattice cache") {
  auto dir = scratch_dir("lattice");
  auto s4 = symmetric(4);
  {
    Engine engine({Caps{}, 1, dir});
    auto lat = engine.lattice(s4);
    CHECK(lat->subgroups.size() == 30);
    CHECK(engine.lattice(s4) == lat);
  }
  CHECK(std::distance(fs::directory_iterator(dir / "lattices"), fs::directory_iterator()) == 1);
  Engine again({Caps{}, 1, dir});
  auto lat = again.lattice(s4);
  CHECK(lat->subgroups.size() == 30);
  CHECK(lat->conjugacy_classes.size() == 11);
  fs::remove_all(dir);
}

TEST_CASE("searches") {
  Engine engine;
  const auto& cat = catalog24();
  auto a4 = find_realisations(engine, alternating(4), Construction::D, cat);
  CHECK(hit_specs(a4) == std::vector<std::string>{"S4"});
  CHECK(a4.skipped.empty());
  auto q8 = find_realisations(engine, build("Q8"), Construction::D, cat);
  CHECK(hit_specs(q8) == std::vector<std::string>{"SL23"});
  CHECK(find_realisations(engine, symmetric(3), Construction::D, cat).hits.empty());

  // D(H) = 1 exactly for abelian H.
  auto trivial = find_realisations(engine, FiniteGroup(), Construction::D, cat);
  std::size_t abelian = std::count_if(cat.entries.begin(), cat.entries.end(), [](auto& e) { return e.fingerprint.abelian; });
  CHECK(trivial.hits.size() == abelian);

  auto c2 = find_realisations(engine, cyclic(2), Construction::Aut, cat.slice(12));
  CHECK(hit_specs(c2) == std::vector<std::string>{"C3", "C4", "C6"});

  for (const auto& h : q8.hits) {
    auto img = eval_construction(Construction::D, build(h.spec));
    CHECK(is_isomorphism(img, build("Q8"), h.map));
  }
}

TEST_CASE("search is deterministic across job counts") {
  Engine one({Caps{}, 1, std::nullopt});
  Engine four({Caps{}, 4, std::nullopt});
  auto target = build("C2^2");
  auto a = find_realisations(one, target, Construction::D, catalog24());
  auto b = find_realisations(four, target, Construction::D, catalog24());
  CHECK(hit_specs(a) == hit_specs(b));
  for (std::size_t i = 0; i < a.hits.size() && i < b.hits.size(); ++i) CHECK(a.hits[i].map == b.hits[i].map);
}

TEST_CASE("complete realisability checks") {
  Engine engine;
  auto r = check_completely_realisable(engine, alternating(4), symmetric(4), Construction::D);
  CHECK(r.cond_i == Verdict::True);
  CHECK(r.cond_ii == Verdict::True);
  CHECK(r.cond_iii == Verdict::True);
  CHECK(r.all_true());

  auto s3 = check_completely_realisable(engine, cyclic(3), symmetric(3), Construction::D);
  CHECK(s3.cond_i == Verdict::True);
  CHECK(s3.overall() == Verdict::True);

  auto bad = check_completely_realisable(engine, cyclic(2), cyclic(4), Construction::D);
  CHECK(bad.cond_i == Verdict::False);
  CHECK(bad.overall() == Verdict::False);

  auto a5 = check_completely_realisable(engine, alternating(5), symmetric(5), Construction::D);
  CHECK(a5.cond_i == Verdict::True);
  CHECK(a5.cond_ii == Verdict::False);
  CHECK(std::any_of(a5.failures_ii.begin(), a5.failures_ii.end(), [](const Unmatched& u) { return u.order == 10; }));

  auto aut = check_completely_realisable(engine, build("C2^2"), cyclic(8), Construction::Aut);
  CHECK(aut.all_true());

  auto phi = check_completely_realisable(engine, build("C4 x C2"), build("C8 x C4"), Construction::Phi);
  CHECK(phi.all_true());
}

TEST_CASE("complete search") {
  Engine engine;
  auto r = find_complete_realisations(engine, alternating(4), Construction::D, catalog24());
  REQUIRE(r.passing.size() == 1);
  CHECK(r.passing[0].first == "S4");
  auto q8 = find_complete_realisations(engine, build("Q8"), Construction::D, catalog24(), true);
  CHECK(q8.passing.empty());
  REQUIRE(q8.failing.size() == 1);
  CHECK(q8.failing[0].first == "SL23");
}

TEST_CASE("frattini criterion") {
  Engine engine;
  auto q8 = frattini_criterion(engine, build("Q8"));
  CHECK_FALSE(q8.holds);
  CHECK(q8.inn_order == 4);
  CHECK(q8.frattini_order == 1);
  CHECK(q8.aut_order == 24);
  CHECK(frattini_criterion(engine, build("C2 x Q8")).holds);
  CHECK(frattini_criterion(engine, cyclic(5)).holds);
}

TEST_CASE("caps surface as skips or errors") {
  Caps caps;
  caps.max_aut_maps = 50;
  Engine engine({caps, 1, std::nullopt});
  auto r = find_realisations(engine, build("C2^3"), Construction::Aut, catalog24().slice(16));
  // Aut(C2^4) has more than 50 elements; it is larger than the target, so
  // it is ruled out rather than skipped.
  CHECK(r.skipped.empty());
  CHECK(eval_construction(engine, Construction::Aut, build("C2^3")).status == EvalStatus::Capped);
  CHECK(eval_construction(engine, Construction::Aut, build("C2^3"), 10).status == EvalStatus::TooLarge);
}
