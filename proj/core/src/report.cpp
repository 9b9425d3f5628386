#include "invgrp/report.hpp"

#include <cstdio>

namespace invgrp {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json to_json(const Fingerprint& f) {
  Json hist = Json::array();
  for (auto [o, c] : f.element_order_histogram) hist.push_back({o, c});
  return {{"order", f.order},
          {"abelian", f.abelian},
          {"exponent", f.exponent},
          {"element_orders", hist},
          {"center_order", f.center_order},
          {"derived_order", f.derived_order},
          {"classes", f.conjugacy_class_count}};
}

std::string describe(const Fingerprint& f) {
  std::string s = "order " + std::to_string(f.order) + (f.abelian ? ", abelian" : ", nonabelian") + ", orders {";
  bool first = true;
  for (auto [o, c] : f.element_order_histogram) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  return s + "}";
}

Json to_json(const SubgroupLattice& lat) {
  Json subs = Json::array();
  std::vector<char> maximal(lat.subgroups.size(), 0);
  for (auto i : lat.maximal_ids) maximal[i] = 1;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    subs.push_back({{"members", lat.subgroups[i].ids()},
                    {"generators", lat.generators[i]},
                    {"normal", lat.is_normal(i)},
                    {"maximal", bool(maximal[i])},
                    {"class", lat.class_of[i]}});
  }
  return {{"group", lat.parent.spec()},
          {"order", lat.parent.order()},
          {"table_hash", hex64(lat.parent.table_hash())},
          {"subgroup_count", lat.subgroups.size()},
          {"class_count", lat.conjugacy_classes.size()},
          {"subgroups", subs}};
}

SubgroupLattice lattice_from_json(const FiniteGroup& g, const Json& j) {
  if (j.at("order").get<std::size_t>() != g.order() || j.at("table_hash").get<std::string>() != hex64(g.table_hash()))
    throw ValidationError("lattice data belongs to a different group");
  SubgroupLattice lat;
  lat.parent = g;
  const auto& subs = j.at("subgroups");
  std::size_t classes = j.at("class_count").get<std::size_t>();
  lat.conjugacy_classes.resize(classes);
  for (const auto& s : subs) {
    auto ids = s.at("members").get<std::vector<ElementId>>();
    auto gens = s.at("generators").get<std::vector<ElementId>>();
    for (auto x : ids)
      if (x >= g.order()) throw ValidationError("lattice member out of range");
    Subgroup k(g, ids);
    if (closure(g, gens) != k) throw ValidationError("lattice generators do not match members");
    std::size_t idx = lat.subgroups.size();
    std::size_t cls = s.at("class").get<std::size_t>();
    if (cls >= classes) throw ValidationError("lattice class id out of range");
    lat.lookup.emplace(k.members(), idx);
    lat.subgroups.push_back(std::move(k));
    lat.generators.push_back(std::move(gens));
    lat.class_of.push_back(cls);
    lat.conjugacy_classes[cls].push_back(idx);
    if (s.at("maximal").get<bool>()) lat.maximal_ids.push_back(idx);
  }
  if (lat.subgroups.size() != j.at("subgroup_count").get<std::size_t>())
    throw ValidationError("lattice subgroup count mismatch");
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (lat.is_normal(i)) lat.normal_ids.push_back(i);
  return lat;
}

Json to_json(const CdLattice& cd) {
  Json members = Json::array();
  for (const auto& m : cd.members) members.push_back(m.ids());
  return {{"group", cd.parent.spec()}, {"max_measure", cd.max_measure}, {"members", members}};
}

Json to_json(const AutGroup& aut) {
  auto gens = greedy_generators(aut.base);
  Json images = Json::array();
  for (const auto& p : aut.automorphisms) {
    Json row = Json::array();
    for (auto x : gens) row.push_back(p[x]);
    images.push_back(row);
  }
  Json j{{"group", aut.base.spec()},
         {"order", aut.count()},
         {"truncated", aut.truncated},
         {"inner_order", aut.inner_ids.size()},
         {"generators", gens},
         {"generator_images", images}};
  if (aut.table_group) j["table_hash"] = hex64(aut.table_group->table_hash());
  return j;
}

Json construction_json(Construction f, const FiniteGroup& h, const EvalOutcome& outcome) {
  Json j{{"construction", to_string(f)}, {"group", h.spec()}};
  switch (outcome.status) {
    case EvalStatus::Ok: j["status"] = "ok"; break;
    case EvalStatus::TooLarge: j["status"] = "too_large"; break;
    case EvalStatus::Capped: j["status"] = "capped"; break;
  }
  if (!outcome.note.empty()) j["note"] = outcome.note;
  if (outcome.subgroup) j["members"] = outcome.subgroup->ids();
  if (outcome.group) {
    j["order"] = outcome.group->order();
    j["table_hash"] = hex64(outcome.group->table_hash());
  }
  return j;
}

namespace {

Json skips_json(const std::vector<Skip>& skips) {
  Json out = Json::array();
  for (const auto& s : skips) out.push_back({{"spec", s.spec}, {"reason", s.reason}});
  return out;
}

Json matches_json(const std::vector<SubgroupMatch>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back({{"target", m.target_subgroup}, {"host", m.host_subgroup}, {"map", m.map}});
  return out;
}

Json unmatched_json(const std::vector<Unmatched>& us) {
  Json out = Json::array();
  for (const auto& u : us) {
    Json j{{"subgroup", u.subgroup}, {"description", u.description}, {"order", u.order}};
    if (u.group) j["table_hash"] = hex64(u.group->table_hash());
    out.push_back(j);
  }
  return out;
}

}  // namespace

Json to_json(const SearchResult& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back({{"spec", h.spec}, {"order", h.order}, {"isomorphism", h.map}});
  return {{"hits", hits}, {"skipped", skips_json(r.skipped)}};
}

Json to_json(const RealisabilityReport& r) {
  return {{"construction", to_string(r.f)},
          {"target", r.target},
          {"host", r.host},
          {"verdict", to_string(r.overall())},
          {"condition_i", to_string(r.cond_i)},
          {"condition_ii", to_string(r.cond_ii)},
          {"condition_iii", to_string(r.cond_iii)},
          {"isomorphism_i", r.iso_i},
          {"target_classes", r.target_classes},
          {"host_classes", r.host_classes},
          {"witnesses_ii", matches_json(r.witnesses_ii)},
          {"witnesses_iii", matches_json(r.witnesses_iii)},
          {"failures_ii", unmatched_json(r.failures_ii)},
          {"failures_iii", unmatched_json(r.failures_iii)},
          {"skipped", skips_json(r.skipped)}};
}

Json to_json(const CompleteSearchResult& r) {
  Json passing = Json::array(), failing = Json::array();
  for (const auto& [spec, rep] : r.passing) passing.push_back(to_json(rep));
  for (const auto& [spec, rep] : r.failing) failing.push_back(to_json(rep));
  return {{"passing", passing}, {"failing", failing}, {"skipped", skips_json(r.skipped)}};
}

Json to_json(const FrattiniCriterion& c) {
  return {{"holds", c.holds}, {"inn_order", c.inn_order}, {"frattini_order", c.frattini_order}, {"aut_order", c.aut_order}};
}

Json catalog_index(const Catalog& c) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    entries.push_back({{"spec", e.spec},
                       {"order", e.group.order()},
                       {"file", std::to_string(i) + ".mt"},
                       {"table_hash", hex64(e.group.table_hash())},
                       {"fingerprint", to_json(e.fingerprint)}});
  }
  Json completeness = Json::object();
  for (std::size_t n = 1; n <= c.max_order; ++n)
    completeness[std::to_string(n)] =
        c.completeness[n] == Completeness::Complete ? "complete" : "constructible-only";
  Json notes = Json::array();
  for (const auto& n : c.notes) notes.push_back(n);
  return {{"max_order", c.max_order}, {"completeness", completeness}, {"notes", notes}, {"entries", entries}};
}

}  // namespace invgrp
