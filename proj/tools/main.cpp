// invgrp command-line tool.
//
// Exit codes: 0 success or witness found, 1 clean negative, 2 usage or
// input error, 3 resource cap, 4 negative with skipped entries.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "invgrp/claims.hpp"
#include "invgrp/constructions.hpp"
#include "invgrp/ingest.hpp"
#include "invgrp/realisability.hpp"
#include "invgrp/report.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCapped = 3, kNegativeWithSkips = 4 };

struct Globals {
  std::string format = "table";
  std::size_t jobs = 1;
  std::string catalog_dir;
  std::vector<std::string> caps;
  Caps parsed_caps;

  bool json() const { return format == "json"; }
  std::optional<std::filesystem::path> cache() const {
    if (catalog_dir.empty()) return std::nullopt;
    return std::filesystem::path(catalog_dir);
  }
  EngineOptions engine_options() const {
    EngineOptions e;
    e.caps = parsed_caps;
    e.jobs = jobs;
    e.cache_dir = cache();
    return e;
  }
};

Caps parse_caps(const std::vector<std::string>& overrides) {
  Caps caps;
  const std::map<std::string, std::size_t Caps::*> fields = {
      {"order", &Caps::max_order},         {"subgroups", &Caps::max_subgroups},
      {"aut_maps", &Caps::max_aut_maps},   {"aut_table", &Caps::max_aut_table},
      {"actions", &Caps::max_actions},
  };
  for (const auto& o : overrides) {
    auto eq = o.find('=');
    if (eq == std::string::npos) throw ParseError("cap override '" + o + "' is not key=value");
    auto it = fields.find(o.substr(0, eq));
    if (it == fields.end()) throw ParseError("unknown cap '" + o.substr(0, eq) + "'");
    try {
      caps.*(it->second) = std::stoul(o.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("cap value in '" + o + "' is not a number");
    }
  }
  if (caps.max_order > 768) throw ParseError("the order cap cannot exceed 768");
  return caps;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Catalog name of a group, when the catalog covers its order.
std::string guess(CatalogProvider& catalogs, const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order) return "?";
  const Catalog& cat = catalogs.get(std::max<std::size_t>(g.order(), 1));
  auto fp = fingerprint(g);
  for (const auto* e : cat.of_order(g.order()))
    if (e->fingerprint == fp && find_isomorphism_prefiltered(e->group, g)) return e->spec;
  return "?";
}

int cmd_show(const Globals& gl, const std::string& spec, std::size_t max_order) {
  Engine engine(gl.engine_options());
  CatalogProvider catalogs({}, gl.parsed_caps, gl.cache());
  auto g = build(spec, gl.parsed_caps);
  auto lat = engine.lattice(g);
  auto cd = cd_lattice(g, *lat);
  struct Row {
    std::string name;
    Subgroup sub;
  };
  std::vector<Row> rows = {{"Z", center(g)},
                           {"D", derived(g)},
                           {"Phi", frattini(g, *lat)},
                           {"F", fitting(g, *lat)},
                           {"M", chermak_delgado_subgroup(cd)}};
  const auto fp = fingerprint(g);
  if (gl.json()) {
    Json j{{"spec", g.spec()},
           {"order", g.order()},
           {"table_hash", hex64(g.table_hash())},
           {"fingerprint", to_json(fp)},
           {"isomorphic_to", guess(catalogs, g, max_order)},
           {"subgroups", lat->subgroups.size()},
           {"subgroup_classes", lat->conjugacy_classes.size()},
           {"cd_members", cd.members.size()},
           {"cd_max_measure", cd.max_measure}};
    Json cons = Json::object();
    for (const auto& r : rows)
      cons[r.name] = {{"order", r.sub.size()},
                      {"members", r.sub.ids()},
                      {"isomorphic_to", guess(catalogs, as_group(r.sub), max_order)}};
    j["constructions"] = cons;
    print_json(j);
    return kOk;
  }
  std::cout << g.spec() << "\n"
            << "  order            " << g.order() << "\n"
            << "  fingerprint      " << describe(fp) << ", exponent " << fp.exponent << ", center "
            << fp.center_order << ", derived " << fp.derived_order << ", classes " << fp.conjugacy_class_count << "\n"
            << "  isomorphic to    " << guess(catalogs, g, max_order) << "\n"
            << "  subgroups        " << lat->subgroups.size() << " in " << lat->conjugacy_classes.size()
            << " conjugacy classes\n"
            << "  CD lattice       " << cd.members.size() << " members, m* = " << cd.max_measure << "\n";
  for (const auto& r : rows)
    std::cout << "  " << std::left << std::setw(4) << r.name << " order " << std::setw(6) << r.sub.size()
              << " ~ " << guess(catalogs, as_group(r.sub), max_order) << "\n";
  return kOk;
}

int cmd_aut(const Globals& gl, const std::string& spec, std::size_t max_order) {
  auto g = build(spec, gl.parsed_caps);
  AutGroup aut = automorphism_group(g, gl.parsed_caps);
  CatalogProvider catalogs({}, gl.parsed_caps, gl.cache());
  std::string iso = aut.table_group ? guess(catalogs, *aut.table_group, max_order) : "?";
  if (gl.json()) {
    Json j = to_json(aut);
    j["isomorphic_to"] = iso;
    print_json(j);
  } else {
    std::cout << "Aut(" << g.spec() << ")\n"
              << "  order       " << aut.count() << (aut.truncated ? "+ (enumeration capped)" : "") << "\n"
              << "  inner       " << aut.inner_ids.size() << "\n"
              << "  table       " << (aut.table_group ? "materialized" : "not materialized") << "\n"
              << "  isomorphic  " << iso << "\n";
  }
  return aut.truncated ? kCapped : kOk;
}

int cmd_subgroups(const Globals& gl, const std::string& spec) {
  Engine engine(gl.engine_options());
  auto g = build(spec, gl.parsed_caps);
  auto lat = engine.lattice(g);
  if (gl.json()) {
    print_json(to_json(*lat));
    return kOk;
  }
  std::cout << lat->subgroups.size() << " subgroups of " << g.spec() << " in " << lat->conjugacy_classes.size()
            << " conjugacy classes (" << lat->normal_ids.size() << " normal, " << lat->maximal_ids.size()
            << " maximal)\n";
  std::vector<char> maximal(lat->subgroups.size());
  for (auto i : lat->maximal_ids) maximal[i] = 1;
  for (std::size_t c = 0; c < lat->conjugacy_classes.size(); ++c) {
    const auto& cls = lat->conjugacy_classes[c];
    const auto& rep = lat->subgroups[cls.front()];
    std::cout << "  class " << std::setw(4) << c << "  order " << std::setw(4) << rep.size() << "  size "
              << std::setw(4) << cls.size() << (cls.size() == 1 ? "  normal" : "")
              << (maximal[cls.front()] ? "  maximal" : "") << "\n";
  }
  return kOk;
}

int cmd_cd(const Globals& gl, const std::string& spec) {
  Engine engine(gl.engine_options());
  auto g = build(spec, gl.parsed_caps);
  auto cd = cd_lattice(g, *engine.lattice(g));
  auto m = chermak_delgado_subgroup(cd);
  if (gl.json()) {
    Json j = to_json(cd);
    j["minimal_member"] = m.ids();
    print_json(j);
    return kOk;
  }
  std::cout << "CD(" << g.spec() << "): " << cd.members.size() << " members, m* = " << cd.max_measure
            << ", M has order " << m.size() << "\n";
  for (const auto& k : cd.members) std::cout << "  order " << k.size() << "\n";
  return kOk;
}

int cmd_search(const Globals& gl, const std::string& target, const std::string& f, std::size_t max_order) {
  Engine engine(gl.engine_options());
  CatalogProvider catalogs({}, gl.parsed_caps, gl.cache());
  auto g = build(target, gl.parsed_caps);
  auto con = parse_construction(f);
  const Catalog& cat = catalogs.get(max_order);
  auto r = find_realisations(engine, g, con, cat);
  if (gl.json()) {
    Json j{{"target", g.spec()}, {"construction", to_string(con)}, {"max_order", max_order}};
    j.update(to_json(r));
    j["catalog"] = catalog_index(cat).at("completeness");
    print_json(j);
  } else {
    std::cout << r.hits.size() << " group(s) H with " << to_string(con) << "(H) = " << g.spec() << ", |H| <= "
              << max_order << "\n";
    for (const auto& h : r.hits) std::cout << "  " << h.spec << "  (order " << h.order << ")\n";
    for (const auto& s : r.skipped) std::cout << "  skipped " << s.spec << ": " << s.reason << "\n";
    if (!cat.complete_through(max_order)) {
      std::cout << "  catalog is constructible-only at orders";
      for (std::size_t n = 1; n <= max_order; ++n)
        if (cat.completeness[n] != Completeness::Complete) std::cout << " " << n;
      std::cout << "\n";
    }
  }
  if (!r.hits.empty()) return kOk;
  return r.skipped.empty() ? kNegative : kNegativeWithSkips;
}

void print_report_table(const RealisabilityReport& r) {
  std::cout << "(" << r.target << ", " << r.host << ", " << to_string(r.f) << "): " << to_string(r.overall())
            << "\n  (i)   " << to_string(r.cond_i) << "\n  (ii)  " << to_string(r.cond_ii) << "  over "
            << r.target_classes << " subgroup classes of the target\n  (iii) " << to_string(r.cond_iii) << "  over "
            << r.host_classes << " subgroup classes of the host\n";
  for (const auto& u : r.failures_ii) std::cout << "  unmatched target subgroup: " << u.description << "\n";
  for (const auto& u : r.failures_iii) std::cout << "  unmatched image: " << u.description << "\n";
  for (const auto& s : r.skipped) std::cout << "  skipped " << s.spec << ": " << s.reason << "\n";
}

int cmd_complete(const Globals& gl, const std::string& target, const std::string& f, const std::string& host,
                 std::size_t max_order) {
  Engine engine(gl.engine_options());
  auto g = build(target, gl.parsed_caps);
  auto con = parse_construction(f);
  if (!host.empty()) {
    auto rep = check_completely_realisable(engine, g, build(host, gl.parsed_caps), con);
    if (gl.json())
      print_json(to_json(rep));
    else
      print_report_table(rep);
    switch (rep.overall()) {
      case Verdict::True: return kOk;
      case Verdict::False: return kNegative;
      case Verdict::Unknown: return kNegativeWithSkips;
    }
  }
  CatalogProvider catalogs({}, gl.parsed_caps, gl.cache());
  const Catalog& cat = catalogs.get(max_order);
  auto r = find_complete_realisations(engine, g, con, cat, true);
  if (gl.json()) {
    Json j{{"target", g.spec()}, {"construction", to_string(con)}, {"max_order", max_order}};
    j.update(to_json(r));
    j["catalog"] = catalog_index(cat).at("completeness");
    print_json(j);
  } else {
    std::cout << r.passing.size() << " complete " << to_string(con) << "-realisation(s) of " << g.spec()
              << " with |H| <= " << max_order << "\n";
    for (const auto& [spec, rep] : r.passing) std::cout << "  " << spec << "\n";
    for (const auto& [spec, rep] : r.failing)
      std::cout << "  " << spec << " realises it but fails: ii=" << to_string(rep.cond_ii)
                << " iii=" << to_string(rep.cond_iii) << "\n";
    for (const auto& s : r.skipped) std::cout << "  skipped " << s.spec << ": " << s.reason << "\n";
  }
  if (!r.passing.empty()) return kOk;
  return r.skipped.empty() ? kNegative : kNegativeWithSkips;
}

int cmd_criterion(const Globals& gl, const std::string& spec) {
  Engine engine(gl.engine_options());
  auto g = build(spec, gl.parsed_caps);
  auto c = frattini_criterion(engine, g);
  if (gl.json()) {
    Json j{{"spec", g.spec()}};
    j.update(to_json(c));
    print_json(j);
  } else {
    std::cout << "Inn(" << g.spec() << ") " << (c.holds ? "lies" : "does not lie") << " in Phi(Aut)\n"
              << "  |Aut| = " << c.aut_order << ", |Inn| = " << c.inn_order << ", |Phi(Aut)| = " << c.frattini_order
              << "\n";
  }
  return c.holds ? kOk : kNegative;
}

int cmd_catalog(const Globals& gl, std::size_t max_order, bool list) {
  CatalogProvider catalogs({}, gl.parsed_caps, gl.cache());
  const Catalog& cat = catalogs.get(max_order);
  if (gl.json()) {
    print_json(catalog_index(cat));
    return kOk;
  }
  std::cout << cat.entries.size() << " groups of order <= " << max_order << "\n";
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto known = known_group_count(n);
    std::cout << "  " << std::setw(4) << n << "  " << std::setw(5) << cat.count_of_order(n);
    if (known) std::cout << " / " << std::setw(5) << *known;
    std::cout << (cat.completeness[n] == Completeness::Complete ? "  complete" : "  constructible-only") << "\n";
    if (list)
      for (const auto* e : cat.of_order(n)) std::cout << "          " << e->spec << "\n";
  }
  for (const auto& note : cat.notes) std::cout << "  note: " << note << "\n";
  return kOk;
}

int cmd_verify(const Globals& gl, const std::string& scale, const std::vector<int>& criteria) {
  ClaimRunOptions opt;
  opt.scale = parse_scale(scale);
  opt.jobs = gl.jobs;
  opt.caps = gl.parsed_caps;
  if (auto c = gl.cache()) opt.cache_dir = *c / "verify-paper" / scale;
  opt.criteria = criteria;
  if (!gl.json())
    opt.on_result = [](const ClaimResult& r) {
      std::cout << std::left << std::setw(8) << to_string(r.status) << std::setw(28) << r.id << std::right
                << std::fixed << std::setprecision(2) << std::setw(9) << r.seconds << "s  " << r.statement << "\n";
      std::istringstream lines(r.detail);
      for (std::string line; std::getline(lines, line);) std::cout << "          " << line << "\n";
      std::cout.flush();
    };
  auto results = run_claims(opt);
  auto summary = summarize(results, manifest_criteria());
  bool failed = false;
  for (const auto& c : summary) failed = failed || c.status == ClaimStatus::Fail;
  if (gl.json()) {
    Json claims = Json::array();
    for (const auto& r : results)
      claims.push_back({{"id", r.id},
                        {"criterion", r.criterion},
                        {"status", to_string(r.status)},
                        {"seconds", r.seconds},
                        {"statement", r.statement},
                        {"detail", r.detail}});
    Json crit = Json::array();
    for (const auto& c : summary)
      crit.push_back({{"criterion", c.info.number},
                      {"title", c.info.title},
                      {"status", to_string(c.status)},
                      {"seconds", c.seconds},
                      {"budget_seconds", c.info.budget_seconds},
                      {"over_budget", c.over_budget}});
    print_json({{"scale", scale}, {"criteria", crit}, {"claims", claims}});
  } else {
    std::cout << "\n";
    for (const auto& c : summary)
      std::cout << std::left << std::setw(8) << to_string(c.status) << "criterion " << std::setw(3)
                << c.info.number << std::right << std::setw(9) << std::fixed << std::setprecision(2) << c.seconds
                << "s  " << c.info.title << (c.over_budget ? "  (over budget)" : "") << "\n";
  }
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse problems for finite-group constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", gl.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--catalog", gl.catalog_dir, "Cache directory for catalogs and lattices");
  app.add_option("--cap", gl.caps, "Cap override key=value (order, subgroups, aut_maps, aut_table, actions)");

  std::string spec, target, host, f = "D", scale = "small";
  std::size_t max_order = 64;
  bool list = false;
  std::vector<int> criteria;
  const std::string spec_help = "Group spec, e.g. S4, \"C8 x C3\", Dic3, wr2(C2), file:g.mt";

  auto* show = app.add_subcommand("show", "Order, fingerprint and construction orders of a group");
  show->add_option("spec", spec, spec_help)->required();
  show->add_option("--max-order", max_order, "Largest catalog order used for naming")->capture_default_str();

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("spec", spec, spec_help)->required();
  aut->add_option("--max-order", max_order, "Largest catalog order used for naming")->capture_default_str();

  auto* subgroups = app.add_subcommand("subgroups", "Subgroup lattice");
  subgroups->add_option("spec", spec, spec_help)->required();

  auto* cd = app.add_subcommand("cd", "Chermak-Delgado lattice");
  cd->add_option("spec", spec, spec_help)->required();

  auto* search = app.add_subcommand("search", "Catalog groups H with f(H) isomorphic to the target");
  search->add_option("--target", target, spec_help)->required();
  search->add_option("--f", f, "Construction: Z, D, Phi, F, M, Aut, Inn")->capture_default_str();
  search->add_option("--max-order", max_order, "Largest catalog order")->capture_default_str();

  auto* complete = app.add_subcommand("complete", "Complete realisability check or search");
  complete->add_option("--target", target, spec_help)->required();
  complete->add_option("--f", f, "Construction: Z, D, Phi, F, M, Aut, Inn")->capture_default_str();
  complete->add_option("--host", host, "Check this host only instead of searching the catalog");
  complete->add_option("--max-order", max_order, "Largest catalog order")->capture_default_str();

  auto* criterion = app.add_subcommand("criterion", "Whether Inn(G) lies in the Frattini subgroup of Aut(G)");
  criterion->add_option("spec", spec, spec_help)->required();

  auto* catalog = app.add_subcommand("catalog", "Build (and cache) the group catalog");
  catalog->add_option("--max-order", max_order, "Largest order")->capture_default_str();
  catalog->add_flag("--list", list, "List the groups of each order");

  auto* verify = app.add_subcommand("verify-paper", "Run the claims manifest");
  verify->add_option("--scale", scale, "small or full")->check(CLI::IsMember({"small", "full"}))->capture_default_str();
  verify->add_option("--criterion", criteria, "Only these criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    gl.parsed_caps = parse_caps(gl.caps);
    if (max_order == 0 || max_order > gl.parsed_caps.max_order) throw ParseError("--max-order out of range");
    if (*show) return cmd_show(gl, spec, max_order);
    if (*aut) return cmd_aut(gl, spec, max_order);
    if (*subgroups) return cmd_subgroups(gl, spec);
    if (*cd) return cmd_cd(gl, spec);
    if (*search) return cmd_search(gl, target, f, max_order);
    if (*complete) return cmd_complete(gl, target, f, host, max_order);
    if (*criterion) return cmd_criterion(gl, spec);
    if (*catalog) return cmd_catalog(gl, max_order, list);
    if (*verify) return cmd_verify(gl, scale, criteria);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCapped;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
