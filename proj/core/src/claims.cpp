#include "invgrp/claims.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace invgrp {

namespace detail {
extern const std::string_view kClaimsJson;
}

Scale parse_scale(std::string_view s) {
  if (s == "small") return Scale::Small;
  if (s == "full") return Scale::Full;
  throw ParseError("unknown scale '" + std::string(s) + "' (expected small or full)");
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

const Json& claims_manifest() {
  static const Json manifest = Json::parse(detail::kClaimsJson);
  return manifest;
}

std::vector<CriterionInfo> manifest_criteria(const Json& manifest) {
  std::vector<CriterionInfo> out;
  for (const auto& c : manifest.at("criteria"))
    out.push_back({c.at("number").get<int>(), c.at("title").get<std::string>(), c.at("budget_s").get<double>()});
  return out;
}

// ---------------------------------------------------------------------------
// Catalog provider

CatalogProvider::CatalogProvider(CatalogOptions options, Caps caps, std::optional<std::filesystem::path> cache_dir)
    : options_(options), caps_(caps), cache_dir_(std::move(cache_dir)) {}

const Catalog& CatalogProvider::get(std::size_t max_order) {
  auto it = slices_.find(max_order);
  if (it != slices_.end()) return *it->second;
  if (full_.max_order < max_order && cache_dir_) {
    if (auto cached = load_catalog(*cache_dir_ / "catalog"); cached && cached->max_order > full_.max_order)
      full_ = std::move(*cached);
  }
  if (full_.max_order < max_order) {
    full_ = extend_catalog(std::move(full_), max_order, options_, caps_);
    if (cache_dir_) save_catalog(full_, *cache_dir_ / "catalog");
  }
  auto slice = std::make_unique<Catalog>(full_.slice(max_order));
  return *slices_.emplace(max_order, std::move(slice)).first->second;
}

// ---------------------------------------------------------------------------
// Oracles

bool isomorphic_by_bijections(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  if (n > 9) throw CapExceeded("bijection oracle is limited to order 9");
  std::vector<ElementId> map(n);
  std::iota(map.begin(), map.end(), ElementId(0));
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = map[a.mul(ElementId(x), ElementId(y))] == b.mul(map[x], map[y]);
    if (ok) return true;
  } while (std::next_permutation(map.begin() + 1, map.end()));
  return false;
}

bool invariant_under(const AutGroup& aut, const Subgroup& k) {
  for (const auto& p : aut.automorphisms)
    for (ElementId x : k.ids())
      if (!k.contains(p[x])) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<std::string> lines;

  void fail(std::string why) {
    status = ClaimStatus::Fail;
    lines.push_back("FAIL " + std::move(why));
  }
  void unknown(std::string why) {
    if (status == ClaimStatus::Pass) status = ClaimStatus::Unknown;
    lines.push_back("UNKNOWN " + std::move(why));
  }
  void note(std::string what) { lines.push_back(std::move(what)); }
};

std::string join_strings(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return "{" + s + "}";
}

/// Which orders of a catalog are certified complete.
std::string certificate(const Catalog& c) {
  std::vector<std::size_t> partial;
  for (std::size_t n = 1; n <= c.max_order; ++n)
    if (c.completeness[n] != Completeness::Complete) partial.push_back(n);
  std::string s = "catalog <= " + std::to_string(c.max_order) + " (" + std::to_string(c.entries.size()) + " groups)";
  if (partial.empty()) return s + ", complete at every order";
  s += ", constructible-only at orders";
  for (auto n : partial) s += " " + std::to_string(n);
  return s;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

class Runner {
 public:
  Runner(const ClaimRunOptions& opt)
      : opt_(opt), engine_(make_engine(opt)), catalogs_(CatalogOptions{}, opt.caps, catalog_dir(opt)) {}

  Outcome run(const Json& p) {
    const auto kind = p.at("kind").get<std::string>();
    if (kind == "construction_iso") return construction_iso(p);
    if (kind == "complete_checks") return complete_checks(p);
    if (kind == "aut_classification") return aut_classification(p);
    if (kind == "wreath_sweep") return wreath_sweep(p);
    if (kind == "search") return search(p);
    if (kind == "complete_search") return complete_search(p);
    if (kind == "frattini_criterion") return frattini_check(p);
    if (kind == "frattini_only_if") return frattini_only_if(p);
    if (kind == "cd_suite") return cd_suite(p);
    if (kind == "oracle_isomorphism") return oracle_isomorphism(p);
    if (kind == "oracle_frattini") return oracle_frattini(p);
    if (kind == "oracle_fitting") return oracle_fitting(p);
    if (kind == "catalog_counts") return catalog_counts(p);
    throw ValidationError("unknown claim kind '" + kind + "'");
  }

 private:
  static Engine make_engine(const ClaimRunOptions& opt) {
    EngineOptions e;
    e.caps = opt.caps;
    e.jobs = opt.jobs;
    if (opt.cache_dir) e.cache_dir = *opt.cache_dir;
    return Engine(e);
  }
  static std::optional<std::filesystem::path> catalog_dir(const ClaimRunOptions& opt) { return opt.cache_dir; }

  FiniteGroup group(const std::string& spec) { return build(spec, opt_.caps); }

  Outcome construction_iso(const Json& p) {
    Outcome out;
    const auto f = parse_construction(p.at("f").get<std::string>());
    const double budget = p.value("case_budget_s", 0.0);
    for (const auto& c : p.at("cases")) {
      auto host = c.at(0).get<std::string>(), target = c.at(1).get<std::string>();
      auto t = Clock::now();
      auto h = group(host);
      auto r = eval_construction(engine_, f, h);
      bool ok = r.status == EvalStatus::Ok && isomorphic(*r.group, group(target));
      double s = seconds_since(t);
      std::string line = to_string(f) + "(" + host + ") = " + target + " [" + fmt_seconds(s) + "]";
      if (r.status == EvalStatus::Capped)
        out.unknown(line + ": " + r.note);
      else if (!ok)
        out.fail(line + ": got order " + (r.group ? std::to_string(r.group->order()) : std::string("?")));
      else if (budget > 0 && s > budget)
        out.fail(line + ": over the per-case budget");
      else
        out.note(line);
    }
    return out;
  }

  static Verdict parse_verdict(const std::string& s) {
    if (s == "true") return Verdict::True;
    if (s == "false") return Verdict::False;
    return Verdict::Unknown;
  }

  Outcome complete_checks(const Json& p) {
    Outcome out;
    const auto f = parse_construction(p.at("f").get<std::string>());
    for (const auto& c : p.at("cases")) {
      auto target = c.at(0).get<std::string>(), host = c.at(1).get<std::string>();
      auto g = group(target);
      auto h = group(host);
      auto rep = check_completely_realisable(engine_, g, h, f);
      std::string line = "(" + target + ", " + host + ", " + to_string(f) + "): i=" + to_string(rep.cond_i) +
                         " ii=" + to_string(rep.cond_ii) + " iii=" + to_string(rep.cond_iii) + ", " +
                         std::to_string(rep.target_classes) + " target classes, " +
                         std::to_string(rep.host_classes) + " host classes";
      bool bad = false, unsure = false;
      const std::pair<const char*, Verdict> conds[] = {{"i", rep.cond_i}, {"ii", rep.cond_ii}, {"iii", rep.cond_iii}};
      for (auto [key, actual] : conds) {
        if (!p.at("expect").contains(key)) continue;
        Verdict want = parse_verdict(p.at("expect").at(key).get<std::string>());
        if (actual == Verdict::Unknown && want != Verdict::Unknown)
          unsure = true;
        else if (actual != want)
          bad = true;
      }
      if (p.contains("failure_ii_contains")) {
        auto spec = p.at("failure_ii_contains").get<std::string>();
        auto w = group(spec);
        bool found = false;
        std::vector<std::string> seen;
        for (const auto& u : rep.failures_ii) {
          seen.push_back(u.description);
          if (u.group && isomorphic(*u.group, w)) found = true;
        }
        line += "; failures (ii): " + join_strings(seen);
        if (!found) bad = true;
        else line += " including " + spec;
      }
      if (bad)
        out.fail(line);
      else if (unsure)
        out.unknown(line);
      else
        out.note(line);
    }
    return out;
  }

  Outcome aut_classification(const Json& p) {
    Outcome out;
    const std::size_t cyclic_max = p.at("cyclic_max").get<std::size_t>();
    const Catalog& cat = catalogs_.get(p.at("catalog_max").get<std::size_t>());
    std::vector<std::pair<std::string, FiniteGroup>> hosts;
    std::set<std::string> names;
    for (std::size_t n = 1; n <= cyclic_max; ++n) {
      auto g = cyclic(n, opt_.caps);
      names.insert(g.spec());
      hosts.emplace_back(g.spec(), g);
    }
    for (const auto& e : cat.entries)
      if (names.insert(e.spec).second) hosts.emplace_back(e.spec, e.group);

    std::vector<std::optional<FiniteGroup>> auts(hosts.size());
    std::vector<std::string> capped;
    for (std::size_t i = 0; i < hosts.size(); ++i) {
      auto r = eval_construction(engine_, Construction::Aut, hosts[i].second);
      if (r.status == EvalStatus::Ok)
        auts[i] = r.group;
      else
        capped.push_back(hosts[i].first);
    }
    out.note(std::to_string(hosts.size()) + " hosts: C1..C" + std::to_string(cyclic_max) + " and " +
             certificate(cat));
    if (!capped.empty()) out.unknown("Aut not materialized for " + join_strings(capped));

    for (const auto& t : p.at("targets")) {
      auto spec = t.at("target").get<std::string>();
      auto target = group(spec);
      auto fp = fingerprint(target);
      std::vector<std::string> found;
      for (std::size_t i = 0; i < hosts.size(); ++i)
        if (auts[i] && auts[i]->order() == target.order() && fingerprint(*auts[i]) == fp &&
            find_isomorphism_prefiltered(*auts[i], target))
          found.push_back(hosts[i].first);
      auto expected = t.at("expected").get<std::vector<std::string>>();
      std::string line = "Aut(H) = " + spec + " for H in " + join_strings(found);
      auto sorted_found = found;
      std::sort(sorted_found.begin(), sorted_found.end());
      std::sort(expected.begin(), expected.end());
      if (sorted_found != expected)
        out.fail(line + ", expected exactly " + join_strings(expected));
      else
        out.note(line);
    }

    if (p.value("forbid_odd_cyclic", false)) {
      std::vector<std::string> bad;
      for (std::size_t i = 0; i < hosts.size(); ++i) {
        if (!auts[i]) continue;
        const auto& a = *auts[i];
        if (a.order() % 2 == 1 && a.order() > 1 && a.exponent() == a.order()) bad.push_back(hosts[i].first);
      }
      if (bad.empty())
        out.note("no Aut(H) cyclic of odd order > 1");
      else
        out.fail("Aut(H) cyclic of odd order > 1 for " + join_strings(bad));
    }

    if (p.contains("absent")) {
      const auto& a = p.at("absent");
      auto spec = a.at("target").get<std::string>();
      const Catalog& c2 = catalogs_.get(a.at("catalog_max").get<std::size_t>());
      auto r = find_realisations(engine_, group(spec), Construction::Aut, c2);
      std::vector<std::string> hits;
      for (const auto& h : r.hits) hits.push_back(h.spec);
      std::string line = "Aut(H) = " + spec + " over " + certificate(c2) + ": " + join_strings(hits);
      if (!hits.empty())
        out.fail(line);
      else if (!r.skipped.empty())
        out.unknown(line + " with " + std::to_string(r.skipped.size()) + " skipped");
      else
        out.note(line + " (no witness within the constructible catalog)");
    }
    return out;
  }

  Outcome wreath_sweep(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    for (const auto& e : cat.entries) {
      if (!e.fingerprint.abelian) continue;
      auto w = build("wr2(" + e.spec + ")", opt_.caps);
      auto d = eval_construction(engine_, Construction::D, w);
      std::string line = "D(" + w.spec() + ")";
      if (d.status != EvalStatus::Ok || !isomorphic(*d.group, e.group)) {
        out.fail(line + " is not " + e.spec);
        continue;
      }
      auto rep = check_completely_realisable(engine_, e.group, w, Construction::D);
      line += " = " + e.spec + ", complete: " + to_string(rep.overall()) + " (" + std::to_string(rep.host_classes) +
              " host classes)";
      if (rep.overall() == Verdict::True)
        out.note(line);
      else if (rep.overall() == Verdict::Unknown)
        out.unknown(line);
      else
        out.fail(line);
    }
    return out;
  }

  Outcome search(const Json& p) {
    Outcome out;
    auto spec = p.at("target").get<std::string>();
    const auto f = parse_construction(p.at("f").get<std::string>());
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    auto r = find_realisations(engine_, group(spec), f, cat);
    std::vector<std::string> hits;
    for (const auto& h : r.hits) hits.push_back(h.spec);
    out.note(to_string(f) + "(H) = " + spec + " for H in " + join_strings(hits) + "; " + certificate(cat));
    if (!r.skipped.empty()) out.note(std::to_string(r.skipped.size()) + " entries skipped by caps");
    if (p.value("expect_empty", false)) {
      if (!hits.empty())
        out.fail("expected no witness");
      else if (!r.skipped.empty())
        out.unknown("no witness found but entries were skipped");
      else
        out.note("no witness <= " + std::to_string(cat.max_order) + " within the constructible catalog");
    }
    if (p.contains("expect_contains"))
      for (const auto& want : p.at("expect_contains"))
        if (std::find(hits.begin(), hits.end(), want.get<std::string>()) == hits.end())
          out.fail("missing " + want.get<std::string>());
    if (p.contains("expect_min_order")) {
      auto m = p.at("expect_min_order").get<std::size_t>();
      for (const auto& h : r.hits)
        if (h.order < m) out.fail(h.spec + " has order " + std::to_string(h.order) + " < " + std::to_string(m));
    }
    return out;
  }

  Outcome complete_search(const Json& p) {
    Outcome out;
    auto spec = p.at("target").get<std::string>();
    const auto f = parse_construction(p.at("f").get<std::string>());
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    auto r = find_complete_realisations(engine_, group(spec), f, cat, true);
    std::vector<std::string> passing, failing;
    for (const auto& [s, rep] : r.passing) passing.push_back(s);
    for (const auto& [s, rep] : r.failing) failing.push_back(s);
    out.note("complete " + to_string(f) + "-realisations of " + spec + ": " + join_strings(passing) +
             "; realisations failing a subgroup condition: " + join_strings(failing) + "; " + certificate(cat));
    if (p.value("expect_empty", false)) {
      if (!passing.empty())
        out.fail("expected no complete witness");
      else if (!r.skipped.empty())
        out.unknown(std::to_string(r.skipped.size()) + " entries skipped by caps");
      else
        out.note("no complete witness <= " + std::to_string(cat.max_order) + " within the constructible catalog");
    }
    return out;
  }

  Outcome frattini_check(const Json& p) {
    Outcome out;
    auto spec = p.at("group").get<std::string>();
    try {
      auto c = frattini_criterion(engine_, group(spec));
      std::string line = spec + ": holds=" + (c.holds ? "true" : "false") + " |Inn|=" + std::to_string(c.inn_order) +
                         " |Phi(Aut)|=" + std::to_string(c.frattini_order) + " |Aut|=" + std::to_string(c.aut_order);
      const auto& e = p.at("expect");
      bool ok = e.at("holds").get<bool>() == c.holds;
      if (e.contains("inn_order")) ok = ok && e.at("inn_order").get<std::size_t>() == c.inn_order;
      if (e.contains("frattini_order")) ok = ok && e.at("frattini_order").get<std::size_t>() == c.frattini_order;
      if (e.contains("aut_order")) ok = ok && e.at("aut_order").get<std::size_t>() == c.aut_order;
      if (ok)
        out.note(line);
      else
        out.fail(line);
    } catch (const CapExceeded& e) {
      out.unknown(spec + ": " + e.what());
    }
    return out;
  }

  Outcome frattini_only_if(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    // Distinct Phi-images, each with its first witness.
    std::vector<FiniteGroup> images;
    std::vector<std::string> witnesses;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (const auto& e : cat.entries) {
      auto r = eval_construction(engine_, Construction::Phi, e.group);
      if (r.status != EvalStatus::Ok) {
        out.unknown("Phi(" + e.spec + "): " + r.note);
        continue;
      }
      auto fp = fingerprint(*r.group);
      auto& bucket = buckets[fp];
      bool seen = false;
      for (auto i : bucket)
        if (find_isomorphism_prefiltered(images[i], *r.group)) seen = true;
      if (seen) continue;
      bucket.push_back(images.size());
      images.push_back(*r.group);
      witnesses.push_back(e.spec);
    }
    std::size_t holds = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      try {
        auto c = frattini_criterion(engine_, images[i]);
        if (c.holds)
          ++holds;
        else
          out.fail("Phi(" + witnesses[i] + ") has order " + std::to_string(images[i].order()) +
                   " but the criterion is false");
      } catch (const CapExceeded& e) {
        out.unknown("Phi(" + witnesses[i] + "): " + e.what());
      }
    }
    out.note(std::to_string(images.size()) + " distinct Phi-images over " + certificate(cat) + "; criterion true for " +
             std::to_string(holds));

    // Groups passing the criterion without a witness in range are listed,
    // not judged: the witness may simply be larger.
    std::vector<std::string> unwitnessed;
    for (const auto& e : cat.entries) {
      if (2 * e.group.order() > cat.max_order) continue;
      bool has_witness = false;
      for (const auto& img : images)
        if (img.order() == e.group.order() && isomorphic(img, e.group)) has_witness = true;
      if (has_witness) continue;
      try {
        if (frattini_criterion(engine_, e.group).holds) unwitnessed.push_back(e.spec);
      } catch (const CapExceeded&) {
      }
    }
    out.note("criterion true but no witness <= " + std::to_string(cat.max_order) + ": " + join_strings(unwitnessed));
    return out;
  }

  Outcome cd_suite(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    std::size_t aut_checked = 0, triples = 0;
    for (const auto& e : cat.entries) {
      const FiniteGroup& h = e.group;
      auto lat = engine_.lattice(h);
      auto cd = cd_lattice(h, *lat);
      auto m = chermak_delgado_subgroup(cd);
      const std::string name = e.spec;
      if (!as_group(m).is_abelian()) out.fail("M(" + name + ") is not abelian");
      if (!center(h).subgroup_of(m)) out.fail("Z(" + name + ") is not inside M");
      std::set<std::vector<ElementId>> members;
      for (const auto& k : cd.members) {
        members.insert(k.ids());
        if (cd_measure(h, k) != cd.max_measure) out.fail("member of CD(" + name + ") below the maximum measure");
      }
      for (const auto& k : cd.members) {
        auto c = centralizer(h, k);
        if (!members.count(c.ids())) out.fail("CD(" + name + ") is not closed under centralizers");
        if (!(centralizer(h, c) == k)) out.fail("C(C(K)) != K in CD(" + name + ")");
      }
      for (std::size_t i = 0; i < cd.members.size(); ++i)
        for (std::size_t j = i + 1; j < cd.members.size(); ++j) {
          const auto& a = cd.members[i];
          const auto& b = cd.members[j];
          if (!members.count(intersect(a, b).ids()) || !members.count(join(a, b).ids()))
            out.fail("CD(" + name + ") is not closed under meet and join");
        }
      // Modular law A v (B ^ C) = (A v B) ^ C for A <= C, spot-checked.
      std::size_t budget = 4000;
      for (std::size_t i = 0; i < cd.members.size() && budget; ++i)
        for (std::size_t k = 0; k < cd.members.size() && budget; ++k) {
          const auto& a = cd.members[i];
          const auto& c = cd.members[k];
          if (!a.subgroup_of(c)) continue;
          for (std::size_t j = 0; j < cd.members.size() && budget; ++j, --budget) {
            const auto& b = cd.members[j];
            ++triples;
            if (!(join(a, intersect(b, c)) == intersect(join(a, b), c)))
              out.fail("modular law fails in CD(" + name + ")");
          }
        }
      AutGroup aut = automorphism_group(h, opt_.caps, opt_.caps.max_aut_maps);
      if (!aut.truncated) {
        ++aut_checked;
        if (!invariant_under(aut, m)) out.fail("M(" + name + ") is not characteristic");
      }
      if (e.fingerprint.abelian) {
        if (cd.members.size() != 1 || cd.members[0].size() != h.order()) out.fail("CD(" + name + ") != {A}");
        for (const auto& k : lat->subgroups) {
          auto kg = as_group(k);
          auto mk = chermak_delgado_subgroup(cd_lattice(kg, all_subgroups(kg, opt_.caps)));
          if (mk.size() != kg.order()) out.fail("M(K) != K for a subgroup of " + name);
        }
      }
    }
    out.note(std::to_string(cat.entries.size()) + " groups, Aut invariance on " + std::to_string(aut_checked) + ", " +
             std::to_string(triples) + " modular triples; " + certificate(cat));
    return out;
  }

  Outcome oracle_isomorphism(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    // Each entry plus a relabeled copy, so positive answers are exercised
    // beyond the identity map.
    std::vector<FiniteGroup> groups;
    std::mt19937 rng(0x5eed);
    for (const auto& e : cat.entries) {
      const auto& g = e.group;
      const std::size_t n = g.order();
      std::vector<ElementId> perm(n);
      std::iota(perm.begin(), perm.end(), ElementId(0));
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      std::vector<ElementId> inv(n);
      for (std::size_t x = 0; x < n; ++x) inv[perm[x]] = ElementId(x);
      std::vector<ElementId> table(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) table[x * n + y] = perm[g.mul(inv[x], inv[y])];
      groups.push_back(g);
      groups.emplace_back(n, std::move(table), g.spec() + "'");
    }
    std::size_t pairs = 0, positive = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i; j < groups.size(); ++j) {
        if (groups[i].order() != groups[j].order()) continue;
        ++pairs;
        bool fast = find_isomorphism(groups[i], groups[j]).has_value();
        bool slow = isomorphic_by_bijections(groups[i], groups[j]);
        if (slow) ++positive;
        if (fast != slow) out.fail(groups[i].spec() + " vs " + groups[j].spec());
      }
    out.note(std::to_string(pairs) + " pairs, " + std::to_string(positive) + " isomorphic; " + certificate(cat));
    return out;
  }

  Outcome oracle_frattini(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    std::size_t checked = 0;
    for (const auto& e : cat.entries) {
      auto primes = prime_divisors(e.group.order());
      if (primes.size() != 1) continue;
      ++checked;
      auto a = frattini(e.group, *engine_.lattice(e.group));
      auto b = frattini_by_powers(e.group);
      if (!(a == b)) out.fail("Phi(" + e.spec + ")");
    }
    out.note(std::to_string(checked) + " p-groups; " + certificate(cat));
    return out;
  }

  Outcome oracle_fitting(const Json& p) {
    Outcome out;
    const Catalog& cat = catalogs_.get(p.at("max_order").get<std::size_t>());
    for (const auto& e : cat.entries) {
      auto lat = engine_.lattice(e.group);
      if (!(fitting(e.group, *lat) == fitting_by_pcores(e.group, *lat))) out.fail("F(" + e.spec + ")");
    }
    out.note(std::to_string(cat.entries.size()) + " groups; " + certificate(cat));
    return out;
  }

  Outcome catalog_counts(const Json& p) {
    Outcome out;
    auto expected = p.at("expected").get<std::vector<std::size_t>>();
    const Catalog& cat = catalogs_.get(expected.size());
    std::vector<std::string> got;
    for (std::size_t n = 1; n <= expected.size(); ++n) {
      got.push_back(std::to_string(cat.count_of_order(n)));
      if (cat.count_of_order(n) != expected[n - 1])
        out.fail("order " + std::to_string(n) + ": " + std::to_string(cat.count_of_order(n)) + " classes, expected " +
                 std::to_string(expected[n - 1]));
      if (cat.completeness[n] != Completeness::Complete) out.fail("order " + std::to_string(n) + " not flagged complete");
    }
    out.note("counts " + join_strings(got));
    return out;
  }

  const ClaimRunOptions& opt_;
  Engine engine_;
  CatalogProvider catalogs_;
};

Json scaled(const Json& claim, Scale scale) {
  Json p = claim;
  if (scale == Scale::Small && claim.contains("small"))
    for (const auto& [k, v] : claim.at("small").items()) p[k] = v;
  return p;
}

}  // namespace

std::vector<ClaimResult> run_claims(const ClaimRunOptions& options, const Json& manifest) {
  Runner runner(options);
  std::vector<ClaimResult> results;
  for (const auto& claim : manifest.at("claims")) {
    int crit = claim.at("criterion").get<int>();
    if (!options.criteria.empty() && std::find(options.criteria.begin(), options.criteria.end(), crit) ==
                                         options.criteria.end())
      continue;
    ClaimResult r;
    r.id = claim.at("id").get<std::string>();
    r.criterion = crit;
    r.statement = claim.at("statement").get<std::string>();
    auto t = Clock::now();
    try {
      Outcome o = runner.run(scaled(claim, options.scale));
      r.status = o.status;
      for (std::size_t i = 0; i < o.lines.size(); ++i) r.detail += (i ? "\n" : "") + o.lines[i];
    } catch (const CapExceeded& e) {
      r.status = ClaimStatus::Unknown;
      r.detail = std::string("cap exceeded: ") + e.what();
    } catch (const std::exception& e) {
      r.status = ClaimStatus::Fail;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = seconds_since(t);
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CriterionResult> summarize(const std::vector<ClaimResult>& results,
                                       const std::vector<CriterionInfo>& criteria) {
  std::vector<CriterionResult> out;
  for (const auto& info : criteria) {
    CriterionResult c;
    c.info = info;
    for (const auto& r : results) {
      if (r.criterion != info.number) continue;
      c.claims.push_back(&r);
      c.seconds += r.seconds;
      if (r.status == ClaimStatus::Fail)
        c.status = ClaimStatus::Fail;
      else if (r.status == ClaimStatus::Unknown && c.status == ClaimStatus::Pass)
        c.status = ClaimStatus::Unknown;
    }
    if (c.claims.empty()) continue;
    if (info.budget_seconds > 0 && c.seconds > info.budget_seconds) {
      c.over_budget = true;
      c.status = ClaimStatus::Fail;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace invgrp
