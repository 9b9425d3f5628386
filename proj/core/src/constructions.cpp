#include "invgrp/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "invgrp/isomorphism.hpp"

namespace invgrp {

std::string to_string(Construction f) {
  switch (f) {
    case Construction::Z: return "Z";
    case Construction::D: return "D";
    case Construction::Phi: return "Phi";
    case Construction::F: return "F";
    case Construction::M: return "M";
    case Construction::Aut: return "Aut";
    case Construction::Inn: return "Inn";
  }
  return "?";
}

Construction parse_construction(std::string_view s) {
  for (auto f : kAllConstructions)
    if (to_string(f) == s) return f;
  throw ParseError("unknown construction '" + std::string(s) + "' (expected Z, D, Phi, F, M, Aut or Inn)");
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup derived(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<ElementId> comms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      ElementId c = g.commutator(ElementId(a), ElementId(b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

Subgroup frattini(const FiniteGroup& g, const SubgroupLattice& lat) {
  if (lat.maximal_ids.empty()) return Subgroup::whole(g);
  ElementSet s = lat.subgroups[lat.maximal_ids.front()].members();
  for (auto i : lat.maximal_ids) s = s & lat.subgroups[i].members();
  return Subgroup(g, std::move(s));
}

Subgroup frattini_by_powers(const FiniteGroup& g) {
  auto ps = prime_divisors(g.order());
  if (ps.size() > 1) throw Error("frattini_by_powers needs a p-group");
  Subgroup d = derived(g);
  if (ps.empty()) return d;
  std::vector<ElementId> seed = d.ids();
  for (std::size_t x = 0; x < g.order(); ++x) seed.push_back(g.power(ElementId(x), ps[0]));
  return closure(g, seed);
}

Subgroup fitting(const FiniteGroup& g, const SubgroupLattice& lat) {
  std::vector<ElementId> seed;
  for (auto i : lat.normal_ids) {
    const Subgroup& k = lat.subgroups[i];
    if (is_nilpotent(as_group(k))) seed.insert(seed.end(), lat.generators[i].begin(), lat.generators[i].end());
  }
  Subgroup f = closure(g, seed);
  if (!is_nilpotent(as_group(f))) throw Error("internal: join of normal nilpotent subgroups is not nilpotent");
  return f;
}

Subgroup fitting_by_pcores(const FiniteGroup& g, const SubgroupLattice& lat) {
  std::vector<ElementId> seed;
  for (auto p : prime_divisors(g.order())) {
    auto sylows = sylow_subgroups(lat, p);
    ElementSet core = sylows.front().members();
    for (const auto& s : sylows) core = core & s.members();
    auto ids = core.ids();
    seed.insert(seed.end(), ids.begin(), ids.end());
  }
  return closure(g, seed);
}

namespace {

std::size_t centralizer_size(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId y : gens)
      if (g.mul(ElementId(x), y) != g.mul(y, ElementId(x))) {
        ok = false;
        break;
      }
    c += ok;
  }
  return c;
}

}  // namespace

std::size_t cd_measure(const FiniteGroup& g, const Subgroup& k) { return k.size() * centralizer(g, k).size(); }

CdLattice cd_lattice(const FiniteGroup& g, const SubgroupLattice& lat) {
  CdLattice cd;
  cd.parent = g;
  std::vector<std::size_t> measure(lat.subgroups.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    measure[i] = lat.subgroups[i].size() * centralizer_size(g, lat.generators[i]);
    best = std::max(best, measure[i]);
  }
  cd.max_measure = best;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (measure[i] == best) {
      cd.members.push_back(lat.subgroups[i]);
      cd.lattice_ids.push_back(i);
    }
  return cd;
}

Subgroup chermak_delgado_subgroup(const CdLattice& cd) {
  ElementSet s = cd.members.front().members();
  for (const auto& m : cd.members) s = s & m.members();
  Subgroup result(cd.parent, std::move(s));
  if (std::find(cd.members.begin(), cd.members.end(), result) == cd.members.end())
    throw Error("internal: Chermak-Delgado lattice has no least member");
  return result;
}

namespace {

struct PermKeyHash {
  std::size_t operator()(const std::vector<ElementId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

AutGroup automorphism_group(const FiniteGroup& g, const Caps& caps, std::size_t limit) {
  AutGroup out;
  out.base = g;
  const std::size_t n = g.order();
  const std::size_t stop = std::min(caps.max_aut_maps, limit);
  auto profile = element_profile(g);
  HomSearch s{g, g, greedy_generators(g), {}, true};
  out.preflight_estimate = 1;
  for (ElementId x : s.gens) {
    std::vector<ElementId> cands;
    for (std::size_t y = 0; y < n; ++y)
      if (profile[y] == profile[x]) cands.push_back(ElementId(y));
    out.preflight_estimate *= double(cands.size());
    s.candidates.push_back(std::move(cands));
  }

  std::vector<ElementId> identity(n);
  std::iota(identity.begin(), identity.end(), ElementId{0});
  out.automorphisms.push_back(identity);
  enumerate_homomorphisms(s, [&](const std::vector<ElementId>& m) {
    if (m == identity) return true;
    if (out.automorphisms.size() >= stop) {
      out.truncated = true;
      return false;
    }
    out.automorphisms.push_back(m);
    return true;
  });
  if (out.truncated) return out;

  // Automorphisms are determined by generator images.
  const std::size_t count = out.automorphisms.size();
  std::unordered_map<std::vector<ElementId>, std::size_t, PermKeyHash> index;
  auto key_of = [&](auto&& image_of) {
    std::vector<ElementId> k(s.gens.size());
    for (std::size_t i = 0; i < s.gens.size(); ++i) k[i] = image_of(s.gens[i]);
    return k;
  };
  for (std::size_t i = 0; i < count; ++i)
    index.emplace(key_of([&](ElementId x) { return out.automorphisms[i][x]; }), i);

  for (std::size_t x = 0; x < n; ++x) {
    auto k = key_of([&](ElementId y) { return g.conjugate(y, ElementId(x)); });
    out.inner_ids.push_back(index.at(k));
  }
  std::sort(out.inner_ids.begin(), out.inner_ids.end());
  out.inner_ids.erase(std::unique(out.inner_ids.begin(), out.inner_ids.end()), out.inner_ids.end());

  if (count <= caps.max_aut_table) {
    std::vector<ElementId> table(count * count);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        const auto& pa = out.automorphisms[a];
        const auto& pb = out.automorphisms[b];
        table[a * count + b] = ElementId(index.at(key_of([&](ElementId x) { return pb[pa[x]]; })));
      }
    out.table_group = FiniteGroup(count, std::move(table), "Aut(" + g.spec() + ")");
  }
  return out;
}

Subgroup inner_automorphisms(const AutGroup& aut) {
  if (!aut.table_group) throw CapExceeded("automorphism table not materialized");
  std::vector<ElementId> ids(aut.inner_ids.begin(), aut.inner_ids.end());
  return Subgroup(*aut.table_group, ids);
}

FiniteGroup inner_automorphism_group(const FiniteGroup& g) {
  return quotient(g, center(g)).relabeled("Inn(" + g.spec() + ")");
}

}  // namespace invgrp
