#include "invgrp/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace invgrp {

namespace {

// <k, x> as a membership set; `gens` generate k.
ElementSet dimino(const FiniteGroup& g, const std::vector<ElementId>& k_ids, const ElementSet& k_set,
                  const std::vector<ElementId>& gens, ElementId x) {
  ElementSet set = k_set;
  std::vector<ElementId> reps{0};
  auto add_coset = [&](ElementId r) {
    for (ElementId e : k_ids) set.set(g.mul(e, r));
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : gens) {
      ElementId v = g.mul(reps[i], s);
      if (!set.test(v)) add_coset(v);
    }
    ElementId v = g.mul(reps[i], x);
    if (!set.test(v)) add_coset(v);
  }
  return set;
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = lookup.find(members);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, const Caps& caps) {
  const std::size_t n = g.order();

  // Distinct cyclic subgroups, each with its smallest generator.
  std::vector<ElementId> cyclic_gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<ElementSet> sets;
  std::vector<std::vector<ElementId>> ids;
  std::vector<std::vector<ElementId>> gens;
  std::vector<char> non_maximal;

  auto add = [&](ElementSet s, std::vector<ElementId> gen_list) {
    auto [it, inserted] = seen.emplace(s, sets.size());
    if (!inserted) return;
    if (sets.size() >= caps.max_subgroups)
      throw CapExceeded("subgroup count exceeds cap " + std::to_string(caps.max_subgroups));
    ids.push_back(s.ids());
    sets.push_back(std::move(s));
    gens.push_back(std::move(gen_list));
    non_maximal.push_back(0);
  };

  ElementSet triv(n);
  triv.set(0);
  add(triv, {});
  for (std::size_t x = 1; x < n; ++x) {
    ElementSet c(n);
    ElementId y = 0;
    do {
      y = g.mul(y, ElementId(x));
      c.set(y);
    } while (y != 0);
    if (!seen.count(c)) {
      cyclic_gens.push_back(ElementId(x));
      add(std::move(c), {ElementId(x)});
    }
  }

  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (ids[i].size() == n) continue;
    for (ElementId c : cyclic_gens) {
      if (sets[i].test(c)) continue;
      ElementSet j = dimino(g, ids[i], sets[i], gens[i], c);
      std::size_t jsize = j.count();
      if (jsize != n) non_maximal[i] = 1;
      if (!seen.count(j)) {
        auto gl = gens[i];
        gl.push_back(c);
        add(std::move(j), std::move(gl));
      }
    }
  }

  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ids[a].size() != ids[b].size()) return ids[a].size() < ids[b].size();
    return ids[a] < ids[b];
  });

  SubgroupLattice lat;
  lat.parent = g;
  lat.subgroups.reserve(sets.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t i = order[k];
    lat.subgroups.emplace_back(g, std::move(sets[i]));
    lat.generators.push_back(std::move(gens[i]));
    if (!non_maximal[i] && ids[i].size() != n) lat.maximal_ids.push_back(k);
  }
  for (std::size_t k = 0; k < lat.subgroups.size(); ++k) lat.lookup.emplace(lat.subgroups[k].members(), k);

  lat.conjugacy_classes = conjugacy_classes_of_subgroups(lat);
  lat.class_of.assign(lat.subgroups.size(), 0);
  for (std::size_t c = 0; c < lat.conjugacy_classes.size(); ++c)
    for (std::size_t k : lat.conjugacy_classes[c]) lat.class_of[k] = c;
  for (std::size_t k = 0; k < lat.subgroups.size(); ++k)
    if (lat.conjugacy_classes[lat.class_of[k]].size() == 1) lat.normal_ids.push_back(k);
  return lat;
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<Subgroup> out;
  for (auto i : lat.maximal_ids) out.push_back(lat.subgroups[i]);
  return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes_of_subgroups(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.parent;
  auto ggens = greedy_generators(g);
  const std::size_t s = lat.subgroups.size();
  std::vector<std::size_t> cls(s, SIZE_MAX);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < s; ++i) {
    if (cls[i] != SIZE_MAX) continue;
    std::size_t c = classes.size();
    classes.push_back({i});
    cls[i] = c;
    for (std::size_t qi = 0; qi < classes[c].size(); ++qi) {
      const Subgroup& k = lat.subgroups[classes[c][qi]];
      for (ElementId x : ggens) {
        ElementSet img(g.order());
        for (ElementId m : k.ids()) img.set(g.conjugate(m, x));
        auto j = lat.index_of(img);
        if (!j) throw Error("conjugate subgroup missing from lattice");
        if (cls[*j] == SIZE_MAX) {
          cls[*j] = c;
          classes[c].push_back(*j);
        }
      }
    }
    std::sort(classes[c].begin(), classes[c].end());
  }
  return classes;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lat, std::size_t p) {
  std::size_t n = lat.parent.order(), pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  std::vector<Subgroup> out;
  for (const auto& k : lat.subgroups)
    if (k.size() == pk) out.push_back(k);
  return out;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  std::vector<char> seen(g.order());
  while (true) {
    const Subgroup& cur = series.back();
    std::vector<ElementId> comms;
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId x : cur.ids())
      for (std::size_t y = 0; y < g.order(); ++y) {
        ElementId c = g.commutator(x, ElementId(y));
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    Subgroup next = closure(g, comms);
    if (next == cur) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().size() == 1; }

bool is_nilpotent_by_sylow(const SubgroupLattice& lat) {
  for (auto p : prime_divisors(lat.parent.order()))
    if (sylow_subgroups(lat, p).size() != 1) return false;
  return true;
}

}  // namespace invgrp
