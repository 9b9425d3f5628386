#include "invgrp/realisability.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "invgrp/families.hpp"
#include "invgrp/ingest.hpp"
#include "invgrp/parallel.hpp"
#include "invgrp/report.hpp"

namespace invgrp {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Engine

Engine::Engine(EngineOptions options) : options_(std::move(options)) {}

std::shared_ptr<const SubgroupLattice> Engine::lattice(const FiniteGroup& g) {
  const auto key = g.table_hash();
  {
    std::lock_guard lock(mutex_);
    for (const auto& lat : lattices_[key])
      if (lat->parent.same_table(g)) return lat;
  }
  std::shared_ptr<const SubgroupLattice> lat;
  fs::path file;
  if (options_.cache_dir) {
    file = *options_.cache_dir / "lattices" / (hex64(key) + "-" + std::to_string(g.order()) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        lat = std::make_shared<const SubgroupLattice>(lattice_from_json(g, Json::parse(in)));
      } catch (const std::exception&) {
        lat.reset();
      }
    }
  }
  if (!lat) {
    lat = std::make_shared<const SubgroupLattice>(all_subgroups(g, options_.caps));
    if (options_.cache_dir) {
      std::error_code ec;
      fs::create_directories(file.parent_path(), ec);
      auto tmp = file;
      tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
      {
        std::ofstream out(tmp);
        out << to_json(*lat).dump();
      }
      fs::rename(tmp, file, ec);
    }
  }
  std::lock_guard lock(mutex_);
  for (const auto& existing : lattices_[key])
    if (existing->parent.same_table(g)) return existing;
  lattices_[key].push_back(lat);
  return lat;
}

// ---------------------------------------------------------------------------
// Construction dispatch

EvalOutcome eval_construction(Engine& engine, Construction f, const FiniteGroup& h, std::size_t size_bound) {
  EvalOutcome out;
  const std::string label = to_string(f) + "(" + h.spec() + ")";
  auto from_subgroup = [&](Subgroup s) {
    out.group = as_group(s).relabeled(label);
    out.subgroup = std::move(s);
  };
  try {
    switch (f) {
      case Construction::Z: from_subgroup(center(h)); break;
      case Construction::D: from_subgroup(derived(h)); break;
      case Construction::Phi: from_subgroup(frattini(h, *engine.lattice(h))); break;
      case Construction::F: from_subgroup(fitting(h, *engine.lattice(h))); break;
      case Construction::M: from_subgroup(chermak_delgado_subgroup(cd_lattice(h, *engine.lattice(h)))); break;
      case Construction::Inn: out.group = inner_automorphism_group(h).relabeled(label); break;
      case Construction::Aut: {
        const auto& caps = engine.caps();
        AutGroup aut = automorphism_group(h, caps, size_bound);
        if (aut.truncated) {
          if (size_bound < caps.max_aut_maps) {
            out.status = EvalStatus::TooLarge;
            out.note = "|Aut| > " + std::to_string(size_bound);
          } else {
            out.status = EvalStatus::Capped;
            out.note = "automorphism enumeration exceeded " + std::to_string(caps.max_aut_maps) + " maps";
          }
        } else if (!aut.table_group) {
          if (aut.count() > size_bound) {
            out.status = EvalStatus::TooLarge;
            out.note = "|Aut| = " + std::to_string(aut.count());
          } else {
            out.status = EvalStatus::Capped;
            out.note = "|Aut| = " + std::to_string(aut.count()) + " exceeds table cap " +
                       std::to_string(caps.max_aut_table);
          }
        } else {
          out.group = aut.table_group->relabeled(label);
        }
        break;
      }
    }
  } catch (const CapExceeded& e) {
    out = EvalOutcome{};
    out.status = EvalStatus::Capped;
    out.note = e.what();
  }
  return out;
}

FiniteGroup eval_construction(Construction f, const FiniteGroup& h, const Caps& caps) {
  EngineOptions options;
  options.caps = caps;
  Engine engine(options);
  auto out = eval_construction(engine, f, h);
  if (out.status != EvalStatus::Ok) throw CapExceeded(to_string(f) + "(" + h.spec() + "): " + out.note);
  return *out.group;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

// Groups of order n, n = 1..128.
constexpr std::array<std::uint16_t, 129> kGroupCounts = {
    0,  1, 1, 1,  2,  1, 2,  1,  5,  2,  2,  1, 5,  1,  2,  1,  14, 1,  5, 1,   5, 2,  2,  1,  15, 2, 2,
    5,  4, 1, 4,  1,  51, 1, 2,  1,  14, 1,  2, 2,  14, 1,  6,  1,  4,  2, 2,   1, 52, 2,  5,  1,  5, 1,
    15, 2, 13, 2, 2,  1,  13, 1, 2,  4,  267, 1, 4,  1,  5,  1,  4,  1,  50, 1,  2, 3,   4, 1,  6,  1,  52, 15,
    2,  1, 15, 1,  2,  1,  12, 1, 10, 1,  4,  2, 2,  1,  231, 1, 5,  2,  16, 1,  4, 1,   14, 2, 2,  1,  45, 1,
    6,  2, 43, 1,  6,  1,  5,  4, 2,  1,  47, 2, 2,  1,  4,  5, 16, 1,  2328};

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

/// Invariant-factor names of the abelian groups of order n, cyclic first.
std::vector<std::string> abelian_specs(std::size_t n) {
  if (n == 1) return {"C1"};
  auto fac = factorize(n);
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  for (auto [p, e] : fac) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<std::string> out;
  std::vector<std::size_t> choice(fac.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < fac.size(); ++i) len = std::max(len, per_prime[i][choice[i]].size());
    std::string name;
    for (std::size_t j = 0; j < len; ++j) {
      std::size_t d = 1;
      for (std::size_t i = 0; i < fac.size(); ++i) {
        const auto& part = per_prime[i][choice[i]];
        if (j < part.size())
          for (std::size_t t = 0; t < part[j]; ++t) d *= fac[i].first;
      }
      if (j) name += " x ";
      name += "C" + std::to_string(d);
    }
    out.push_back(name);
    std::size_t i = fac.size();
    while (i > 0) {
      --i;
      if (++choice[i] < per_prime[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (fac.empty()) return out;
  }
}

class CatalogBuilder {
 public:
  CatalogBuilder(Catalog base, std::size_t max_order, const CatalogOptions& opt, const Caps& caps)
      : opt_(opt), caps_(caps), cat_(std::move(base)), by_order_(max_order + 1) {
    first_ = cat_.max_order + 1;
    cat_.max_order = max_order;
    cat_.completeness.resize(max_order + 1, Completeness::ConstructibleOnly);
    // Earlier orders are final, so their entries never need a bucket.
    for (std::size_t i = 0; i < cat_.entries.size(); ++i) by_order_[cat_.entries[i].group.order()].push_back(i);
    colourings_.resize(cat_.entries.size());
  }

  Catalog run() {
    for (std::size_t n = first_; n <= cat_.max_order; ++n) build_order(n);
    return std::move(cat_);
  }

 private:
  bool all_families() const {
    return opt_.abelian && opt_.dihedral && opt_.dicyclic && opt_.symmetric && opt_.sl23 && opt_.products;
  }

  void offer(std::size_t n, const std::string& spec, const FiniteGroup& g) {
    Fingerprint fp = fingerprint(g);
    RefinedColouring rc = refined_colouring(g);
    auto& bucket = buckets_[{fp, rc.hash}];
    for (std::size_t idx : bucket)
      if (find_isomorphism_refined(cat_.entries[idx].group, colourings_[idx], g, rc)) return;
    bucket.push_back(cat_.entries.size());
    colourings_.push_back(std::move(rc));
    by_order_[n].push_back(cat_.entries.size());
    cat_.entries.push_back({spec, g.relabeled(spec), std::move(fp)});
  }

  void offer_spec(std::size_t n, const std::string& spec) {
    FiniteGroup g = build(spec, caps_);
    offer(n, g.spec(), g);
  }

  std::string spec_of(std::size_t idx) const { return cat_.entries[idx].spec; }

  /// Aut(N), enumerated up to opt_.permutation_aut_max maps.
  const AutGroup& aut_of(std::size_t idx) {
    auto it = auts_.find(idx);
    if (it == auts_.end()) {
      AutGroup a = automorphism_group(cat_.entries[idx].group, caps_,
                                      std::max(caps_.max_aut_table, opt_.permutation_aut_max));
      it = auts_.emplace(idx, std::move(a)).first;
    }
    return it->second;
  }

  /// K cyclic and Aut(N) known only as permutations: actions are the
  /// automorphisms a with a^|K| = 1, up to conjugacy and replacing a by
  /// a coprime power.
  void semidirect_cyclic(std::size_t n, std::size_t ni, std::size_t ki, const AutGroup& aut) {
    const FiniteGroup N = cat_.entries[ni].group;
    const FiniteGroup K = cat_.entries[ki].group;
    const std::size_t m = K.order(), nn = N.order();
    ElementId k0 = 0;
    while (K.element_order(k0) != m) ++k0;
    const auto& A = aut.automorphisms;
    std::vector<Perm> inverse(A.size(), Perm(nn));
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t x = 0; x < nn; ++x) inverse[i][A[i][x]] = ElementId(x);
    auto compose = [&](const Perm& p, const Perm& q) {
      Perm r(nn);
      for (std::size_t x = 0; x < nn; ++x) r[x] = p[q[x]];
      return r;
    };
    const Perm& id = A[0];
    std::set<Perm> seen;
    std::vector<Perm> reps;
    std::size_t homs = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      const Perm& a = A[i];
      if (i == 0 && opt_.products) continue;
      if (seen.count(a)) continue;
      std::vector<Perm> powers{a};
      while (powers.back() != id && powers.size() <= m) powers.push_back(compose(a, powers.back()));
      if (powers.back() != id || m % powers.size() != 0) continue;
      if (++homs > caps_.max_actions) {
        cat_.notes.push_back("order " + std::to_string(n) + ": action enumeration for (" + spec_of(ni) + ", " +
                             spec_of(ki) + ") stopped at " + std::to_string(caps_.max_actions) + " homomorphisms");
        break;
      }
      const std::size_t order = powers.size();
      for (std::size_t j = 1; j <= order; ++j) {
        if (std::gcd(j, order) != 1) continue;
        const Perm& b = powers[j - 1];
        for (std::size_t c = 0; c < A.size(); ++c) seen.insert(compose(inverse[c], compose(b, A[c])));
      }
      reps.push_back(a);
    }
    for (const auto& a : reps) {
      std::vector<std::pair<ElementId, Perm>> gens{{k0, a}};
      Action act = extend_action(N, K, gens);
      std::vector<std::pair<ElementId, std::vector<ElementId>>> text_gens(gens.begin(), gens.end());
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::Semidirect;
      spec.args = {parse_spec(spec_of(ni)), parse_spec(spec_of(ki))};
      spec.text = format_action(text_gens);
      offer(n, spec.to_string(), semidirect_product(N, K, act, caps_));
    }
  }

  void semidirect(std::size_t n, std::size_t ni, std::size_t ki) {
    const AutGroup& full = aut_of(ni);
    if (full.truncated || !full.table_group) {
      if (!full.truncated && cat_.entries[ki].fingerprint.abelian &&
          cat_.entries[ki].fingerprint.exponent == cat_.entries[ki].group.order()) {
        semidirect_cyclic(n, ni, ki, full);
      } else {
        ++skipped_large_aut_;
      }
      return;
    }
    const AutGroup* aut = &full;
    const FiniteGroup N = cat_.entries[ni].group;
    const FiniteGroup K = cat_.entries[ki].group;
    const FiniteGroup& T = *aut->table_group;
    if (T.order() == 1) return;
    HomSearch s{K, T, greedy_generators(K), {}, false};
    for (ElementId x : s.gens) {
      std::vector<ElementId> cands;
      for (std::size_t t = 0; t < T.order(); ++t)
        if (K.element_order(x) % T.element_order(ElementId(t)) == 0) cands.push_back(ElementId(t));
      s.candidates.push_back(std::move(cands));
    }
    std::set<std::vector<ElementId>> seen;
    std::vector<std::vector<ElementId>> reps;
    std::size_t homs = 0;
    bool capped = false;
    enumerate_homomorphisms(s, [&](const std::vector<ElementId>& m) {
      if (++homs > caps_.max_actions) {
        capped = true;
        return false;
      }
      std::vector<ElementId> tuple;
      for (ElementId x : s.gens) tuple.push_back(m[x]);
      if (std::all_of(tuple.begin(), tuple.end(), [](ElementId t) { return t == 0; }) && opt_.products) return true;
      if (seen.count(tuple)) return true;
      // Conjugate actions give isomorphic products; keep one per orbit.
      for (std::size_t c = 0; c < T.order(); ++c) {
        std::vector<ElementId> conj;
        for (ElementId t : tuple) conj.push_back(T.conjugate(t, ElementId(c)));
        seen.insert(std::move(conj));
      }
      reps.push_back(std::move(tuple));
      return true;
    });
    if (capped)
      cat_.notes.push_back("order " + std::to_string(n) + ": action enumeration for (" + spec_of(ni) + ", " +
                           spec_of(ki) + ") stopped at " + std::to_string(caps_.max_actions) + " homomorphisms");
    for (const auto& tuple : reps) {
      std::vector<std::pair<ElementId, Perm>> gens;
      for (std::size_t i = 0; i < s.gens.size(); ++i)
        gens.emplace_back(s.gens[i], aut->automorphisms[T.inv(tuple[i])]);
      Action act = extend_action(N, K, gens);
      std::vector<std::pair<ElementId, std::vector<ElementId>>> text_gens(gens.begin(), gens.end());
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::Semidirect;
      spec.args = {parse_spec(spec_of(ni)), parse_spec(spec_of(ki))};
      spec.text = format_action(text_gens);
      offer(n, spec.to_string(), semidirect_product(N, K, act, caps_));
    }
  }

  void build_order(std::size_t n) {
    if (opt_.abelian)
      for (const auto& s : abelian_specs(n)) offer_spec(n, s);
    if (opt_.dihedral && n % 2 == 0 && n >= 6) offer_spec(n, "Dih" + std::to_string(n / 2));
    if (opt_.dicyclic && n % 4 == 0 && n >= 8) offer_spec(n, "Dic" + std::to_string(n / 4));
    if (opt_.symmetric) {
      std::size_t f = 1;
      for (std::size_t k = 1; k <= 7; ++k) {
        f *= k;
        if (k >= 3 && f == n) offer_spec(n, "S" + std::to_string(k));
        if (k >= 4 && f / 2 == n) offer_spec(n, "A" + std::to_string(k));
      }
    }
    if (opt_.heisenberg)
      for (std::size_t p = 3; p * p * p <= n; ++p)
        if (p * p * p == n && factorize(p).size() == 1 && factorize(p)[0].second == 1)
          offer_spec(n, "He" + std::to_string(p));
    if (opt_.sl23 && n == 24) offer_spec(n, "SL23");

    if (opt_.products) {
      for (std::size_t a = 2; a * a <= n; ++a) {
        if (n % a) continue;
        std::size_t b = n / a;
        for (std::size_t i : by_order_[a])
          for (std::size_t j : by_order_[b]) {
            if (a == b && j < i) continue;
            const auto& x = cat_.entries[i];
            const auto& y = cat_.entries[j];
            if (x.fingerprint.abelian && y.fingerprint.abelian) continue;
            GroupSpec spec;
            spec.kind = GroupSpec::Kind::Product;
            spec.args = {parse_spec(y.spec), parse_spec(x.spec)};
            offer(n, spec.to_string(), direct_product(y.group, x.group, caps_));
          }
      }
    }
    if (opt_.wreath)
      for (std::size_t a = 1; 2 * a * a <= n; ++a)
        if (2 * a * a == n)
          for (std::size_t i : by_order_[a])
            offer(n, "wr2(" + spec_of(i) + ")", wreath_with_c2(cat_.entries[i].group, caps_));
    if (opt_.semidirect && n <= opt_.semidirect_max_order) {
      for (std::size_t a = 2; a < n; ++a) {
        if (n % a) continue;
        std::size_t b = n / a;
        for (std::size_t ni : by_order_[a])
          for (std::size_t ki : by_order_[b])
            if (!opt_.skip_split_acting_groups || !splits(ki)) semidirect(n, ni, ki);
      }
    }

    if (skipped_large_aut_) {
      cat_.notes.push_back("order " + std::to_string(n) + ": " + std::to_string(skipped_large_aut_) +
                           " (N, K) pairs skipped: |Aut(N)| has no table and K is not cyclic, or Aut(N) is too large to enumerate");
      skipped_large_aut_ = 0;
    }
    const std::size_t count = by_order_[n].size();
    auto known = known_group_count(n);
    if (known && count > *known)
      throw Error("catalog has " + std::to_string(count) + " classes at order " + std::to_string(n) +
                  " but only " + std::to_string(*known) + " exist (deduplication bug)");
    if (known && count == *known) {
      cat_.completeness[n] = Completeness::Complete;
    } else if (n <= 15 && all_families()) {
      throw Error("catalog completeness check failed at order " + std::to_string(n) + ": found " +
                  std::to_string(count) + " classes, expected " + std::to_string(known.value_or(0)));
    }
  }

  /// True if K = K1 x| K2 with both factors nontrivial. Then
  /// N x| K = (N x| K1) x| K2, which is offered from the pair
  /// (N x| K1, K2) at the same order.
  bool splits(std::size_t ki) {
    auto it = splits_.find(ki);
    if (it != splits_.end()) return it->second;
    const auto& e = cat_.entries[ki];
    bool split = false;
    if (e.fingerprint.abelian) {
      split = e.fingerprint.exponent != e.group.order();
    } else {
      try {
        auto lat = all_subgroups(e.group, caps_);
        for (auto ni : lat.normal_ids) {
          const auto& k1 = lat.subgroups[ni];
          if (k1.size() == 1 || k1.size() == e.group.order()) continue;
          for (const auto& k2 : lat.subgroups)
            if (k2.size() * k1.size() == e.group.order() && intersect(k1, k2).size() == 1) split = true;
          if (split) break;
        }
      } catch (const CapExceeded&) {
      }
    }
    return splits_[ki] = split;
  }

  CatalogOptions opt_;
  Caps caps_;
  Catalog cat_;
  std::vector<std::vector<std::size_t>> by_order_;
  std::map<std::pair<Fingerprint, std::uint64_t>, std::vector<std::size_t>> buckets_;
  std::vector<RefinedColouring> colourings_;
  std::map<std::size_t, AutGroup> auts_;
  std::map<std::size_t, bool> splits_;
  std::size_t skipped_large_aut_ = 0;
  std::size_t first_ = 1;
};

}  // namespace

std::optional<std::size_t> known_group_count(std::size_t n) {
  if (n == 0 || n >= kGroupCounts.size()) return std::nullopt;
  return kGroupCounts[n];
}

std::vector<const CatalogEntry*> Catalog::of_order(std::size_t n) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries)
    if (e.group.order() == n) out.push_back(&e);
  return out;
}

Catalog Catalog::slice(std::size_t m) const {
  Catalog c;
  c.max_order = std::min(m, max_order);
  for (const auto& e : entries)
    if (e.group.order() <= c.max_order) c.entries.push_back(e);
  c.completeness.assign(completeness.begin(), completeness.begin() + std::ptrdiff_t(c.max_order + 1));
  c.notes = notes;
  return c;
}

bool Catalog::complete_through(std::size_t n) const {
  if (n > max_order) return false;
  for (std::size_t k = 1; k <= n; ++k)
    if (completeness[k] != Completeness::Complete) return false;
  return true;
}

Catalog build_catalog(std::size_t max_order, const CatalogOptions& options, const Caps& caps) {
  if (max_order > caps.max_order) throw CapExceeded("catalog order exceeds the order cap");
  if (max_order == 0) throw ValidationError("catalog max order must be positive");
  return CatalogBuilder(Catalog{}, max_order, options, caps).run();
}

Catalog extend_catalog(Catalog base, std::size_t max_order, const CatalogOptions& options, const Caps& caps) {
  if (max_order <= base.max_order) return base.slice(max_order);
  if (max_order > caps.max_order) throw CapExceeded("catalog order exceeds the order cap");
  return CatalogBuilder(std::move(base), max_order, options, caps).run();
}

void save_catalog(const Catalog& catalog, const fs::path& dir) {
  fs::create_directories(dir / "entries");
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    std::ofstream out(dir / "entries" / (std::to_string(i) + ".mt"));
    out << format_multiplication_table(catalog.entries[i].group);
  }
  std::ofstream out(dir / "index.json");
  out << catalog_index(catalog).dump(1) << "\n";
}

std::optional<Catalog> load_catalog(const fs::path& dir) {
  std::ifstream in(dir / "index.json");
  if (!in) return std::nullopt;
  Json idx = Json::parse(in);
  Catalog c;
  c.max_order = idx.at("max_order").get<std::size_t>();
  c.completeness.assign(c.max_order + 1, Completeness::ConstructibleOnly);
  for (const auto& [k, v] : idx.at("completeness").items()) {
    std::size_t n = std::stoul(k);
    if (n <= c.max_order && v.get<std::string>() == "complete") c.completeness[n] = Completeness::Complete;
  }
  for (const auto& note : idx.at("notes")) c.notes.push_back(note.get<std::string>());
  for (const auto& e : idx.at("entries")) {
    auto res = ingest(dir / "entries" / e.at("file").get<std::string>(), Caps{});
    auto spec = e.at("spec").get<std::string>();
    if (hex64(res.group.table_hash()) != e.at("table_hash").get<std::string>())
      throw ValidationError("catalog cache entry '" + spec + "' does not match its index");
    FiniteGroup g = res.group.relabeled(spec);
    c.entries.push_back({spec, g, fingerprint(g)});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Searches

SearchResult find_realisations(Engine& engine, const FiniteGroup& g, Construction f, const Catalog& catalog) {
  const Fingerprint target = fingerprint(g);
  const auto& entries = catalog.entries;
  std::vector<std::optional<Realisation>> hits(entries.size());
  std::vector<std::optional<Skip>> skips(entries.size());
  parallel_for(entries.size(), engine.jobs(), [&](std::size_t i) {
    const auto& e = entries[i];
    const FiniteGroup& h = e.group;
    // f(H) is a subgroup or quotient of H for every f except Aut.
    if (f != Construction::Aut && h.order() % g.order() != 0) return;
    auto out = eval_construction(engine, f, h, g.order());
    if (out.status == EvalStatus::Capped) {
      skips[i] = Skip{e.spec, out.note};
      return;
    }
    if (out.status == EvalStatus::TooLarge || out.group->order() != g.order()) return;
    if (fingerprint(*out.group) != target) return;
    if (auto iso = find_isomorphism_prefiltered(*out.group, g)) hits[i] = Realisation{e.spec, h.order(), iso->map};
  });
  SearchResult r;
  for (auto& h : hits)
    if (h) r.hits.push_back(std::move(*h));
  for (auto& s : skips)
    if (s) r.skipped.push_back(std::move(*s));
  std::stable_sort(r.hits.begin(), r.hits.end(), [](const Realisation& a, const Realisation& b) {
    return std::tie(a.order, a.spec) < std::tie(b.order, b.spec);
  });
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict RealisabilityReport::overall() const {
  std::array<Verdict, 3> vs{cond_i, cond_ii, cond_iii};
  if (std::find(vs.begin(), vs.end(), Verdict::False) != vs.end()) return Verdict::False;
  if (std::find(vs.begin(), vs.end(), Verdict::Unknown) != vs.end()) return Verdict::Unknown;
  return Verdict::True;
}

namespace {

Verdict combine(bool any_failure, bool any_unknown) {
  if (any_failure) return Verdict::False;
  if (any_unknown) return Verdict::Unknown;
  return Verdict::True;
}

std::vector<ElementId> to_target_ids(const std::vector<ElementId>& map, const Subgroup& g1) {
  std::vector<ElementId> out(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) out[i] = g1.ids()[map[i]];
  return out;
}

}  // namespace

RealisabilityReport check_completely_realisable(Engine& engine, const FiniteGroup& g, const FiniteGroup& h,
                                                Construction f) {
  RealisabilityReport r;
  r.f = f;
  r.target = g.spec();
  r.host = h.spec();

  // (i)
  {
    auto top = eval_construction(engine, f, h, g.order());
    if (top.status == EvalStatus::Capped) {
      r.cond_i = Verdict::Unknown;
      r.skipped.push_back({h.spec(), "condition (i): " + top.note});
    } else if (top.status == EvalStatus::TooLarge) {
      r.cond_i = Verdict::False;
    } else if (auto iso = find_isomorphism(*top.group, g)) {
      r.cond_i = Verdict::True;
      r.iso_i = iso->map;
    } else {
      r.cond_i = Verdict::False;
    }
  }

  // Subgroups of G up to isomorphism (conjugate subgroups are isomorphic).
  auto lg = engine.lattice(g);
  std::vector<std::size_t> g_reps;
  std::vector<FiniteGroup> g_groups;
  for (const auto& cls : lg->conjugacy_classes) {
    g_reps.push_back(cls.front());
    g_groups.push_back(as_group(lg->subgroups[cls.front()]));
  }
  auto g_classes = iso_class_representatives(g_groups);
  struct TargetClass {
    const Subgroup* subgroup;
    FiniteGroup group;
    Fingerprint fp;
  };
  std::vector<TargetClass> targets;
  for (const auto& c : g_classes) {
    const auto& grp = g_groups[c.representative];
    targets.push_back({&lg->subgroups[g_reps[c.representative]], grp, fingerprint(grp)});
  }
  r.target_classes = targets.size();

  // f on conjugacy-class representatives of H's subgroups.
  auto lh = engine.lattice(h);
  std::vector<std::size_t> h_reps;
  for (const auto& cls : lh->conjugacy_classes) h_reps.push_back(cls.front());
  r.host_classes = h_reps.size();
  std::vector<EvalOutcome> images(h_reps.size());
  std::vector<std::optional<Fingerprint>> image_fp(h_reps.size());
  parallel_for(h_reps.size(), engine.jobs(), [&](std::size_t i) {
    images[i] = eval_construction(engine, f, as_group(lh->subgroups[h_reps[i]]), g.order());
    if (images[i].status == EvalStatus::Ok) image_fp[i] = fingerprint(*images[i].group);
  });
  for (std::size_t i = 0; i < h_reps.size(); ++i)
    if (images[i].status == EvalStatus::Capped)
      r.skipped.push_back({"H1#" + std::to_string(h_reps[i]), images[i].note});

  auto image_host_ids = [&](std::size_t i) {
    // f(H1) lives inside as_group(H1); translate back to host ids.
    if (!images[i].subgroup) return std::vector<ElementId>{};
    const auto& h1 = lh->subgroups[h_reps[i]];
    std::vector<ElementId> out;
    for (ElementId x : images[i].subgroup->ids()) out.push_back(h1.ids()[x]);
    return out;
  };
  (void)image_host_ids;

  // (ii)
  bool fail = false, unknown = false;
  for (const auto& t : targets) {
    bool found = false, maybe = false;
    for (std::size_t i = 0; i < h_reps.size() && !found; ++i) {
      if (images[i].status == EvalStatus::Capped) {
        maybe = true;
        continue;
      }
      if (images[i].status != EvalStatus::Ok || *image_fp[i] != t.fp) continue;
      if (auto iso = find_isomorphism_prefiltered(*images[i].group, t.group)) {
        r.witnesses_ii.push_back({t.subgroup->ids(), lh->subgroups[h_reps[i]].ids(), to_target_ids(iso->map, *t.subgroup)});
        found = true;
      }
    }
    if (found) continue;
    if (maybe) {
      unknown = true;
    } else {
      fail = true;
      r.failures_ii.push_back({t.subgroup->ids(), describe(t.fp), t.group.order(), t.group});
    }
  }
  r.cond_ii = combine(fail, unknown);

  // (iii)
  fail = unknown = false;
  for (std::size_t i = 0; i < h_reps.size(); ++i) {
    const auto& h1 = lh->subgroups[h_reps[i]];
    if (images[i].status == EvalStatus::Capped) {
      unknown = true;
      continue;
    }
    if (images[i].status == EvalStatus::TooLarge) {
      fail = true;
      r.failures_iii.push_back({h1.ids(), images[i].note, 0, std::nullopt});
      continue;
    }
    bool found = false;
    for (const auto& t : targets) {
      if (*image_fp[i] != t.fp) continue;
      if (auto iso = find_isomorphism_prefiltered(*images[i].group, t.group)) {
        r.witnesses_iii.push_back({t.subgroup->ids(), h1.ids(), to_target_ids(iso->map, *t.subgroup)});
        found = true;
        break;
      }
    }
    if (!found) {
      fail = true;
      r.failures_iii.push_back({h1.ids(), describe(*image_fp[i]), images[i].group->order(), images[i].group});
    }
  }
  r.cond_iii = combine(fail, unknown);
  return r;
}

CompleteSearchResult find_complete_realisations(Engine& engine, const FiniteGroup& g, Construction f,
                                                const Catalog& catalog, bool keep_failing) {
  CompleteSearchResult out;
  auto candidates = find_realisations(engine, g, f, catalog);
  out.skipped = candidates.skipped;
  std::map<std::string, const CatalogEntry*> by_spec;
  for (const auto& e : catalog.entries) by_spec.emplace(e.spec, &e);
  for (const auto& hit : candidates.hits) {
    const FiniteGroup& h = by_spec.at(hit.spec)->group;
    auto rep = check_completely_realisable(engine, g, h, f);
    switch (rep.overall()) {
      case Verdict::True: out.passing.emplace_back(hit.spec, std::move(rep)); break;
      case Verdict::Unknown:
        out.skipped.push_back({hit.spec, "complete check inconclusive (caps)"});
        if (keep_failing) out.failing.emplace_back(hit.spec, std::move(rep));
        break;
      case Verdict::False:
        if (keep_failing) out.failing.emplace_back(hit.spec, std::move(rep));
        break;
    }
  }
  return out;
}

FrattiniCriterion frattini_criterion(Engine& engine, const FiniteGroup& g) {
  AutGroup aut = automorphism_group(g, engine.caps());
  if (aut.truncated) throw CapExceeded("Aut(" + g.spec() + ") exceeds the enumeration cap");
  if (!aut.table_group) throw CapExceeded("Aut(" + g.spec() + ") exceeds the table cap");
  Subgroup inn = inner_automorphisms(aut);
  const FiniteGroup& table = *aut.table_group;
  Subgroup phi = frattini(table, *engine.lattice(table));
  return {inn.subgroup_of(phi), inn.size(), phi.size(), aut.count()};
}

}  // namespace invgrp
