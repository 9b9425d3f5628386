#include "invgrp/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace invgrp {

namespace {

constexpr ElementId kUnset = 0xffff;

struct Classes {
  std::vector<std::uint32_t> class_size;
  std::size_t count = 0;
};

Classes conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Classes c;
  c.class_size.assign(n, 0);
  std::vector<char> done(n, 0);
  std::vector<ElementId> orbit;
  std::vector<char> in_orbit(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    orbit.clear();
    for (std::size_t y = 0; y < n; ++y) {
      ElementId z = g.conjugate(ElementId(x), ElementId(y));
      if (!in_orbit[z]) {
        in_orbit[z] = 1;
        orbit.push_back(z);
      }
    }
    for (ElementId z : orbit) {
      done[z] = 1;
      in_orbit[z] = 0;
      c.class_size[z] = std::uint32_t(orbit.size());
    }
    ++c.count;
  }
  return c;
}

class Backtracker {
 public:
  Backtracker(const HomSearch& s, const std::function<bool(const std::vector<ElementId>&)>& visit)
      : s_(s), visit_(visit), phi_(s.gens.size(), std::vector<ElementId>(s.source.order(), kUnset)),
        images_(s.gens.size()), used_(s.target.order(), 0) {}

  std::size_t run() {
    if (s_.gens.empty()) {
      std::vector<ElementId> m(s_.source.order(), kUnset);
      m[0] = 0;
      visit_(m);
      return 1;
    }
    recurse(0);
    return count_;
  }

 private:
  bool extend(std::size_t level) {
    auto& phi = phi_[level];
    std::fill(phi.begin(), phi.end(), kUnset);
    if (s_.injective) std::fill(used_.begin(), used_.end(), 0);
    phi[0] = 0;
    used_[0] = 1;
    queue_.assign(1, 0);
    const FiniteGroup& src = s_.source;
    const FiniteGroup& dst = s_.target;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      ElementId u = queue_[qi];
      ElementId pu = phi[u];
      for (std::size_t j = 0; j <= level; ++j) {
        ElementId v = src.mul(u, s_.gens[j]);
        ElementId w = dst.mul(pu, images_[j]);
        if (phi[v] == kUnset) {
          if (s_.injective) {
            if (used_[w]) return false;
            used_[w] = 1;
          }
          phi[v] = w;
          queue_.push_back(v);
        } else if (phi[v] != w) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t level) {
    if (stop_) return;
    if (level == s_.gens.size()) {
      ++count_;
      if (!visit_(phi_[level - 1])) stop_ = true;
      return;
    }
    for (ElementId y : s_.candidates[level]) {
      images_[level] = y;
      if (extend(level)) recurse(level + 1);
      if (stop_) return;
    }
  }

  const HomSearch& s_;
  const std::function<bool(const std::vector<ElementId>&)>& visit_;
  std::vector<std::vector<ElementId>> phi_;
  std::vector<ElementId> images_;
  std::vector<char> used_;
  std::vector<ElementId> queue_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_homomorphisms(const HomSearch& search,
                                    const std::function<bool(const std::vector<ElementId>&)>& visit) {
  return Backtracker(search, visit).run();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> element_profile(const FiniteGroup& g) {
  auto cls = conjugacy_classes(g);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    out[x] = {g.element_orders()[x], std::uint32_t(g.order() / cls.class_size[x])};
  return out;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Fingerprint f;
  f.order = n;
  f.exponent = g.exponent();
  std::map<std::size_t, std::size_t> hist;
  for (auto o : g.element_orders()) ++hist[o];
  f.element_order_histogram.assign(hist.begin(), hist.end());
  auto cls = conjugacy_classes(g);
  f.conjugacy_class_count = cls.count;
  f.center_order = std::size_t(std::count(cls.class_size.begin(), cls.class_size.end(), 1u));
  f.abelian = f.center_order == n;
  if (f.abelian) {
    f.derived_order = 1;
  } else {
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
    f.derived_order = closure(g, comms).size();
  }
  return f;
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<ElementId>& map) {
  const std::size_t n = a.order();
  if (b.order() != n || map.size() != n || map[0] != 0) return false;
  std::vector<char> seen(n, 0);
  for (auto v : map) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (map[a.mul(ElementId(x), ElementId(y))] != b.mul(map[x], map[y])) return false;
  return true;
}

namespace {

using Colours = std::array<std::vector<std::uint32_t>, 2>;

bool same_histogram(const Colours& col) {
  auto x = col[0], y = col[1];
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 29);
}

/// Hash of x's colour and the multiset of (colour(y), colour(xy),
/// colour(yx)) over all y. The multiset is hashed as a sum, so no sorting
/// is needed.
std::uint64_t signature(const FiniteGroup& g, const std::vector<std::uint32_t>& c, std::size_t x) {
  const std::size_t n = g.order();
  auto row = g.row(ElementId(x));
  std::uint64_t sum = 0;
  for (std::size_t y = 0; y < n; ++y) {
    const ElementId yx = g.mul(ElementId(y), ElementId(x));
    sum += mix(mix(c[y], c[row[y]]), c[yx] * 2 + (yx == row[y]));
  }
  return mix(c[x], sum);
}

/// Colour refinement run on both groups with a shared palette: x is
/// repeatedly recoloured by its signature. Isomorphisms that respect the
/// starting colours preserve the refined ones, so a histogram mismatch
/// rules them out. Returns false on mismatch.
bool refine(const FiniteGroup& a, const FiniteGroup& b, Colours& col) {
  const std::size_t n = a.order();
  std::array<const FiniteGroup*, 2> gs{&a, &b};
  if (!same_histogram(col)) return false;
  std::size_t colours = std::set<std::uint32_t>(col[0].begin(), col[0].end()).size();
  while (colours < n) {
    std::unordered_map<std::uint64_t, std::uint32_t> palette;
    Colours next;
    for (int i = 0; i < 2; ++i) {
      next[i].resize(n);
      for (std::size_t x = 0; x < n; ++x)
        next[i][x] = palette.emplace(signature(*gs[i], col[i], x), std::uint32_t(palette.size())).first->second;
    }
    col = std::move(next);
    if (!same_histogram(col)) return false;
    if (palette.size() == colours) break;
    colours = palette.size();
  }
  return true;
}

std::vector<char> members(const Subgroup& k) {
  std::vector<char> in(k.parent().order(), 0);
  for (auto x : k.ids()) in[x] = 1;
  return in;
}

/// Per-element data that any isomorphism preserves: element order,
/// centralizer order, numbers of square and fourth roots, membership in
/// Z, Z2, G', [G', G] and the subgroups generated by p-th powers, and the
/// orders of x modulo G' and modulo Z.
std::vector<std::vector<std::uint32_t>> element_features(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto prof = element_profile(g);
  std::vector<std::uint32_t> roots2(n, 0), roots4(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    ElementId y2 = g.mul(ElementId(y), ElementId(y));
    ++roots2[y2];
    ++roots4[g.mul(y2, y2)];
  }
  std::vector<char> in_z(n, 0);
  for (std::size_t x = 0; x < n; ++x) in_z[x] = prof[x].second == n;

  std::vector<char> seen(n, 0);
  std::vector<ElementId> comms;
  auto add = [&](ElementId c) {
    if (!seen[c]) {
      seen[c] = 1;
      comms.push_back(c);
    }
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) add(g.commutator(ElementId(a), ElementId(b)));
  Subgroup d = closure(g, comms);
  auto in_d = members(d);
  std::fill(seen.begin(), seen.end(), 0);
  comms.clear();
  for (auto x : d.ids())
    for (std::size_t y = 0; y < n; ++y) add(g.commutator(x, ElementId(y)));
  auto in_g3 = members(closure(g, comms));

  std::vector<char> in_z2(n, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n && in_z2[x]; ++y) in_z2[x] = in_z[g.commutator(ElementId(x), ElementId(y))];

  std::vector<std::vector<char>> in_powers;
  std::size_t m = n;
  for (std::size_t p = 2; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    std::vector<ElementId> pw;
    for (std::size_t y = 0; y < n; ++y) pw.push_back(g.power(ElementId(y), p));
    in_powers.push_back(members(closure(g, pw)));
  }

  auto order_mod = [&](ElementId x, const std::vector<char>& in) {
    std::uint32_t k = 1;
    for (ElementId p = x; !in[p]; p = g.mul(p, x)) ++k;
    return k;
  };

  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto& f = out[x];
    f = {prof[x].first, prof[x].second, roots2[x], roots4[x], std::uint32_t(in_z2[x]), std::uint32_t(in_d[x]),
         std::uint32_t(in_g3[x]), order_mod(ElementId(x), in_d), order_mod(ElementId(x), in_z)};
    for (const auto& in : in_powers) f.push_back(in[x]);
  }
  return out;
}

}  // namespace

namespace {

/// Orders of the subgroups generated by each pair of elements, as a
/// per-element histogram.
std::vector<std::vector<std::uint32_t>> pair_closure_features(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> size(n * n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<ElementId> members;
  std::uint32_t round = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      ++round;
      members.assign(1, 0);
      stamp[0] = round;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (ElementId s : {ElementId(x), ElementId(y)}) {
          ElementId z = g.mul(members[i], s);
          if (stamp[z] != round) {
            stamp[z] = round;
            members.push_back(z);
          }
        }
      size[x * n + y] = size[y * n + x] = std::uint32_t(members.size());
    }
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::map<std::uint32_t, std::uint32_t> hist;
    for (std::size_t y = 0; y < n; ++y) ++hist[size[x * n + y]];
    for (auto [k, v] : hist) {
      out[x].push_back(k);
      out[x].push_back(v);
    }
  }
  return out;
}

RefinedColouring refine_from(const FiniteGroup& g, const std::vector<std::vector<std::uint32_t>>& features) {
  const std::size_t n = g.order();
  RefinedColouring r;
  r.colours.resize(n);
  r.hash = mix(0, n);
  std::map<std::vector<std::uint32_t>, std::uint32_t> start;
  for (const auto& f : features) ++start[f];
  std::uint32_t rank = 0;
  for (auto& [f, count] : start) {
    for (auto v : f) r.hash = mix(r.hash, v);
    r.hash = mix(r.hash, count);
    count = rank++;
  }
  for (std::size_t x = 0; x < n; ++x) r.colours[x] = start.at(features[x]);

  std::size_t colours = start.size();
  std::vector<std::uint64_t> sigs(n);
  while (colours < n) {
    std::map<std::uint64_t, std::uint32_t> palette;
    for (std::size_t x = 0; x < n; ++x) ++palette[sigs[x] = signature(g, r.colours, x)];
    rank = 0;
    for (auto& [sig, count] : palette) {
      r.hash = mix(mix(r.hash, sig), count);
      count = rank++;
    }
    for (std::size_t x = 0; x < n; ++x) r.colours[x] = palette.at(sigs[x]);
    if (palette.size() == colours) break;
    colours = palette.size();
  }
  return r;
}

}  // namespace

RefinedColouring refined_colouring(const FiniteGroup& g) { return refine_from(g, element_features(g)); }

const RefinedColouring& RefinedColouring::deepened(const FiniteGroup& g) const {
  std::call_once(deeper_->once, [&] {
    auto features = pair_closure_features(g);
    for (std::size_t x = 0; x < g.order(); ++x) features[x].push_back(colours[x]);
    deeper_->colouring = std::make_unique<RefinedColouring>(refine_from(g, features));
  });
  return *deeper_->colouring;
}

namespace {

/// Individualization-refinement along generators. At each level the
/// element of `a` outside the mapped subgroup with the smallest colour
/// class (ties: higher order, then lower id) is paired with each
/// same-coloured element of `b` in turn. The partial map is closed under
/// right multiplication by the chosen generators; then both get a fresh
/// colour and the colouring is refined. A conflict, a collision or a
/// colour mismatch prunes the branch. Once the map is total no refinement
/// is needed. Depth is at most the number of
/// generators needed. With a node budget the search may give up, which
/// gave_up() reports.
class IndividualizingSearch {
 public:
  IndividualizingSearch(const FiniteGroup& a, const FiniteGroup& b, std::size_t budget = SIZE_MAX)
      : a_(a), b_(b), n_(a.order()), budget_(budget) {}

  bool gave_up() const { return gave_up_; }

  std::optional<std::vector<ElementId>> run(Colours col) {
    if (!refine(a_, b_, col)) return std::nullopt;
    map_.assign(n_, kUnset);
    inv_.assign(n_, kUnset);
    map_[0] = inv_[0] = 0;
    domain_ = {0};
    if (recurse(0, col)) return map_;
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t level, const Colours& col) {
    if (domain_.size() == n_) return is_isomorphism(a_, b_, map_);
    std::vector<std::uint32_t> size(2 * n_ + level + 1, 0);
    for (auto c : col[0]) ++size[c];
    std::size_t best = n_;
    for (std::size_t x = 1; x < n_; ++x) {
      if (map_[x] != kUnset) continue;
      if (best == n_ || size[col[0][x]] < size[col[0][best]] ||
          (size[col[0][x]] == size[col[0][best]] && a_.element_order(ElementId(x)) > a_.element_order(ElementId(best))))
        best = x;
    }
    const std::uint32_t fresh = std::uint32_t(2 * n_ + level);
    const std::uint32_t target = col[0][best];
    for (std::size_t y = 0; y < n_; ++y) {
      if (col[1][y] != target || inv_[y] != kUnset) continue;
      if (budget_-- == 0) {
        gave_up_ = true;
        return false;
      }
      auto saved_map = map_, saved_inv = inv_;
      auto saved_domain = domain_;
      gens_.push_back({ElementId(best), ElementId(y)});
      if (extend(col)) {
        if (domain_.size() == n_) {
          if (is_isomorphism(a_, b_, map_)) return true;
        } else {
          Colours next = col;
          next[0][best] = fresh;
          next[1][y] = fresh;
          if (refine(a_, b_, next) && respects(next) && recurse(level + 1, next)) return true;
          if (gave_up_) return false;
        }
      }
      gens_.pop_back();
      map_ = std::move(saved_map);
      inv_ = std::move(saved_inv);
      domain_ = std::move(saved_domain);
    }
    return false;
  }

  bool respects(const Colours& col) const {
    for (auto h : domain_)
      if (col[0][h] != col[1][map_[h]]) return false;
    return true;
  }

  bool extend(const Colours& col) {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      const ElementId h = domain_[i];
      for (auto [gx, gy] : gens_) {
        const ElementId hx = a_.mul(h, gx), img = b_.mul(map_[h], gy);
        if (map_[hx] == kUnset) {
          if (inv_[img] != kUnset || col[0][hx] != col[1][img]) return false;
          map_[hx] = img;
          inv_[img] = hx;
          domain_.push_back(hx);
        } else if (map_[hx] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  const std::size_t n_;
  std::size_t budget_;
  bool gave_up_ = false;
  std::vector<ElementId> map_, inv_, domain_;
  std::vector<std::pair<ElementId, ElementId>> gens_;
};

/// Below this order plain backtracking over colour classes is cheaper
/// than refining at every node.
constexpr std::size_t kIndividualizeFrom = 32;

/// Refinements tried before switching to the deepened colourings.
constexpr std::size_t kQuickBudget = 64;

std::optional<Isomorphism> search_isomorphism(const FiniteGroup& a, const RefinedColouring& ra, const FiniteGroup& b,
                                              const RefinedColouring& rb) {
  if (a.order() != b.order() || ra.hash != rb.hash) return std::nullopt;
  if (a.same_table(b)) {
    std::vector<ElementId> id(a.order());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = ElementId(x);
    return Isomorphism{a, b, std::move(id)};
  }
  std::optional<Isomorphism> found;
  if (a.order() >= kIndividualizeFrom) {
    IndividualizingSearch quick(a, b, kQuickBudget);
    auto m = quick.run(Colours{ra.colours, rb.colours});
    if (!m && quick.gave_up()) {
      const auto& da = ra.deepened(a);
      const auto& db = rb.deepened(b);
      if (da.hash != db.hash) return std::nullopt;
      m = IndividualizingSearch(a, b).run(Colours{da.colours, db.colours});
    }
    if (m) found = Isomorphism{a, b, std::move(*m)};
  } else {
    HomSearch s{a, b, greedy_generators(a), {}, true};
    for (ElementId x : s.gens) {
      std::vector<ElementId> cands;
      for (std::size_t y = 0; y < b.order(); ++y)
        if (rb.colours[y] == ra.colours[x]) cands.push_back(ElementId(y));
      s.candidates.push_back(std::move(cands));
    }
    enumerate_homomorphisms(s, [&](const std::vector<ElementId>& m) {
      found = Isomorphism{a, b, m};
      return false;
    });
  }
  if (found && !is_isomorphism(a, b, found->map)) throw Error("isomorphism search produced an invalid map");
  return found;
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  return find_isomorphism_prefiltered(a, b);
}

std::optional<Isomorphism> find_isomorphism_prefiltered(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  return search_isomorphism(a, refined_colouring(a), b, refined_colouring(b));
}

std::optional<Isomorphism> find_isomorphism_refined(const FiniteGroup& a, const RefinedColouring& ra,
                                                    const FiniteGroup& b, const RefinedColouring& rb) {
  return search_isomorphism(a, ra, b, rb);
}

std::vector<IsoClass> iso_class_representatives(const std::vector<FiniteGroup>& groups) {
  std::vector<RefinedColouring> rc;
  rc.reserve(groups.size());
  for (const auto& g : groups) rc.push_back(refined_colouring(g));
  std::vector<IsoClass> classes;
  std::map<std::tuple<Fingerprint, std::uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto& bucket = buckets[{fingerprint(groups[i]), rc[i].hash}];
    bool placed = false;
    for (std::size_t c : bucket) {
      std::size_t r = classes[c].representative;
      if (search_isomorphism(groups[r], rc[r], groups[i], rc[i])) {
        classes[c].members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back({i, {i}});
    }
  }
  return classes;
}

}  // namespace invgrp
