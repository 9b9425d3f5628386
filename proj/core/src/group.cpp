#include "invgrp/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace invgrp {

namespace {

std::uint64_t fnv1a(std::span<const ElementId> table, std::size_t order) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(order);
  for (ElementId x : table) {
    mix(x & 0xff);
    mix(x >> 8);
  }
  return h;
}

}  // namespace

bool validate_table(std::size_t n, std::span<const ElementId> t, bool check_associativity) {
  if (n == 0) throw ValidationError("group order must be positive");
  if (t.size() != n * n) throw ValidationError("table size is not order^2");
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) throw ValidationError("id 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      ElementId v = t[a * n + b];
      if (v >= n || seen[v]) throw ValidationError("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      ElementId v = t[a * n + b];
      if (seen[v]) throw ValidationError("column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }
  if (!check_associativity) return true;
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return t[std::size_t(t[a * n + b]) * n + c] == t[a * n + t[b * n + c]];
  };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw ValidationError("table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < 1'000'000; ++i) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (!assoc(a, b, c)) throw ValidationError("table is not associative (sampled triple)");
  }
  return false;
}

FiniteGroup::FiniteGroup() : FiniteGroup(1, {0}, "C1") {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementId> table, std::string spec,
                         bool check_associativity) {
  validate_table(order, table, check_associativity);
  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(table);
  d->spec = std::move(spec);
  d->inverses.resize(order);
  d->element_orders.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    const ElementId* r = d->table.data() + a * order;
    for (std::size_t b = 0; b < order; ++b) {
      if (r[b] == 0) {
        d->inverses[a] = ElementId(b);
        break;
      }
    }
    std::uint32_t k = 1;
    ElementId x = ElementId(a);
    while (x != 0) {
      x = d->table[std::size_t(x) * order + a];
      ++k;
    }
    d->element_orders[a] = a == 0 ? 1 : k;
  }
  for (std::size_t a = 0; a < order; ++a) {
    if (d->table[a * order + d->inverses[a]] != 0) throw ValidationError("inverse table inconsistent");
  }
  d->hash = fnv1a(d->table, order);
  d_ = std::move(d);
}

ElementId FiniteGroup::power(ElementId x, std::size_t k) const {
  ElementId result = 0;
  ElementId base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul(ElementId(a), ElementId(b)) != mul(ElementId(b), ElementId(a))) return false;
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : d_->element_orders) e = std::lcm(e, std::size_t(o));
  return e;
}

FiniteGroup FiniteGroup::relabeled(std::string spec) const {
  FiniteGroup g = *this;
  auto d = std::make_shared<Data>(*d_);
  d->spec = std::move(spec);
  g.d_ = std::move(d);
  return g;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return std::size_t(h);
}

std::vector<ElementId> ElementSet::ids() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(ElementId(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

Subgroup::Subgroup(FiniteGroup parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), ids_(members_.ids()) {}

Subgroup::Subgroup(FiniteGroup parent, std::span<const ElementId> sorted_ids)
    : parent_(std::move(parent)), members_(parent_.order()), ids_(sorted_ids.begin(), sorted_ids.end()) {
  for (auto x : ids_) members_.set(x);
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  ElementSet s(parent.order());
  s.set(0);
  return Subgroup(parent, std::move(s));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<ElementId> ids(parent.order());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return Subgroup(parent, ids);
}

Subgroup join_element(const Subgroup& k, std::span<const ElementId> gens, ElementId x) {
  if (k.contains(x)) return k;
  const FiniteGroup& g = k.parent();
  ElementSet set = k.members();
  std::vector<ElementId> reps{0};
  std::vector<ElementId> all_gens(gens.begin(), gens.end());
  all_gens.push_back(x);
  // Dimino: the result is a union of right cosets k*r.
  auto add_coset = [&](ElementId r) {
    for (ElementId e : k.ids()) set.set(g.mul(e, r));
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : all_gens) {
      ElementId v = g.mul(reps[i], s);
      if (!set.test(v)) add_coset(v);
    }
  }
  return Subgroup(g, std::move(set));
}

Subgroup closure(const FiniteGroup& parent, std::span<const ElementId> seed) {
  Subgroup k = Subgroup::trivial(parent);
  std::vector<ElementId> gens;
  for (ElementId s : seed) {
    if (k.contains(s)) continue;
    k = join_element(k, gens, s);
    gens.push_back(s);
  }
  return k;
}

std::vector<ElementId> greedy_generators(const Subgroup& k) {
  Subgroup cur = Subgroup::trivial(k.parent());
  std::vector<ElementId> gens;
  for (ElementId x : k.ids()) {
    if (cur.contains(x)) continue;
    cur = join_element(cur, gens, x);
    gens.push_back(x);
    if (cur.size() == k.size()) break;
  }
  return gens;
}

std::vector<ElementId> greedy_generators(const FiniteGroup& g) {
  return greedy_generators(Subgroup::whole(g));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.subgroup_of(a)) return a;
  if (a.subgroup_of(b)) return b;
  auto gens = greedy_generators(a);
  Subgroup cur = a;
  for (ElementId x : greedy_generators(b)) {
    if (cur.contains(x)) continue;
    cur = join_element(cur, gens, x);
    gens.push_back(x);
  }
  return cur;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), a.members() & b.members());
}

Subgroup centralizer(const FiniteGroup& parent, const Subgroup& k) {
  auto gens = greedy_generators(k);
  ElementSet s(parent.order());
  for (std::size_t x = 0; x < parent.order(); ++x) {
    bool ok = true;
    for (ElementId y : gens) {
      if (parent.mul(ElementId(x), y) != parent.mul(y, ElementId(x))) {
        ok = false;
        break;
      }
    }
    if (ok) s.set(ElementId(x));
  }
  return Subgroup(parent, std::move(s));
}

FiniteGroup as_group(const Subgroup& k) {
  const FiniteGroup& g = k.parent();
  const auto& ids = k.ids();
  const std::size_t m = ids.size();
  std::vector<ElementId> index(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) index[ids[i]] = ElementId(i);
  std::vector<ElementId> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = index[g.mul(ids[i], ids[j])];
  return FiniteGroup(m, std::move(table), "sub(" + g.spec() + ")");
}

bool is_normal(const FiniteGroup& parent, const Subgroup& k) {
  if (k.size() == 1 || k.size() == parent.order() || 2 * k.size() == parent.order()) return true;
  auto kg = greedy_generators(k);
  for (ElementId g : greedy_generators(parent))
    for (ElementId x : kg)
      if (!k.contains(parent.conjugate(x, g))) return false;
  return true;
}

FiniteGroup quotient(const FiniteGroup& parent, const Subgroup& n) {
  if (!is_normal(parent, n)) throw ValidationError("quotient by a subgroup that is not normal");
  const std::size_t order = parent.order();
  constexpr ElementId kUnset = 0xffff;
  std::vector<ElementId> block(order, kUnset);
  std::vector<ElementId> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (block[x] != kUnset) continue;
    auto b = ElementId(reps.size());
    reps.push_back(ElementId(x));
    for (ElementId m : n.ids()) block[parent.mul(ElementId(x), m)] = b;
  }
  const std::size_t q = reps.size();
  std::vector<ElementId> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = block[parent.mul(reps[i], reps[j])];
  return FiniteGroup(q, std::move(table), parent.spec() + "/N");
}

}  // namespace invgrp
