#include "invgrp/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace invgrp {

namespace {

void check_cap(std::size_t order, const Caps& caps) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > caps.max_order)
    throw CapExceeded("order " + std::to_string(order) + " exceeds cap " + std::to_string(caps.max_order));
}

template <typename Mul>
std::vector<ElementId> make_table(std::size_t n, Mul&& mul) {
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = ElementId(mul(a, b));
  return t;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Permutation groups given as sorted lists of image words.
FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms, std::string spec) {
  const std::size_t m = perms.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(perms[i], i);
  const std::size_t deg = perms.front().size();
  std::vector<int> tmp(deg);
  auto table = make_table(m, [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < deg; ++x) tmp[x] = perms[b][perms[a][x]];
    return index.at(tmp);
  });
  return FiniteGroup(m, std::move(table), std::move(spec));
}

bool is_even(const std::vector<int>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup cyclic(std::size_t n, const Caps& caps) {
  check_cap(n, caps);
  return FiniteGroup(n, make_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                     "C" + std::to_string(n));
}

FiniteGroup units(std::size_t n, const Caps& caps) {
  if (n == 0) throw ValidationError("units of 0");
  std::vector<std::size_t> res;
  for (std::size_t r = 0; r < n; ++r)
    if (std::gcd(r, n) == 1) res.push_back(r);
  check_cap(res.size(), caps);
  std::vector<std::size_t> index(n, 0);
  for (std::size_t i = 0; i < res.size(); ++i) index[res[i]] = i;
  return FiniteGroup(res.size(),
                     make_table(res.size(), [&](std::size_t a, std::size_t b) { return index[(res[a] * res[b]) % n]; }),
                     "U" + std::to_string(n));
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const Caps& caps) {
  if (!is_prime(p)) throw ValidationError("E<p>^<k> needs a prime p");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    check_cap(n, caps);
  }
  auto table = make_table(n, [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  });
  return FiniteGroup(n, std::move(table), "E" + std::to_string(p) + "^" + std::to_string(k));
}

FiniteGroup dihedral(std::size_t n, const Caps& caps) {
  if (n == 0) throw ValidationError("Dih0");
  check_cap(2 * n, caps);
  auto table = make_table(2 * n, [n](std::size_t a, std::size_t b) {
    std::size_t i = a % n, s = a / n, j = b % n, t = b / n;
    // r^i s^s * r^j s^t = r^(i + (-1)^s j) s^(s+t)
    std::size_t rot = s ? (i + n - j) % n : (i + j) % n;
    return ((s + t) % 2) * n + rot;
  });
  return FiniteGroup(2 * n, std::move(table), "Dih" + std::to_string(n));
}

FiniteGroup dicyclic(std::size_t n, const Caps& caps) {
  if (n == 0) throw ValidationError("Dic0");
  check_cap(4 * n, caps);
  const std::size_t m = 2 * n;
  auto table = make_table(4 * n, [n, m](std::size_t a, std::size_t b) {
    std::size_t i = a % m, s = a / m, j = b % m, t = b / m;
    if (!s) return t * m + (i + j) % m;
    // a^i x a^j x^t = a^(i-j) x^(1+t), x^2 = a^n
    std::size_t rot = (i + m - j) % m;
    if (!t) return m + rot;
    return (rot + n) % m;
  });
  return FiniteGroup(4 * n, std::move(table), "Dic" + std::to_string(n));
}

FiniteGroup symmetric(std::size_t n, const Caps& caps) {
  if (n == 0) throw ValidationError("S0");
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    check_cap(f, caps);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(perms, "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n, const Caps& caps) {
  if (n == 0) throw ValidationError("A0");
  std::size_t f = 1;
  for (std::size_t i = 3; i <= n; ++i) {
    f *= i;
    check_cap(f, caps);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    if (is_even(p)) perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(perms, "A" + std::to_string(n));
}

FiniteGroup heisenberg(std::size_t p, const Caps& caps) {
  if (!is_prime(p)) throw ValidationError("He<p> needs a prime p");
  check_cap(p * p * p, caps);
  auto table = make_table(p * p * p, [p](std::size_t x, std::size_t y) {
    std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
  });
  return FiniteGroup(p * p * p, std::move(table), "He" + std::to_string(p));
}

FiniteGroup sl23() {
  using M = std::array<int, 4>;
  std::vector<M> mats;
  const M identity{1, 0, 0, 1};
  mats.push_back(identity);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          M m{a, b, c, d};
          if (((a * d - b * c) % 3 + 3) % 3 == 1 && m != identity) mats.push_back(m);
        }
  auto index_of = [&](const M& m) {
    return std::size_t(std::find(mats.begin(), mats.end(), m) - mats.begin());
  };
  auto table = make_table(mats.size(), [&](std::size_t i, std::size_t j) {
    const M& x = mats[i];
    const M& y = mats[j];
    M r{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3, (x[2] * y[0] + x[3] * y[2]) % 3,
        (x[2] * y[1] + x[3] * y[3]) % 3};
    return index_of(r);
  });
  return FiniteGroup(mats.size(), std::move(table), "SL23");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps) {
  const std::size_t a = g.order(), b = h.order();
  check_cap(a * b, caps);
  auto table = make_table(a * b, [&](std::size_t x, std::size_t y) {
    return std::size_t(g.mul(ElementId(x / b), ElementId(y / b))) * b + h.mul(ElementId(x % b), ElementId(y % b));
  });
  const bool wrap = h.spec().find(" x ") != std::string::npos;
  return FiniteGroup(a * b, std::move(table), g.spec() + " x " + (wrap ? "(" + h.spec() + ")" : h.spec()));
}

bool is_automorphism(const FiniteGroup& g, const Perm& p) {
  const std::size_t n = g.order();
  if (p.size() != n || p[0] != 0) return false;
  std::vector<char> seen(n);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p[g.mul(ElementId(a), ElementId(b))] != g.mul(p[a], p[b])) return false;
  return true;
}

Action extend_action(const FiniteGroup& n, const FiniteGroup& k,
                     const std::vector<std::pair<ElementId, Perm>>& generator_images) {
  for (const auto& [x, p] : generator_images) {
    if (x >= k.order()) throw ValidationError("action names an element outside K");
    if (!is_automorphism(n, p)) throw ValidationError("action image is not an automorphism");
  }
  Perm identity(n.order());
  std::iota(identity.begin(), identity.end(), ElementId{0});
  Action act;
  act.images.assign(k.order(), Perm{});
  act.images[0] = identity;
  std::vector<ElementId> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ElementId u = queue[qi];
    for (const auto& [x, p] : generator_images) {
      ElementId v = k.mul(u, x);
      Perm composed(n.order());
      for (std::size_t b = 0; b < n.order(); ++b) composed[b] = act.images[u][p[b]];
      if (act.images[v].empty()) {
        act.images[v] = std::move(composed);
        queue.push_back(v);
      } else if (act.images[v] != composed) {
        throw ValidationError("action is not a homomorphism");
      }
    }
  }
  if (queue.size() != k.order()) throw ValidationError("action generators do not generate K");
  return act;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k, const Action& action,
                               const Caps& caps) {
  const std::size_t a = n.order(), b = k.order();
  check_cap(a * b, caps);
  if (action.images.size() != b) throw ValidationError("action must give one automorphism per element of K");
  for (const auto& p : action.images)
    if (!is_automorphism(n, p)) throw ValidationError("action image is not an automorphism");
  for (std::size_t x = 0; x < b; ++x)
    for (std::size_t y = 0; y < b; ++y) {
      const Perm& pxy = action.images[k.mul(ElementId(x), ElementId(y))];
      for (std::size_t e = 0; e < a; ++e)
        if (pxy[e] != action.images[x][action.images[y][e]])
          throw ValidationError("action is not a homomorphism");
    }
  auto table = make_table(a * b, [&](std::size_t u, std::size_t v) {
    std::size_t na = u / b, kx = u % b, nb = v / b, ky = v % b;
    return std::size_t(n.mul(ElementId(na), action.images[kx][nb])) * b + k.mul(ElementId(kx), ElementId(ky));
  });
  return FiniteGroup(a * b, std::move(table), "sd(" + n.spec() + ", " + k.spec() + ")");
}

FiniteGroup wreath_with_c2(const FiniteGroup& a, const Caps& caps) {
  const std::size_t m = a.order();
  check_cap(2 * m * m, caps);
  FiniteGroup base = direct_product(a, a, caps);
  FiniteGroup c2 = cyclic(2);
  Perm identity(m * m), swap(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      identity[x * m + y] = ElementId(x * m + y);
      swap[x * m + y] = ElementId(y * m + x);
    }
  Action act{{identity, swap}};
  return semidirect_product(base, c2, act, caps).relabeled("wr2(" + a.spec() + ")");
}

}  // namespace invgrp
