#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "invgrp/group.hpp"

namespace invgrp {

/// A permutation of a group's element ids.
using Perm = std::vector<ElementId>;

/// Left action of K on N: images[x] is the automorphism of N attached to
/// element x of K, with images[x*y] = images[x] o images[y].
struct Action {
  std::vector<Perm> images;
};

// Element numbering per family:
//   cyclic n          k -> k
//   units n           residues coprime to n, ascending (1 first)
//   dihedral n        r^k -> k, r^k s -> n + k          (order 2n)
//   dicyclic n        a^k -> k, a^k x -> 2n + k         (order 4n, x^2 = a^n)
//   symmetric n       lexicographic rank of the image word; x^(ab) = (x^a)^b
//   alternating n     even permutations in lexicographic order
//   heisenberg p      (a,b,c) -> a p^2 + b p + c, (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
//   sl23              identity first, then det-1 matrices (a,b,c,d) in lexicographic order
//   products          row-major over (left id, right id)

FiniteGroup cyclic(std::size_t n, const Caps& caps = {});
FiniteGroup units(std::size_t n, const Caps& caps = {});
FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const Caps& caps = {});
FiniteGroup dihedral(std::size_t n, const Caps& caps = {});
FiniteGroup dicyclic(std::size_t n, const Caps& caps = {});
FiniteGroup symmetric(std::size_t n, const Caps& caps = {});
FiniteGroup alternating(std::size_t n, const Caps& caps = {});
FiniteGroup heisenberg(std::size_t p, const Caps& caps = {});
FiniteGroup sl23();

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps = {});

/// Multiplication (a,x)(b,y) = (a * action(x)(b), x*y); throws
/// ValidationError when the action is not a homomorphism into Aut(n).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k, const Action& action,
                               const Caps& caps = {});

/// (a x a) extended by the coordinate swap.
FiniteGroup wreath_with_c2(const FiniteGroup& a, const Caps& caps = {});

/// Extends automorphisms given on a generating set of k to the full action.
/// Throws ValidationError if an image is not an automorphism or the
/// assignment does not extend to a homomorphism.
Action extend_action(const FiniteGroup& n, const FiniteGroup& k,
                     const std::vector<std::pair<ElementId, Perm>>& generator_images);

bool is_automorphism(const FiniteGroup& g, const Perm& p);

}  // namespace invgrp
