#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "invgrp/group.hpp"

namespace invgrp {

/// Constructor-algebra expression naming how a group is built.
///
/// Grammar (whitespace-insensitive):
///   expr   := power ('x' power)*
///   power  := atom ('^' k)?                 k-fold direct power
///   atom   := C<n> | U<n> | E<p>^<k> | Dih<n> | Dic<n> | Q<2^m> | S<n> | A<n>
///           | He<p> | SL23 | wr2(expr) | sd(expr, expr, action) | file:<path>
///           | '(' expr ')'
///   action := '[' k0: i0 i1 ... ; k1: ... ']'  |  <path to an action file>
///
/// The action lists, for generators k of K, the images of N's ids under the
/// automorphism attached to k.
struct GroupSpec {
  enum class Kind {
    Cyclic,
    Units,
    ElementaryAbelian,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Heisenberg,
    SL23,
    Product,
    Power,
    Wreath2,
    Semidirect,
    File,
  };

  Kind kind = Kind::Cyclic;
  std::size_t a = 1;
  std::size_t b = 0;
  std::vector<GroupSpec> args;
  /// File path for Kind::File; action text (inline or path) for Semidirect.
  std::string text;

  std::string to_string() const;
  friend bool operator==(const GroupSpec& x, const GroupSpec& y) { return x.to_string() == y.to_string(); }
};

GroupSpec parse_spec(std::string_view text);

/// Builds the group a spec names; the result's label is the canonical
/// spec string.
FiniteGroup build(const GroupSpec& spec, const Caps& caps = {});
FiniteGroup build(std::string_view text, const Caps& caps = {});

/// Parses action text ("k: images ; ...") into generator images.
std::vector<std::pair<ElementId, std::vector<ElementId>>> parse_action(std::string_view text);
std::string format_action(const std::vector<std::pair<ElementId, std::vector<ElementId>>>& gens);

}  // namespace invgrp
