#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isospec/groups/characters.hpp"
#include "isospec/groups/group_table.hpp"
#include "isospec/groups/perm_group.hpp"

namespace isospec::groups {

/// Outcome of testing a triple (G, H1, H2) for the Gassmann-Sunada property.
struct GassmannVerdict {
  /// Every conjugacy class meets H1 and H2 in equally many elements.
  bool condition2_holds = false;
  /// Per class: (|C ∩ H1|, |C ∩ H2|).
  std::vector<std::pair<std::size_t, std::size_t>> intersection_table;
  /// The permutation characters on H1\G and H2\G coincide.
  bool characters_equal = false;
  bool subgroups_conjugate = false;
  bool is_gassmann_system = false;
  ClassFunction character1;
  ClassFunction character2;
};

/// Exhaustive search for x with x^-1 H1 x = H2.
inline std::optional<std::size_t> conjugating_element(const PermGroup& G, const Subgroup& H1, const Subgroup& H2) {
  if (H1.order() != H2.order()) return std::nullopt;
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool inside = true;
    for (std::size_t h : H1.element_indices()) {
      if (!H2.contains_index(G.conjugate(h, x))) {
        inside = false;
        break;
      }
    }
    if (inside) return x;
  }
  return std::nullopt;
}

inline bool are_conjugate(const PermGroup& G, const Subgroup& H1, const Subgroup& H2) {
  return conjugating_element(G, H1, H2).has_value();
}

/// Class-intersection counts of a subgroup.
inline std::vector<std::size_t> class_intersections(const PermGroup& G, const Subgroup& H) {
  std::vector<std::size_t> counts(G.classes().size(), 0);
  for (std::size_t h : H.element_indices()) ++counts[G.class_of(h)];
  return counts;
}

/// Compares class intersections and cross-checks against
/// equality of permutation characters; the two must agree.
inline GassmannVerdict is_gassmann(const PermGroup& G, const Subgroup& H1, const Subgroup& H2) {
  if (&H1.parent() != &G || &H2.parent() != &G)
    throw Error(Errc::NotASubgroup, "subgroups must belong to the given group");
  GassmannVerdict v;
  const auto c1 = class_intersections(G, H1);
  const auto c2 = class_intersections(G, H2);
  for (std::size_t i = 0; i < c1.size(); ++i) v.intersection_table.emplace_back(c1[i], c2[i]);
  v.condition2_holds = H1.order() == H2.order() && c1 == c2;

  v.character1 = permutation_character(G, H1);
  v.character2 = permutation_character(G, H2);
  v.characters_equal = v.character1 == v.character2;
  if (v.condition2_holds != v.characters_equal)
    throw std::logic_error("class-intersection test disagrees with permutation characters");

  v.subgroups_conjugate = are_conjugate(G, H1, H2);
  v.is_gassmann_system = v.condition2_holds && !v.subgroups_conjugate;
  return v;
}

struct OrderStatisticsVerdict {
  bool same_statistics = false;
  std::map<std::size_t, std::size_t> statistics1;
  std::map<std::size_t, std::size_t> statistics2;
  /// Filled only for d <= 16, by exhaustive isomorphism search.
  std::optional<bool> isomorphic;
};

/// Equal element-order counts of H1 and H2 are exactly the class-intersection condition for
/// their regular embeddings into S_d: an element of order k has cycle type
/// k^(d/k) there, and S_d-classes are cycle types.
inline OrderStatisticsVerdict gassmann_via_order_statistics(const FiniteGroupTable& H1, const FiniteGroupTable& H2) {
  if (H1.order() != H2.order())
    throw Error(Errc::OrderMismatch, "groups of orders " + std::to_string(H1.order()) + " and " +
                                         std::to_string(H2.order()));
  OrderStatisticsVerdict v;
  v.statistics1 = H1.order_statistics();
  v.statistics2 = H2.order_statistics();
  v.same_statistics = v.statistics1 == v.statistics2;
  if (H1.order() <= 16) v.isomorphic = are_isomorphic(H1, H2);
  return v;
}

/// Generators of the right regular image of a table group inside S_d.
inline std::vector<Permutation> regular_embedding_generators(const FiniteGroupTable& H) {
  std::vector<Permutation> gens;
  for (std::size_t g : H.generating_set()) gens.push_back(H.regular_image(g));
  if (gens.empty()) gens.push_back(Permutation::identity(H.order()));
  return gens;
}

}  // namespace isospec::groups
