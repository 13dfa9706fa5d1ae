#pragma once

#include <cstddef>
#include <vector>

#include "isospec/core/arith.hpp"
#include "isospec/groups/perm_group.hpp"

namespace isospec::groups {

/// One rational value per conjugacy class of a fixed PermGroup.
struct ClassFunction {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t cls) const { return values[cls]; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

inline ClassFunction trivial_character(const PermGroup& G) {
  return {std::vector<Rational>(G.classes().size(), Rational(1))};
}

inline ClassFunction regular_character(const PermGroup& G) {
  std::vector<Rational> v(G.classes().size(), Rational(0));
  v[G.class_of(0)] = static_cast<unsigned long>(G.order());
  return {std::move(v)};
}

/// Character of the natural action on points: number of fixed points.
inline ClassFunction natural_character(const PermGroup& G) {
  std::vector<Rational> v;
  for (const auto& c : G.classes()) v.emplace_back(static_cast<unsigned long>(c.representative.fixed_points()));
  return {std::move(v)};
}

/// Right action of G on the right cosets H\G.
///
/// Cosets are numbered by increasing minimal element index, and each coset is
/// represented by its minimal element.
class CosetAction {
 public:
  CosetAction(const PermGroup& G, const Subgroup& H) : group_(&G) {
    if (&H.parent() != &G) throw Error(Errc::NotASubgroup, "subgroup belongs to a different group");
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    coset_of_.assign(G.order(), kUnassigned);
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (coset_of_[g] != kUnassigned) continue;
      const std::size_t c = representatives_.size();
      representatives_.push_back(g);
      for (std::size_t h : H.element_indices()) {
        std::size_t hg = G.multiply(h, g);
        if (coset_of_[hg] != kUnassigned) throw std::logic_error("coset enumeration collision");
        coset_of_[hg] = c;
      }
    }
    if (representatives_.size() * H.order() != G.order()) throw std::logic_error("coset count mismatch");
  }

  std::size_t coset_count() const noexcept { return representatives_.size(); }
  std::size_t coset_of(std::size_t element) const { return coset_of_[element]; }
  const std::vector<std::size_t>& representatives() const noexcept { return representatives_; }

  /// Image of coset c under right multiplication by element g.
  std::size_t act(std::size_t coset, std::size_t g) const {
    return coset_of_[group_->multiply(representatives_[coset], g)];
  }

  /// The permutation of cosets induced by element g.
  Permutation image(std::size_t g) const {
    std::vector<Point> v(coset_count());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = static_cast<Point>(act(c, g));
    return Permutation(std::move(v));
  }

  std::size_t fixed_cosets(std::size_t g) const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < coset_count(); ++c) n += act(c, g) == c;
    return n;
  }

 private:
  const PermGroup* group_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> representatives_;
};

inline CosetAction coset_action(const PermGroup& G, const Subgroup& H) { return CosetAction(G, H); }

/// Character of G acting on C[H\G]: fixed cosets of each class representative.
inline ClassFunction permutation_character(const PermGroup& G, const Subgroup& H) {
  CosetAction action(G, H);
  std::vector<Rational> v;
  v.reserve(G.classes().size());
  for (const auto& cls : G.classes()) v.emplace_back(static_cast<unsigned long>(action.fixed_cosets(cls.members.front())));
  return {std::move(v)};
}

/// (1/|H|) * sum of chi over H: the dimension of H-invariants when chi is a character.
inline Rational invariant_dimension(const ClassFunction& chi, const Subgroup& H) {
  const PermGroup& G = H.parent();
  if (chi.values.size() != G.classes().size())
    throw Error(Errc::InvalidArgument, "class function does not match the subgroup's parent group");
  Rational sum = 0;
  for (std::size_t h : H.element_indices()) sum += chi[G.class_of(h)];
  return sum / static_cast<unsigned long>(H.order());
}

/// Number of orbits of H on the cosets of K, counted directly.
inline std::size_t orbit_count(const CosetAction& action, const Subgroup& H) {
  std::vector<bool> seen(action.coset_count(), false);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < action.coset_count(); ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t h : H.element_indices()) {
        std::size_t d = action.act(c, h);
        if (!seen[d]) {
          seen[d] = true;
          stack.push_back(d);
        }
      }
    }
  }
  return orbits;
}

}  // namespace isospec::groups
