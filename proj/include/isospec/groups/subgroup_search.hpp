#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "isospec/groups/perm_group.hpp"

namespace isospec::groups {

inline constexpr std::size_t kSubgroupSearchOrderCap = 2000;

namespace detail {

struct SubgroupRecord {
  std::vector<std::size_t> members;     // canonical conjugate, sorted
  std::vector<std::size_t> generators;  // generators of `members`
};

inline std::vector<std::size_t> close_indices(const PermGroup& G, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (std::size_t g : gens) {
      std::size_t y = G.multiply(members[head], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

/// One representative per conjugacy class of subgroups of index <= max_index.
///
/// Classes are discovered by cyclic extension: starting from the trivial
/// subgroup, each class representative H is extended to <H, g> for one g per
/// right coset Hg. Every subgroup arises from a chain of such extensions, and
/// conjugating a chain lands on a representative's chain, so extending class
/// representatives alone is complete. Each representative is the
/// lexicographically least sorted index list among its conjugates; the output
/// is ordered by (order, that list).
inline std::vector<Subgroup> enumerate_subgroups(const PermGroup& G, std::size_t max_index) {
  if (G.order() > kSubgroupSearchOrderCap)
    throw Error(Errc::CapExceeded, "subgroup enumeration is limited to groups of order <= " +
                                       std::to_string(kSubgroupSearchOrderCap));
  const std::size_t N = G.order();
  std::set<std::vector<std::size_t>> seen;  // every conjugate of every class found
  std::vector<detail::SubgroupRecord> reps;

  auto register_class = [&](std::vector<std::size_t> members, std::vector<std::size_t> gens) {
    std::vector<std::size_t> best = members;
    std::size_t best_x = 0;
    for (std::size_t x = 0; x < N; ++x) {
      std::vector<std::size_t> conj;
      conj.reserve(members.size());
      for (std::size_t a : members) conj.push_back(G.conjugate(a, x));
      std::sort(conj.begin(), conj.end());
      if (conj < best) {
        best = conj;
        best_x = x;
      }
      seen.insert(std::move(conj));
    }
    for (auto& g : gens) g = G.conjugate(g, best_x);
    reps.push_back({std::move(best), std::move(gens)});
  };

  register_class({0}, {});
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto members = reps[r].members;
    const auto gens = reps[r].generators;
    std::vector<bool> in_h(N, false);
    for (std::size_t a : members) in_h[a] = true;
    std::vector<bool> tried(N, false);
    for (std::size_t g = 0; g < N; ++g) {
      if (in_h[g] || tried[g]) continue;
      for (std::size_t h : members) tried[G.multiply(h, g)] = true;
      auto ext_gens = gens;
      ext_gens.push_back(g);
      auto ext = detail::close_indices(G, ext_gens);
      if (seen.contains(ext)) continue;
      register_class(std::move(ext), std::move(ext_gens));
    }
  }

  std::vector<const detail::SubgroupRecord*> keep;
  for (const auto& rec : reps)
    if (N / rec.members.size() <= max_index) keep.push_back(&rec);
  std::sort(keep.begin(), keep.end(), [](const auto* a, const auto* b) {
    if (a->members.size() != b->members.size()) return a->members.size() < b->members.size();
    return a->members < b->members;
  });
  std::vector<Subgroup> out;
  for (const auto* rec : keep) out.push_back(Subgroup::from_indices(G, rec->members));
  return out;
}

}  // namespace isospec::groups
