#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "isospec/core/matrix.hpp"
#include "isospec/groups/characters.hpp"
#include "isospec/groups/perm_group.hpp"

namespace isospec::schreier {

using groups::PermGroup;
using groups::Subgroup;

/// Schreier graph on the right cosets H\G.
///
/// adjacency(c, c') counts the s in the generating multiset with c·s = c'.
/// A coset fixed by s gets a loop contributing 1 to the diagonal per
/// occurrence of s; other loop conventions only rescale the diagonal.
struct CosetGraph {
  std::size_t vertex_count = 0;
  IntMatrix adjacency;
  /// Element indices (into the group) of the generating multiset, as given.
  std::vector<std::size_t> generator_labels;

  std::size_t valency() const noexcept { return generator_labels.size(); }
};

/// True iff the multiset of inverses equals the multiset itself.
inline bool is_inverse_closed(const PermGroup& G, std::span<const std::size_t> multiset) {
  std::vector<std::size_t> a(multiset.begin(), multiset.end()), b;
  for (std::size_t s : multiset) b.push_back(G.inverse(s));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline CosetGraph schreier_graph(const PermGroup& G, const Subgroup& H, std::span<const std::size_t> multiset) {
  for (std::size_t s : multiset)
    if (s >= G.order()) throw Error(Errc::InvalidArgument, "generator index out of range");
  if (!is_inverse_closed(G, multiset)) throw Error(Errc::NotSymmetric, "generating multiset is not closed under inverses");
  groups::CosetAction action(G, H);
  CosetGraph graph;
  graph.vertex_count = action.coset_count();
  graph.adjacency = IntMatrix(graph.vertex_count, graph.vertex_count);
  graph.generator_labels.assign(multiset.begin(), multiset.end());
  for (std::size_t c = 0; c < graph.vertex_count; ++c)
    for (std::size_t s : multiset) graph.adjacency(c, action.act(c, s)) += 1;
  return graph;
}

/// The group's generators followed by their inverses.
inline std::vector<std::size_t> default_generator_multiset(const PermGroup& G) {
  std::vector<std::size_t> out;
  for (const auto& g : G.generators()) out.push_back(*G.index_of(g));
  const std::size_t k = out.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(G.inverse(out[i]));
  return out;
}

/// `count` seeded random non-identity elements, each followed by its inverse.
inline std::vector<std::size_t> random_symmetric_multiset(const PermGroup& G, std::size_t count, std::uint64_t seed) {
  if (G.order() < 2) throw Error(Errc::InvalidArgument, "trivial group has no non-identity elements");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, G.order() - 1);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t s = pick(rng);
    out.push_back(s);
    out.push_back(G.inverse(s));
  }
  return out;
}

/// Plain-text edge-multiplicity matrix, one row per line.
inline std::string to_text(const CosetGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.vertex_count; ++i) {
    for (std::size_t j = 0; j < g.vertex_count; ++j) {
      if (j) out += ' ';
      out += g.adjacency(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace isospec::schreier
