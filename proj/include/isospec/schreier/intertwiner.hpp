#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "isospec/core/matrix.hpp"
#include "isospec/groups/characters.hpp"
#include "isospec/schreier/coset_graph.hpp"

namespace isospec::schreier {

/// Permutation matrix of g on cosets: row c has its 1 in column c·g, so the
/// Schreier adjacency is the sum of these over the generating multiset.
inline IntMatrix coset_matrix(const groups::CosetAction& action, std::size_t g) {
  IntMatrix m(action.coset_count(), action.coset_count());
  for (std::size_t c = 0; c < action.coset_count(); ++c) m(c, action.act(c, g)) = 1;
  return m;
}

/// Basis of {Q : Q·ρ1(g) = ρ2(g)·Q for all g}, with Q of shape
/// [G:H2] x [G:H1].
///
/// The equations read Q(i, k) = Q(i·g, k·g), so the solution space is spanned
/// by the indicator matrices of the G-orbits on (H2\G) x (H1\G); these are
/// returned in order of their first cell.
inline std::vector<IntMatrix> commutant_basis(const PermGroup& G, const Subgroup& H1, const Subgroup& H2) {
  groups::CosetAction a1(G, H1), a2(G, H2);
  const std::size_t n1 = a1.coset_count(), n2 = a2.coset_count();
  std::vector<std::size_t> gens;
  for (const auto& g : G.generators()) gens.push_back(*G.index_of(g));

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit(n1 * n2, kUnset);
  std::vector<IntMatrix> basis;
  for (std::size_t start = 0; start < orbit.size(); ++start) {
    if (orbit[start] != kUnset) continue;
    const std::size_t id = basis.size();
    IntMatrix indicator(n2, n1);
    std::vector<std::size_t> stack{start};
    orbit[start] = id;
    while (!stack.empty()) {
      const std::size_t cell = stack.back();
      stack.pop_back();
      const std::size_t i = cell / n1, k = cell % n1;
      indicator(i, k) = 1;
      for (std::size_t g : gens) {
        const std::size_t next = a2.act(i, g) * n1 + a1.act(k, g);
        if (orbit[next] == kUnset) {
          orbit[next] = id;
          stack.push_back(next);
        }
      }
    }
    basis.push_back(std::move(indicator));
  }
  return basis;
}

/// An invertible Q with Q·ρ1(g) = ρ2(g)·Q for every g in G.
///
/// Tries seeded random integer combinations of the commutant basis (at most
/// 32), then walks small coefficient vectors in a fixed order. Throws
/// NoIntertwiner when every candidate is singular, which is always the case
/// when the permutation characters differ.
inline RationalMatrix equivariant_intertwiner(const PermGroup& G, const Subgroup& H1, const Subgroup& H2,
                                              std::uint64_t seed = 0) {
  if (H1.index() != H2.index())
    throw Error(Errc::NoIntertwiner, "subgroup indices differ (" + std::to_string(H1.index()) + " vs " +
                                         std::to_string(H2.index()) + ")");
  const auto basis = commutant_basis(G, H1, H2);
  const std::size_t n = H1.index();
  auto combine = [&](const std::vector<long>& coeffs) {
    IntMatrix q(n, n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (basis[b](i, j) != 0) q(i, j) += coeffs[b];
    }
    return q;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-1000, 1000);
  std::vector<long> coeffs(basis.size());
  for (int attempt = 0; attempt < 32; ++attempt) {
    for (auto& c : coeffs) c = pick(rng);
    IntMatrix q = combine(coeffs);
    if (determinant(q) != 0) return to_rational(q);
  }

  // Exhaustive fallback over coefficients in {-2..2}, capped.
  constexpr std::size_t kFallbackLimit = 4096;
  std::fill(coeffs.begin(), coeffs.end(), -2L);
  for (std::size_t tried = 0; tried < kFallbackLimit; ++tried) {
    IntMatrix q = combine(coeffs);
    if (determinant(q) != 0) return to_rational(q);
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] > 2) coeffs[i++] = -2;
    if (i == coeffs.size()) break;
  }
  throw Error(Errc::NoIntertwiner, "no invertible element found in the commutant of dimension " +
                                       std::to_string(basis.size()));
}

/// Q·A1 == A2·Q exactly.
inline bool transplant_check(const RationalMatrix& Q, const CosetGraph& g1, const CosetGraph& g2) {
  if (Q.rows() != g2.vertex_count || Q.cols() != g1.vertex_count)
    throw Error(Errc::ShapeMismatch, "intertwiner shape does not match the graphs");
  return Q * to_rational(g1.adjacency) == to_rational(g2.adjacency) * Q;
}

}  // namespace isospec::schreier
