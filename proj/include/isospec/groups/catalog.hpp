#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "isospec/groups/group_table.hpp"
#include "isospec/groups/perm_group.hpp"

// Small groups used as fixtures and CLI defaults.

namespace isospec::groups {

/// (0 1) and (0 1 ... n-1); the identity when n == 1.
inline std::vector<Permutation> symmetric_group_generators(std::size_t n) {
  if (n <= 1) return {Permutation::identity(n)};
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})};
}

namespace detail {

using F2Matrix = std::array<std::array<int, 3>, 3>;

// Nonzero vectors of F_2^3 are encoded as 1..7 (bit i = coordinate i) and
// mapped to points 0..6. Matrices act on row vectors: v -> v M.
inline Permutation gl32_permutation(const F2Matrix& m) {
  std::vector<Point> img(7);
  for (int v = 1; v <= 7; ++v) {
    int w = 0;
    for (int j = 0; j < 3; ++j) {
      int bit = 0;
      for (int i = 0; i < 3; ++i) bit ^= ((v >> i) & 1) & m[i][j];
      w |= bit << j;
    }
    img[static_cast<std::size_t>(v - 1)] = static_cast<Point>(w - 1);
  }
  return Permutation(std::move(img));
}

}  // namespace detail

/// GL(3,2) on the 7 nonzero vectors of F_2^3: a transvection and a Singer
/// cycle (companion matrix of x^3 + x + 1).
inline std::vector<Permutation> gl32_generators() {
  const detail::F2Matrix transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  const detail::F2Matrix singer{{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}};
  return {detail::gl32_permutation(transvection), detail::gl32_permutation(singer)};
}

/// Stabilizer of the vector e_0 (point 0).
inline Subgroup gl32_point_stabilizer(const PermGroup& G) { return point_stabilizer(G, 0); }

/// Stabilizer of the plane spanned by e_0 and e_1 (points 0, 1, 2).
inline Subgroup gl32_plane_stabilizer(const PermGroup& G) { return set_stabilizer(G, {0, 1, 2}); }

inline FiniteGroupTable cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroupTable(std::move(t));
}

/// Elements (a, b) encoded as a * |B| + b.
inline FiniteGroupTable direct_product_table(const FiniteGroupTable& A, const FiniteGroupTable& B) {
  const std::size_t m = B.order(), n = A.order() * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = A(x / m, y / m) * m + B(x % m, y % m);
  return FiniteGroupTable(std::move(t));
}

/// Semidirect product C_n x| C_2 with b a b^-1 = a^r, elements a^i b^j encoded
/// as i + n*j. r = n-1 gives the dihedral group, n = 8 and r = 5 the modular
/// group M16.
inline FiniteGroupTable metacyclic_table(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
      // a^i b^j a^k b^l = a^(i + k r^j) b^(j+l), using b^2 = 1.
      const std::size_t twisted = j ? (k * r) % n : k;
      t[x][y] = (i + twisted) % n + n * ((j + l) % 2);
    }
  return FiniteGroupTable(std::move(t));
}

inline FiniteGroupTable dihedral_table(std::size_t n) { return metacyclic_table(n, n - 1); }

inline FiniteGroupTable modular16_table() { return metacyclic_table(8, 5); }

/// Q8 = {±1, ±i, ±j, ±k}; element s*4 + u with sign s and unit u in (1, i, j, k).
inline FiniteGroupTable quaternion_table() {
  // unit products: value = sign*4 + unit
  constexpr int prod[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const int p = prod[x % 4][y % 4];
      const std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(p / 4)) % 2;
      t[x][y] = sign * 4 + static_cast<std::size_t>(p % 4);
    }
  return FiniteGroupTable(std::move(t));
}

/// Multiplication table of an enumerated permutation group, in its element order.
inline FiniteGroupTable table_of(const PermGroup& G) {
  std::vector<std::vector<std::size_t>> t(G.order(), std::vector<std::size_t>(G.order()));
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b) t[a][b] = G.multiply(a, b);
  return FiniteGroupTable(std::move(t));
}

}  // namespace isospec::groups
