#pragma once

#include <algorithm>
#include <vector>

#include "isospec/core/matrix.hpp"
#include "isospec/core/polynomial.hpp"
#include "isospec/schreier/coset_graph.hpp"

namespace isospec::schreier {

/// det(xI - A) by Berkowitz's division-free algorithm.
///
/// With A_r the leading r x r block, row R = A[r, 0..r-1], column
/// C = A[0..r-1, r] and diagonal a = A[r, r], the polynomial of A_{r+1} is a
/// lower-triangular Toeplitz matrix with first column
/// (1, -a, -RC, -RA_rC, ..., -RA_r^{r-1}C) applied to that of A_r.
inline IntPolynomial char_poly(const IntMatrix& A) {
  if (!A.is_square()) throw Error(Errc::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = A.rows();
  // Coefficients with the leading term first.
  std::vector<Integer> poly{Integer(1)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Integer> toeplitz{Integer(1), Integer(-A(r, r))};
    std::vector<Integer> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = A(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer rc = 0;
      for (std::size_t j = 0; j < r; ++j) rc += A(r, j) * col[j];
      toeplitz.push_back(-rc);
      if (k + 1 < r) {
        std::vector<Integer> next(r, Integer(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += A(i, j) * col[j];
        col = std::move(next);
      }
    }
    std::vector<Integer> next(r + 2, Integer(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

/// Same vertex count and identical characteristic polynomials.
inline bool isospectral_graphs(const CosetGraph& g1, const CosetGraph& g2) {
  return g1.vertex_count == g2.vertex_count && char_poly(g1.adjacency) == char_poly(g2.adjacency);
}

}  // namespace isospec::schreier
