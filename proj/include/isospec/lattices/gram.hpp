#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isospec/core/matrix.hpp"

namespace isospec::lattices {

/// Leading principal minors d_1..d_n, by exact elimination.
inline std::vector<Rational> leading_minors(const RationalMatrix& m) {
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(block));
  }
  return minors;
}

/// Symmetric positive-definite rational matrix: the Gram matrix of a lattice
/// basis. Positive definiteness is checked by Sylvester's criterion.
class GramMatrix {
 public:
  explicit GramMatrix(RationalMatrix entries) : m_(std::move(entries)) {
    if (!m_.is_square() || m_.rows() == 0) throw Error(Errc::ShapeMismatch, "Gram matrix must be square and nonempty");
    if (!m_.is_symmetric()) throw Error(Errc::NotPositiveDefinite, "Gram matrix is not symmetric");
    auto minors = leading_minors(m_);
    for (std::size_t k = 0; k < minors.size(); ++k)
      if (minors[k] <= 0)
        throw Error(Errc::NotPositiveDefinite, "leading minor " + std::to_string(k + 1) + " is " + to_string(minors[k]));
    det_ = minors.back();
  }

  static GramMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    return GramMatrix(RationalMatrix::from_rows(rows));
  }

  std::size_t dimension() const noexcept { return m_.rows(); }
  const RationalMatrix& matrix() const noexcept { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Rational& determinant() const noexcept { return det_; }

  bool is_integral() const {
    for (const auto& x : m_.data())
      if (x.get_den() != 1) return false;
    return true;
  }

  /// Integral with even diagonal.
  bool is_even() const {
    if (!is_integral()) return false;
    for (std::size_t i = 0; i < dimension(); ++i)
      if (m_(i, i).get_num() % 2 != 0) return false;
    return true;
  }

  Rational norm(const std::vector<long>& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s += m_(i, j) * v[i] * v[j];
    return s;
  }

  friend GramMatrix operator*(const Rational& c, const GramMatrix& g) {
    if (c <= 0) throw Error(Errc::NotPositiveDefinite, "scaling must be positive");
    return GramMatrix(c * g.m_);
  }

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix m_;
  Rational det_;
};

/// The dual lattice's Gram matrix, g^-1.
inline GramMatrix dual_gram(const GramMatrix& g) { return GramMatrix(inverse(g.matrix())); }

/// U^T g U for an integral change of basis.
inline GramMatrix change_basis(const GramMatrix& g, const RationalMatrix& U) {
  return GramMatrix(U.transpose() * g.matrix() * U);
}

/// Orthogonal direct sum.
inline GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.dimension(), m = b.dimension();
  RationalMatrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b(i, j);
  return GramMatrix(std::move(s));
}

}  // namespace isospec::lattices
