#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isospec/lattices/gram.hpp"

namespace isospec::lattices {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Fincke-Pohst enumeration of {v in Z^n : v^T g v <= bound}.
///
/// The completed-square decomposition
///   q(x) = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2
/// is computed exactly over the rationals and rounded once to long double to
/// bound the coordinate ranges, widened by a small safety margin. Acceptance
/// never uses floating point: each candidate's norm is accumulated exactly in
/// 128-bit integers against the Gram matrix scaled to integers, and compared
/// with the bound exactly.
class ShortVectorEnumerator {
 public:
  explicit ShortVectorEnumerator(const GramMatrix& g) : n_(g.dimension()) {
    scale_ = 1;
    for (const auto& x : g.matrix().data()) scale_ = lcm(scale_, x.get_den());
    gram_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Rational s = g(i, j) * scale_;
        gram_[i * n_ + j] = to_int128(s.get_num());
      }

    // Cohen, Algorithm 2.7.6 (exact).
    RationalMatrix q = g.matrix();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q(j, i) = q(i, j);
        q(i, j) = q(i, j) / q(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
    diag_.resize(n_);
    mu_.assign(n_ * n_, 0.0L);
    for (std::size_t i = 0; i < n_; ++i) {
      diag_[i] = static_cast<long double>(q(i, i).get_d());
      for (std::size_t j = i + 1; j < n_; ++j) mu_[i * n_ + j] = static_cast<long double>(q(i, j).get_d());
    }
  }

  std::size_t dimension() const noexcept { return n_; }

  /// Exact norms are scaled_norm / norm_scale().
  const Integer& norm_scale() const noexcept { return scale_; }

  /// Calls visit(coords, scaled_norm) for every lattice vector of norm <= bound
  /// (zero vector included); returns how many were visited. Throws
  /// BudgetExceeded once more than `budget` vectors qualify.
  template <class Visit>
  std::uint64_t run(const Rational& bound, std::uint64_t budget, Visit&& visit) const {
    if (bound < 0) throw Error(Errc::InvalidArgument, "bound must be nonnegative");
    Rational scaled = bound * scale_;
    Integer floor_bound;
    mpz_fdiv_q(floor_bound.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    State st;
    st.bound_scaled = to_int128(floor_bound);
    st.budget = budget;
    st.x.assign(n_, 0);
    st.h.assign((n_ + 1) * n_, 0);
    const long double b = static_cast<long double>(bound.get_d());
    descend(n_ - 1, b * (1.0L + 1e-12L) + 1e-12L, 0, st, visit);
    return st.count;
  }

 private:
  struct State {
    __int128 bound_scaled = 0;
    std::uint64_t budget = 0;
    std::uint64_t count = 0;
    std::vector<std::int64_t> x;
    // h[(level+1) * n + k] = sum_{j > level} G_kj x_j
    std::vector<__int128> h;
  };

  template <class Visit>
  void descend(std::size_t i, long double remaining, __int128 partial, State& st, Visit& visit) const {
    long double center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= mu_[i * n_ + j] * static_cast<long double>(st.x[j]);
    const long double radius = std::sqrt(std::max(remaining, 0.0L) / diag_[i]) * (1.0L + 1e-10L) + 1e-9L;
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    const __int128* hrow = &st.h[(i + 1) * n_];
    const __int128 gii = gram_[i * n_ + i];
    for (std::int64_t v = lo; v <= hi; ++v) {
      st.x[i] = v;
      const __int128 vv = v;
      const __int128 p = partial + gii * vv * vv + 2 * vv * hrow[i];
      const long double d = static_cast<long double>(v) - center;
      const long double rest = remaining - diag_[i] * d * d;
      if (i == 0) {
        if (p <= st.bound_scaled) {
          if (++st.count > st.budget)
            throw Error(Errc::BudgetExceeded, "more than " + std::to_string(st.budget) + " vectors within the bound");
          visit(std::span<const std::int64_t>(st.x), p);
        }
        continue;
      }
      if (rest < -1e-9L * (1.0L + remaining)) continue;
      __int128* next = &st.h[i * n_];
      for (std::size_t k = 0; k < i; ++k) next[k] = hrow[k] + gram_[k * n_ + i] * vv;
      descend(i - 1, rest, p, st, visit);
    }
    st.x[i] = 0;
  }

  std::size_t n_;
  Integer scale_;
  std::vector<__int128> gram_;
  std::vector<long double> diag_;
  std::vector<long double> mu_;
};

struct ShortVector {
  std::vector<long> coords;
  Rational norm;
};

/// All v with v^T g v <= bound, sorted by (norm, coordinates).
inline std::vector<ShortVector> short_vectors(const GramMatrix& g, const Rational& bound,
                                              std::uint64_t budget = kDefaultBudget) {
  ShortVectorEnumerator e(g);
  struct Raw {
    __int128 norm;
    std::vector<long> coords;
  };
  std::vector<Raw> raw;
  e.run(bound, budget, [&](std::span<const std::int64_t> x, __int128 norm) {
    raw.push_back({norm, std::vector<long>(x.begin(), x.end())});
  });
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  std::vector<ShortVector> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back({std::move(r.coords), make_rational(from_int128(r.norm), e.norm_scale())});
  return out;
}

}  // namespace isospec::lattices
