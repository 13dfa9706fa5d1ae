#pragma once

// Slow reference implementations the library is checked against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "isospec/core/matrix.hpp"
#include "isospec/core/polynomial.hpp"
#include "isospec/lattices/enumeration.hpp"

namespace oracle {

using isospec::Integer;
using isospec::IntMatrix;
using isospec::IntPolynomial;
using isospec::Rational;
using isospec::RationalMatrix;
using isospec::lattices::GramMatrix;
using isospec::lattices::ShortVector;

// Laplace expansion along the first row; n >= 1.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T sum{};
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == T{}) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    T term = m[0][j] * cofactor_det(minor);
    sum = j % 2 ? T(sum - term) : T(sum + term);
  }
  return sum;
}

// Polynomial-entry determinant by cofactor expansion gives det(xI - A).
inline IntPolynomial cofactor_char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntPolynomial e(std::vector<Integer>{Integer(-a(i, j))});
      if (i == j) e = e + IntPolynomial{0, 1};
      m[i][j] = e;
    }
  return cofactor_det(m);
}

inline IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Every v with |v_i| <= R_i, where R_i bounds coordinate i on the ellipsoid
// v^T g v <= B (R_i^2 = B * (g^-1)_ii).
inline std::vector<ShortVector> box_scan(const GramMatrix& g, const Rational& bound) {
  const std::size_t n = g.dimension();
  const RationalMatrix inv = inverse(g.matrix());
  std::vector<long> radius(n);
  for (std::size_t i = 0; i < n; ++i) radius[i] = static_cast<long>(std::sqrt(Rational(bound * inv(i, i)).get_d())) + 1;
  std::vector<ShortVector> out;
  std::vector<long> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -radius[i];
  for (;;) {
    const Rational q = g.norm(v);
    if (q <= bound) out.push_back({v, q});
    std::size_t i = n;
    while (i-- > 0) {
      if (v[i] < radius[i]) {
        ++v[i];
        break;
      }
      v[i] = -radius[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  return out;
}

// Solvability of z² = a x² + b y² over Q_p by search modulo p^k.
//
// a and b are first made integral and stripped of even powers of p (both
// multiply the form by squares). A primitive solution mod p^3 (p odd) or
// 2^6 lifts by Hensel: some coordinate is a unit, and the partial derivative
// in it has valuation at most v(2) + 1.
class PadicOracle {
 public:
  int symbol(const Rational& a, const Rational& b, long p) {
    const long k = p == 2 ? 6 : 3;
    long mod = 1;
    for (long i = 0; i < k; ++i) mod *= p;
    const long ra = canonical(reduce(a, p, mod), p, mod), rb = canonical(reduce(b, p, mod), p, mod);
    auto key = std::make_tuple(p, std::min(ra, rb), std::max(ra, rb));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_[key] = search(ra, rb, p, mod);
  }

 private:
  static long reduce(const Rational& q, long p, long mod) {
    Integer n = q.get_num() * q.get_den();  // q · den²
    const Integer pp(p * p);
    while (n % pp == 0) n /= pp;
    Integer r = n % Integer(mod);
    if (r < 0) r += mod;
    return r.get_si();
  }

  // Smallest representative of a·t² over units t; the symbol only sees the class.
  long canonical(long a, long p, long mod) {
    auto [it, fresh] = classes_.try_emplace({p, a}, a);
    if (fresh)
      for (long t = 1; t < mod; ++t)
        if (t % p != 0) it->second = std::min(it->second, (a * (t * t % mod)) % mod);
    return it->second;
  }

  static int search(long a, long b, long p, long mod) {
    std::vector<char> any_square(mod, 0), unit_square(mod, 0);
    for (long z = 0; z < mod; ++z) {
      any_square[z * z % mod] = 1;
      if (z % p != 0) unit_square[z * z % mod] = 1;
    }
    for (long x = 0; x < mod; ++x)
      for (long y = 0; y < mod; ++y) {
        const long v = (a * (x * x % mod) + b * (y * y % mod)) % mod;
        const bool unit_xy = x % p != 0 || y % p != 0;
        if (unit_xy ? any_square[v] : unit_square[v]) return 1;
      }
    return -1;
  }

  std::map<std::tuple<long, long, long>, int> cache_;
  std::map<std::pair<long, long>, long> classes_;
};

// Every nonzero n/d in lowest terms with |n|, |d| <= bound.
inline std::vector<Rational> small_rationals(long bound) {
  std::vector<Rational> out;
  for (long n = -bound; n <= bound; ++n)
    for (long d = 1; d <= bound; ++d)
      if (n != 0 && gcd(Integer(n), Integer(d)) == 1) out.emplace_back(n, d);
  return out;
}

namespace fp {

// Dense polynomials over F_p, low degree first, kept trimmed.
using Poly = std::vector<long>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Divides f by the monic d in place; returns false (leaving f alone) if d ∤ f.
inline bool divide_out(Poly& f, const Poly& d, long p) {
  Poly r = f;
  Poly q(f.size() >= d.size() ? f.size() - d.size() + 1 : 0, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const long c = r[k + d.size() - 1];
    q[k] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[k + i] = ((r[k + i] - c * d[i]) % p + p) % p;
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  f = q;
  return true;
}

inline Poly monic_from_index(long idx, long degree, long p) {
  Poly f(degree + 1, 0);
  for (long i = 0; i < degree; ++i, idx /= p) f[i] = idx % p;
  f[degree] = 1;
  return f;
}

inline long index_of(const Poly& f, long p) {
  long idx = 0;
  for (std::size_t i = f.size() - 1; i-- > 0;) idx = idx * p + f[i];
  return idx;
}

// Monic irreducibles of degree 1..max_degree, by sieving out every product.
inline std::vector<Poly> irreducibles(long p, long max_degree) {
  std::vector<std::vector<Poly>> all(max_degree + 1);
  std::vector<std::vector<char>> reducible(max_degree + 1);
  long count = 1;
  for (long d = 1; d <= max_degree; ++d) {
    count *= p;
    reducible[d].assign(count, 0);
    for (long i = 0; i < count; ++i) all[d].push_back(monic_from_index(i, d, p));
  }
  for (long d1 = 1; d1 <= max_degree; ++d1)
    for (long d2 = d1; d1 + d2 <= max_degree; ++d2)
      for (const auto& a : all[d1])
        for (const auto& b : all[d2]) reducible[d1 + d2][index_of(mul(a, b, p), p)] = 1;
  std::vector<Poly> out;
  for (long d = 1; d <= max_degree; ++d)
    for (long i = 0; i < static_cast<long>(all[d].size()); ++i)
      if (!reducible[d][i]) out.push_back(all[d][i]);
  return out;
}

inline std::vector<unsigned> degrees_by_trial_division(Poly f, long p, const std::vector<Poly>& irr) {
  long inv = 1;
  while (inv * f.back() % p != 1) ++inv;
  for (auto& c : f) c = c * inv % p;
  std::vector<unsigned> out;
  for (const auto& d : irr)
    while (f.size() >= d.size() && divide_out(f, d, p)) out.push_back(static_cast<unsigned>(d.size() - 1));
  if (f.size() != 1) return {};  // not fully factored: only happens for degree > 4
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace fp

}  // namespace oracle
