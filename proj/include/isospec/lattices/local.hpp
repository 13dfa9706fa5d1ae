#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "isospec/core/arith.hpp"
#include "isospec/core/primes.hpp"

namespace isospec::lattices {

/// A place of Q: a prime p, or the real place.
struct Place {
  bool infinite = true;
  Integer prime = 0;

  static Place infinity() { return {}; }
  static Place at(Integer p) { return {false, std::move(p)}; }

  std::string to_string() const { return infinite ? "inf" : prime.get_str(); }
  friend bool operator==(const Place&, const Place&) = default;
};

namespace detail {

// Same square class as q, but integral: num * den.
inline Integer integral_representative(const Rational& q) { return q.get_num() * q.get_den(); }

inline int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

}  // namespace detail

/// Hilbert symbol (a, b)_v: +1 iff z² = a x² + b y² has a nonzero solution
/// over Q_v. Uses the valuation/unit formulas (Serre, A Course in
/// Arithmetic, III.1.2).
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw Error(Errc::InvalidArgument, "Hilbert symbol arguments must be nonzero");
  if (place.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = place.prime;
  if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  Integer u = detail::integral_representative(a), v = detail::integral_representative(b);
  const unsigned long alpha = valuation(u, p), beta = valuation(v, p);
  for (unsigned long i = 0; i < alpha; ++i) u /= p;
  for (unsigned long i = 0; i < beta; ++i) v /= p;
  if (p == 2) {
    auto mod8 = [](const Integer& z) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), 8);
      return r.get_ui();
    };
    const unsigned long u8 = mod8(u), v8 = mod8(v);
    auto eps = [](unsigned long x) { return (x % 4 == 3) ? 1UL : 0UL; };
    auto omega = [](unsigned long x) { return (x == 3 || x == 5) ? 1UL : 0UL; };
    const unsigned long e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    return (e % 2) ? -1 : 1;
  }
  int result = 1;
  Integer half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && half % 2 == 1) result = -result;
  if (beta % 2 == 1) result *= detail::legendre(u, p);
  if (alpha % 2 == 1) result *= detail::legendre(v, p);
  return result;
}

/// Product over i < j of (d_i, d_j)_v.
inline int hasse_invariant(std::span<const Rational> diagonal, const Place& place) {
  int h = 1;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (diagonal[i] == 0) throw Error(Errc::Degenerate, "zero diagonal entry");
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) h *= hilbert_symbol(diagonal[i], diagonal[j], place);
  }
  return h;
}

/// 2 and every prime dividing a numerator or denominator of the inputs.
/// Hilbert symbols of these inputs are +1 at all other primes.
inline std::vector<Integer> relevant_primes(std::span<const Rational> values) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& q : values) {
    if (q == 0) continue;
    for (const Integer* part : {&q.get_num(), &q.get_den()}) {
      if (abs(*part) == 1) continue;
      for (const auto& [p, e] : factor_integer(*part)) primes.insert(p);
    }
  }
  return {primes.begin(), primes.end()};
}

}  // namespace isospec::lattices
