#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "isospec/numberfields/discriminant.hpp"
#include "isospec/numberfields/zp_poly.hpp"

namespace isospec::numberfields {

/// Nonincreasing degrees of the factors of f mod p.
using SplittingType = std::vector<unsigned>;

inline std::string to_string(const SplittingType& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "+" : "") + std::to_string(t[i]);
  return s;
}

namespace detail {

inline std::uint64_t checked_prime(const Integer& p) {
  if (p < 2 || !p.fits_ulong_p() || p.get_ui() >= (std::uint64_t{1} << 62) || !is_prime(p))
    throw Error(Errc::NotPrime, isospec::to_string(p) + " is not a supported prime");
  return p.get_ui();
}

inline bool bad_prime(const Integer& disc, const IntPolynomial& f, std::uint64_t p) {
  return mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0 || mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0;
}

inline SplittingType degrees_at_good_prime(const IntPolynomial& f, std::uint64_t p) {
  return factor_degrees(FpPoly::reduce(f, p));
}

}  // namespace detail

/// Factorization type of f mod p at a prime not dividing disc(f) or the
/// leading coefficient.
inline SplittingType factor_degrees_mod_p(const IntPolynomial& f, const Integer& p) {
  const std::uint64_t q = detail::checked_prime(p);
  if (f.degree() < 1) throw Error(Errc::InvalidArgument, "polynomial must have degree at least 1");
  if (detail::bad_prime(poly_discriminant(f), f, q))
    throw Error(Errc::RamifiedPrime, std::to_string(q) + " divides the discriminant or leading coefficient of " + f.to_string());
  return detail::degrees_at_good_prime(f, q);
}

struct SplittingCensus {
  std::uint64_t bound = 0;
  unsigned degree = 0;
  Integer discriminant;
  std::map<std::uint64_t, SplittingType> entries;
  /// Primes up to the bound dividing disc(f) or lc(f).
  std::vector<std::uint64_t> skipped;
};

inline std::string census_caveat(std::uint64_t bound) {
  return "finite census bound " + std::to_string(bound) + ": agreement is evidence of arithmetic equivalence, not proof";
}

inline SplittingCensus splitting_census(const IntPolynomial& f, std::uint64_t bound) {
  if (bound < 2) throw Error(Errc::InvalidArgument, "census bound must be at least 2");
  if (f.degree() < 1) throw Error(Errc::InvalidArgument, "polynomial must have degree at least 1");
  SplittingCensus c;
  c.bound = bound;
  c.degree = static_cast<unsigned>(f.degree());
  c.discriminant = poly_discriminant(f);
  for (std::uint64_t p : primes_up_to(bound)) {
    if (detail::bad_prime(c.discriminant, f, p))
      c.skipped.push_back(p);
    else
      c.entries.emplace(p, detail::degrees_at_good_prime(f, p));
  }
  return c;
}

struct CensusComparison {
  bool equal = false;
  std::optional<std::uint64_t> first_disagreement;
  std::size_t compared_count = 0;
  std::uint64_t bound = 0;
  std::string caveat;
};

/// Compares splitting types at primes where both censuses have entries.
inline CensusComparison compare_censuses(const SplittingCensus& a, const SplittingCensus& b) {
  CensusComparison r;
  r.bound = std::min(a.bound, b.bound);
  r.caveat = census_caveat(r.bound);
  if (a.degree != b.degree) return r;
  r.equal = true;
  for (const auto& [p, type] : a.entries) {
    if (p > r.bound) break;
    auto it = b.entries.find(p);
    if (it == b.entries.end()) continue;
    ++r.compared_count;
    if (it->second != type) {
      r.equal = false;
      r.first_disagreement = p;
      break;
    }
  }
  return r;
}

inline CensusComparison census_equal(const IntPolynomial& f1, const IntPolynomial& f2, std::uint64_t bound) {
  if (f1.degree() != f2.degree()) {
    CensusComparison r;
    r.bound = bound;
    r.caveat = census_caveat(bound);
    return r;
  }
  return compare_censuses(splitting_census(f1, bound), splitting_census(f2, bound));
}

/// a_1..a_N of the Euler product over unramified p <= N of
/// prod_i (1 - p^(-f_i s))^(-1); skipped primes contribute the factor 1.
/// Element 0 of the result is a_1.
inline std::vector<std::uint64_t> dirichlet_coefficients(const SplittingCensus& census, std::uint64_t n_max) {
  if (n_max > census.bound)
    throw Error(Errc::InsufficientCensus, "census bound " + std::to_string(census.bound) + " does not cover N = " + std::to_string(n_max));
  std::vector<std::uint64_t> a(n_max + 1, 0);
  if (n_max == 0) return {};
  a[1] = 1;
  std::vector<std::uint64_t> spf(n_max + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i)
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= n_max; j += i)
        if (spf[j] == 0) spf[j] = i;

  // Local coefficient at p^e: number of ways to write e = sum f_i m_i.
  std::map<std::uint64_t, std::vector<std::uint64_t>> local;
  auto local_coeff = [&](std::uint64_t p, unsigned e) -> std::uint64_t {
    auto it = local.find(p);
    if (it == local.end()) {
      unsigned emax = 0;
      for (std::uint64_t q = p; q <= n_max; q *= p) ++emax;
      std::vector<std::uint64_t> ways(emax + 1, 0);
      ways[0] = 1;
      auto entry = census.entries.find(p);
      if (entry != census.entries.end())
        for (unsigned f : entry->second)
          for (unsigned k = f; k <= emax; ++k) ways[k] += ways[k - f];
      it = local.emplace(p, std::move(ways)).first;
    }
    return it->second[e];
  };

  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    a[n] = a[m] * local_coeff(p, e);
  }
  return std::vector<std::uint64_t>(a.begin() + 1, a.end());
}

}  // namespace isospec::numberfields
