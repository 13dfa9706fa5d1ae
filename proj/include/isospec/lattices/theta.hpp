#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "isospec/lattices/enumeration.hpp"

namespace isospec::lattices {

/// Number of lattice vectors of each norm up to a cutoff.
struct ThetaSeries {
  Rational cutoff;
  std::map<Rational, std::uint64_t> counts;

  std::uint64_t at(const Rational& norm) const {
    auto it = counts.find(norm);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const ThetaSeries&, const ThetaSeries&) = default;
};

/// Laplace spectrum of a flat torus R^n/L up to a cutoff, run-length encoded.
///
/// Values are dual-lattice norms q; the Laplace eigenvalue is 4π²q.
struct SpectrumMultiset {
  Rational cutoff;
  /// (value, multiplicity), strictly increasing in value.
  std::vector<std::pair<Rational, std::uint64_t>> entries;

  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (const auto& e : entries) n += e.second;
    return n;
  }
  friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;
};

inline ThetaSeries theta_coefficients(const GramMatrix& g, const Rational& cutoff, std::uint64_t budget = kDefaultBudget) {
  if (cutoff < 0) throw Error(Errc::InvalidArgument, "cutoff must be nonnegative");
  ShortVectorEnumerator e(g);
  std::map<__int128, std::uint64_t> raw;
  e.run(cutoff, budget, [&](std::span<const std::int64_t>, __int128 norm) { ++raw[norm]; });
  ThetaSeries t{cutoff, {}};
  for (const auto& [norm, count] : raw) t.counts.emplace(make_rational(from_int128(norm), e.norm_scale()), count);
  return t;
}

/// Dual-lattice norms up to the cutoff, i.e. the theta series of g^-1.
inline SpectrumMultiset torus_spectrum(const GramMatrix& g, const Rational& cutoff, std::uint64_t budget = kDefaultBudget) {
  ThetaSeries t = theta_coefficients(dual_gram(g), cutoff, budget);
  SpectrumMultiset s{cutoff, {}};
  for (const auto& [value, count] : t.counts) s.entries.emplace_back(value, count);
  return s;
}

}  // namespace isospec::lattices
