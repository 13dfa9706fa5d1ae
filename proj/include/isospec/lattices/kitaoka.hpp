#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isospec/lattices/commensurable.hpp"
#include "isospec/lattices/similarity.hpp"

namespace isospec::lattices {

struct KitaokaScanOptions {
  std::size_t dimension = 2;
  long entry_bound = 3;
  std::size_t trials = 500;
  Rational cutoff = 50;
  std::uint64_t seed = 0;
  std::size_t max_scalings = 16;
  std::uint64_t budget = kDefaultBudget;
  /// When set, one extra pair (g, k*g) is appended after the random trials.
  std::optional<long> inject_multiple;
};

struct KitaokaPair {
  GramMatrix g1;
  GramMatrix g2;
  bool spectrally_commensurable = false;
  bool rationally_similar = false;
  std::optional<Rational> spectral_scaling;
  std::optional<Rational> similarity_scaling;
};

struct KitaokaScanResult {
  /// table[commensurable][similar]
  std::array<std::array<std::size_t, 2>, 2> table{};
  /// Spectrally commensurable but not rationally similar: would bear on the
  /// commensurability conjecture.
  std::vector<KitaokaPair> flagged;
  std::size_t budget_failures = 0;
  std::size_t pairs = 0;
  std::string caveat;
};

/// Seeded random integral positive-definite form with entries in
/// [-bound, bound] and diagonal in [1, bound]; rejection-sampled.
inline GramMatrix random_integral_form(std::size_t n, long bound, std::mt19937_64& rng) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "entry bound must be at least 1");
  std::uniform_int_distribution<long> off(-bound, bound), diag(1, bound);
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = off(rng);
    }
    try {
      return GramMatrix(std::move(m));
    } catch (const Error& e) {
      if (e.code() != Errc::NotPositiveDefinite) throw;
    }
  }
}

inline KitaokaPair classify_pair(GramMatrix g1, GramMatrix g2, const KitaokaScanOptions& opt) {
  KitaokaPair p{std::move(g1), std::move(g2), false, false, {}, {}};
  auto sc = spectrally_commensurable(p.g1, p.g2, opt.cutoff, opt.max_scalings, opt.budget);
  auto rs = rationally_similar(p.g1, p.g2);
  p.spectrally_commensurable = sc.verdict;
  p.spectral_scaling = sc.scaling;
  p.rationally_similar = rs.similar;
  p.similarity_scaling = rs.scaling;
  return p;
}

/// Contingency table of (spectrally commensurable, rationally similar) over
/// seeded random pairs of forms.
inline KitaokaScanResult kitaoka_scan(const KitaokaScanOptions& opt) {
  if (opt.dimension < 1 || opt.dimension > 4) throw Error(Errc::InvalidArgument, "dimension must be between 1 and 4");
  KitaokaScanResult result;
  result.caveat = finite_cutoff_caveat(opt.cutoff);
  std::mt19937_64 rng(opt.seed);
  auto record = [&](GramMatrix a, GramMatrix b) {
    ++result.pairs;
    try {
      KitaokaPair p = classify_pair(std::move(a), std::move(b), opt);
      ++result.table[p.spectrally_commensurable][p.rationally_similar];
      if (p.spectrally_commensurable && !p.rationally_similar) result.flagged.push_back(std::move(p));
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      ++result.budget_failures;
    }
  };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    GramMatrix a = random_integral_form(opt.dimension, opt.entry_bound, rng);
    GramMatrix b = random_integral_form(opt.dimension, opt.entry_bound, rng);
    record(std::move(a), std::move(b));
  }
  if (opt.inject_multiple) {
    GramMatrix a = random_integral_form(opt.dimension, opt.entry_bound, rng);
    GramMatrix b = Rational(*opt.inject_multiple) * a;
    record(std::move(a), std::move(b));
  }
  return result;
}

}  // namespace isospec::lattices
