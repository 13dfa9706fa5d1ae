#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isospec/lattices/gram.hpp"
#include "isospec/lattices/local.hpp"
#include "isospec/lattices/theta.hpp"

namespace isospec::lattices {

struct Diagonalization {
  std::vector<Rational> diagonal;
  /// P with P^T M P = diag(diagonal).
  RationalMatrix transform;
};

/// Symmetric Gaussian elimination with exact pivoting. A zero pivot is
/// replaced by a later nonzero diagonal entry if there is one, otherwise by
/// e_k + e_j for some j with M(k, j) != 0 (new pivot 2 M(k, j)).
inline Diagonalization congruence_diagonalization(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(Errc::InvalidArgument, "form matrix must be symmetric");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix p = RationalMatrix::identity(n);
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t) std::swap(a(i, t), a(j, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(a(t, i), a(t, j));
    for (std::size_t t = 0; t < n; ++t) std::swap(p(t, i), p(t, j));
  };
  // basis vector i += f * basis vector j
  auto add_index = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t t = 0; t < n; ++t) a(i, t) += f * a(j, t);
    for (std::size_t t = 0; t < n; ++t) a(t, i) += f * a(t, j);
    for (std::size_t t = 0; t < n; ++t) p(t, i) += f * p(t, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw Error(Errc::Degenerate, "form is degenerate");
        add_index(k, j, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = -a(i, k) / a(k, k);
      add_index(i, k, f);
    }
  }
  Diagonalization d;
  for (std::size_t i = 0; i < n; ++i) d.diagonal.push_back(a(i, i));
  d.transform = std::move(p);
  return d;
}

inline std::vector<Rational> diagonalize_form(const RationalMatrix& m) { return congruence_diagonalization(m).diagonal; }
inline std::vector<Rational> diagonalize_form(const GramMatrix& g) { return diagonalize_form(g.matrix()); }

struct LocalComparison {
  Place place;
  int hasse1 = 1;
  int hasse2 = 1;
};

/// Comparison of two nondegenerate diagonal forms by the complete set of
/// rational invariants: dimension, signature, discriminant square class and
/// Hasse invariants at every place where they can differ.
struct EquivalenceReport {
  bool equivalent = false;
  bool same_dimension = false;
  bool same_signature = false;
  bool same_discriminant_class = false;
  bool same_hasse = false;
  Rational discriminant1;
  Rational discriminant2;
  std::vector<LocalComparison> local;
};

inline EquivalenceReport compare_diagonal_forms(const std::vector<Rational>& d1, const std::vector<Rational>& d2) {
  EquivalenceReport r;
  r.same_dimension = d1.size() == d2.size();
  r.discriminant1 = 1;
  r.discriminant2 = 1;
  for (const auto& x : d1) r.discriminant1 *= x;
  for (const auto& x : d2) r.discriminant2 *= x;
  auto negatives = [](const std::vector<Rational>& d) { return std::count_if(d.begin(), d.end(), [](const Rational& x) { return x < 0; }); };
  r.same_signature = r.same_dimension && negatives(d1) == negatives(d2);
  if (r.discriminant1 == 0 || r.discriminant2 == 0) throw Error(Errc::Degenerate, "form is degenerate");
  r.same_discriminant_class = is_rational_square(Rational(r.discriminant1 / r.discriminant2));

  std::vector<Rational> all = d1;
  all.insert(all.end(), d2.begin(), d2.end());
  std::vector<Place> places{Place::infinity()};
  for (auto& p : relevant_primes(all)) places.push_back(Place::at(p));
  r.same_hasse = true;
  for (const auto& place : places) {
    LocalComparison lc{place, hasse_invariant(d1, place), hasse_invariant(d2, place)};
    r.same_hasse = r.same_hasse && lc.hasse1 == lc.hasse2;
    r.local.push_back(std::move(lc));
  }
  r.equivalent = r.same_dimension && r.same_signature && r.same_discriminant_class && r.same_hasse;
  return r;
}

struct SimilarityVerdict {
  bool similar = false;
  /// c with f1 rationally equivalent to c * f2.
  std::optional<Rational> scaling;
  std::vector<Rational> candidates;
  /// Invariants for the reported scaling, or for c = 1 when none passed.
  EquivalenceReport local_data;
};

struct SimilarityOptions {
  std::size_t norms_per_form = 4;
  std::size_t max_candidates = 64;
  std::uint64_t enumeration_budget = 200'000;
};

namespace detail {

/// Up to k smallest distinct nonzero norms, found by doubling the search
/// bound while the enumeration stays under budget.
inline std::vector<Rational> small_norms(const GramMatrix& g, std::size_t k, std::uint64_t budget) {
  Rational bound = g(0, 0);
  for (std::size_t i = 1; i < g.dimension(); ++i) bound = std::min(bound, g(i, i));
  std::vector<Rational> values;
  for (int round = 0; round < 16; ++round) {
    try {
      ThetaSeries t = theta_coefficients(g, bound, budget);
      values.clear();
      for (const auto& [norm, count] : t.counts)
        if (norm != 0) values.push_back(norm);
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      break;
    }
    if (values.size() >= k) break;
    bound *= 2;
  }
  if (values.size() > k) values.resize(k);
  return values;
}

inline void push_candidate(std::vector<Rational>& out, const Rational& c, std::size_t cap) {
  if (c <= 0 || out.size() >= cap) return;
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

/// Ratios a_i / b_j ordered by i + j, then i.
inline void push_ratios(std::vector<Rational>& out, const std::vector<Rational>& a, const std::vector<Rational>& b,
                        bool invert, std::size_t cap) {
  if (a.empty() || b.empty()) return;
  for (std::size_t s = 0; s <= a.size() + b.size() - 2; ++s)
    for (std::size_t i = 0; i <= s && i < a.size(); ++i) {
      const std::size_t j = s - i;
      if (j >= b.size()) continue;
      Rational r = a[i] / b[j];
      push_candidate(out, invert ? Rational(1 / r) : r, cap);
    }
}

}  // namespace detail

/// Decides whether f1 is rationally equivalent to c * f2 for some c in a
/// finite candidate set: ratios of small represented norms of the forms, the
/// same for the dual forms (inverted, since f1 ~ c f2 iff f1* ~ f2*/c), and a
/// rational n-th root of det(g1)/det(g2) when one exists. A miss reports the
/// candidates that were tried.
inline SimilarityVerdict rationally_similar(const GramMatrix& g1, const GramMatrix& g2, const SimilarityOptions& opt = {}) {
  SimilarityVerdict v;
  if (g1.dimension() != g2.dimension()) return v;
  const std::size_t n = g1.dimension();
  const std::size_t k = opt.norms_per_form;
  const std::size_t cap = opt.max_candidates;
  detail::push_ratios(v.candidates, detail::small_norms(g1, k, opt.enumeration_budget),
                      detail::small_norms(g2, k, opt.enumeration_budget), false, cap);
  if (auto root = rational_root(Rational(g1.determinant() / g2.determinant()), n)) detail::push_candidate(v.candidates, *root, cap);
  GramMatrix d1 = dual_gram(g1), d2 = dual_gram(g2);
  detail::push_ratios(v.candidates, detail::small_norms(d1, k, opt.enumeration_budget),
                      detail::small_norms(d2, k, opt.enumeration_budget), true, cap);

  const auto diag1 = diagonalize_form(g1);
  const auto diag2 = diagonalize_form(g2);
  std::vector<Rational> classes_tried;
  for (const auto& c : v.candidates) {
    // Scalings in the same square class give the same answer.
    bool repeat = false;
    for (const auto& t : classes_tried) repeat = repeat || is_rational_square(Rational(c / t));
    if (repeat) continue;
    classes_tried.push_back(c);
    std::vector<Rational> scaled = diag2;
    for (auto& x : scaled) x *= c;
    EquivalenceReport r = compare_diagonal_forms(diag1, scaled);
    if (r.equivalent) {
      v.similar = true;
      v.scaling = c;
      v.local_data = std::move(r);
      return v;
    }
  }
  v.local_data = compare_diagonal_forms(diag1, diag2);
  return v;
}

}  // namespace isospec::lattices
