#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isospec/lattices/theta.hpp"

namespace isospec::lattices {

/// Outcome of comparing two flat-torus spectra up to rescaling.
///
/// Two conventions are reported. `verdict` asks that the sets of spectral
/// values up to the cutoff coincide after scaling torus 2 by c (mutual
/// containment, each value with positive multiplicity). `multiplicity_verdict`
/// asks that the multisets coincide. Either way a finite cutoff only gives
/// evidence.
struct CommensurabilityVerdict {
  bool verdict = false;
  std::optional<Rational> scaling;
  bool multiplicity_verdict = false;
  std::optional<Rational> multiplicity_scaling;
  Rational cutoff;
  std::vector<Rational> candidates;
  std::string caveat;
};

inline std::string finite_cutoff_caveat(const Rational& cutoff) {
  return "finite cutoff " + to_string(cutoff) + ": agreement up to the cutoff is evidence, not proof";
}

/// Searches scalings c (ratios of small nonzero spectral values, at most
/// max_scalings of them) for which spec(torus 1) and c * spec(torus 2) agree
/// on [0, cutoff].
inline CommensurabilityVerdict spectrally_commensurable(const GramMatrix& g1, const GramMatrix& g2, const Rational& cutoff,
                                                        std::size_t max_scalings = 16,
                                                        std::uint64_t budget = kDefaultBudget) {
  if (cutoff <= 0) throw Error(Errc::InvalidArgument, "cutoff must be positive");
  CommensurabilityVerdict v;
  v.cutoff = cutoff;
  v.caveat = finite_cutoff_caveat(cutoff);
  if (g1.dimension() != g2.dimension()) return v;

  const SpectrumMultiset s1 = torus_spectrum(g1, cutoff, budget);
  const SpectrumMultiset s2 = torus_spectrum(g2, cutoff, budget);
  std::vector<Rational> small1, small2;
  for (const auto& [value, mult] : s1.entries)
    if (value != 0) small1.push_back(value);
  for (const auto& [value, mult] : s2.entries)
    if (value != 0) small2.push_back(value);

  // Candidate ratios ordered by i + j.
  const std::size_t depth = 8;
  if (small1.size() > depth) small1.resize(depth);
  if (small2.size() > depth) small2.resize(depth);
  if (small1.empty() || small2.empty()) v.candidates.push_back(1);
  for (std::size_t s = 0; !small1.empty() && !small2.empty() && s <= small1.size() + small2.size() - 2; ++s)
    for (std::size_t i = 0; i <= s && i < small1.size(); ++i) {
      const std::size_t j = s - i;
      if (j >= small2.size()) continue;
      Rational c = small1[i] / small2[j];
      if (std::find(v.candidates.begin(), v.candidates.end(), c) == v.candidates.end()) v.candidates.push_back(c);
    }
  if (v.candidates.size() > max_scalings) v.candidates.resize(max_scalings);

  for (const auto& c : v.candidates) {
    const Rational reach = cutoff / c;
    const SpectrumMultiset s2c = reach == cutoff ? s2 : torus_spectrum(g2, reach, budget);
    std::vector<std::pair<Rational, std::uint64_t>> scaled;
    for (const auto& [value, mult] : s2c.entries) {
      Rational w = value * c;
      if (w <= cutoff) scaled.emplace_back(w, mult);
    }
    bool same_values = scaled.size() == s1.entries.size();
    for (std::size_t i = 0; same_values && i < scaled.size(); ++i) same_values = scaled[i].first == s1.entries[i].first;
    const bool same_multiset = same_values && scaled == s1.entries;
    if (same_values && !v.verdict) {
      v.verdict = true;
      v.scaling = c;
    }
    if (same_multiset && !v.multiplicity_verdict) {
      v.multiplicity_verdict = true;
      v.multiplicity_scaling = c;
    }
    if (v.verdict && v.multiplicity_verdict) break;
  }
  return v;
}

}  // namespace isospec::lattices
