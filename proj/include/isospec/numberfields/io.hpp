#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/numberfields/census.hpp"

namespace isospec::numberfields {

/// One line of integer coefficients, constant first; '#' starts a comment.
inline IntPolynomial parse_polynomial_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Integer> coeffs;
  bool seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (seen) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected a single coefficient line");
    seen = true;
    for (const auto& t : tokens) {
      try {
        coeffs.push_back(parse_integer(t));
      } catch (const Error&) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": invalid integer '" + t + "'");
      }
    }
  }
  if (!seen) throw Error(Errc::ParseError, "no coefficient line found");
  IntPolynomial f(std::move(coeffs));
  if (f.degree() < 1) throw Error(Errc::ParseError, "polynomial must have degree at least 1");
  return f;
}

inline IntPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_polynomial_text(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

/// CSV rows "prime,partition" in prime order; skipped primes get "skipped".
inline std::string census_csv(const SplittingCensus& c) {
  std::map<std::uint64_t, std::string> rows;
  for (const auto& [p, t] : c.entries) rows[p] = to_string(t);
  for (auto p : c.skipped) rows[p] = "skipped";
  std::string out = "prime,partition\n";
  for (const auto& [p, s] : rows) out += std::to_string(p) + "," + s + "\n";
  return out;
}

}  // namespace isospec::numberfields
