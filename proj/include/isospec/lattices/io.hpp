#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/lattices/gram.hpp"

namespace isospec::lattices {

/// Gram file: "n" on the first line, then n rows of n rationals ("p/q" or
/// integers). Blank lines and text after '#' are ignored.
inline GramMatrix parse_gram_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0, n = 0;
  bool have_header = false;
  std::vector<std::vector<Rational>> rows;
  auto fail = [&](const std::string& msg) { return Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 1 || tokens[0].find_first_not_of("0123456789") != std::string::npos)
        throw fail("expected the dimension n, found '" + tokens[0] + "'");
      n = std::stoul(tokens[0]);
      if (n == 0) throw fail("dimension must be positive");
      have_header = true;
      continue;
    }
    if (tokens.size() != n) throw fail("expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
    std::vector<Rational> row;
    for (const auto& t : tokens) {
      try {
        row.push_back(parse_rational(t));
      } catch (const Error&) {
        throw fail("invalid rational '" + t + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw fail("missing dimension line");
  if (rows.size() != n) throw fail("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  return GramMatrix::from_rows(rows);
}

inline GramMatrix read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_gram_text(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace isospec::lattices
