#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "isospec/groups/group_table.hpp"
#include "isospec/groups/permutation.hpp"

// Text formats:
//   group file   "degree n" then one generator per line in cycle notation,
//                e.g. "(0 1)(2 3 4)"; "()" is the identity.
//   table file   "order d" then d rows of d element indices.
// Blank lines and text after '#' are ignored.

namespace isospec::groups {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

inline bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Error parse_error(std::size_t line_no, const std::string& msg) {
  return Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Parses one permutation in cycle notation.
inline Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line_no = 1) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto token_at = [&](std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '(' &&
           text[end] != ')')
      ++end;
    return std::string(text.substr(pos, std::max<std::size_t>(end - pos, 1)));
  };
  bool any = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw detail::parse_error(line_no, "expected '(' but found '" + token_at(i) + "'");
    any = true;
    ++i;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw detail::parse_error(line_no, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw detail::parse_error(line_no, "invalid token '" + token_at(start) + "' in cycle");
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ')' && text[i] != ',')
        throw detail::parse_error(line_no, "invalid token '" + token_at(start) + "' in cycle");
      const std::string digits(text.substr(start, i - start));
      unsigned long v = std::stoul(digits);
      if (v >= degree)
        throw detail::parse_error(line_no, "point '" + digits + "' out of range for degree " + std::to_string(degree));
      cycle.push_back(static_cast<Point>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (!any) throw detail::parse_error(line_no, "empty permutation (use '()' for the identity)");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw detail::parse_error(line_no, e.what());
  }
}

struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

inline GroupFile parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  GroupFile out;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string kw, n, extra;
      hs >> kw >> n;
      if (kw != "degree") throw detail::parse_error(line_no, "expected 'degree n' but found '" + kw + "'");
      if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || (hs >> extra))
        throw detail::parse_error(line_no, "invalid degree '" + n + "'");
      out.degree = std::stoul(n);
      if (out.degree == 0) throw detail::parse_error(line_no, "degree must be positive");
      have_header = true;
      continue;
    }
    out.generators.push_back(parse_cycles(line, out.degree, line_no));
  }
  if (!have_header) throw detail::parse_error(line_no, "missing 'degree n' header");
  return out;
}

inline GroupFile read_group_file(const std::string& path) {
  try {
    return parse_group_text(detail::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()));
  }
}

inline FiniteGroupTable parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0, d = 0;
  bool have_header = false;
  std::vector<std::vector<std::size_t>> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string kw, n;
      ls >> kw >> n;
      if (kw != "order" || n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
        throw detail::parse_error(line_no, "expected 'order d'");
      d = std::stoul(n);
      have_header = true;
      continue;
    }
    std::vector<std::size_t> row;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw detail::parse_error(line_no, "invalid table entry '" + tok + "'");
      row.push_back(std::stoul(tok));
    }
    if (row.size() != d)
      throw detail::parse_error(line_no, "expected " + std::to_string(d) + " entries, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw detail::parse_error(line_no, "missing 'order d' header");
  if (rows.size() != d) throw detail::parse_error(line_no, "expected " + std::to_string(d) + " rows");
  return FiniteGroupTable(std::move(rows));
}

inline FiniteGroupTable read_table_file(const std::string& path) {
  try {
    return parse_table_text(detail::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()));
  }
}

}  // namespace isospec::groups
