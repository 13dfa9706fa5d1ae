#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isospec/lattices/gram.hpp"

namespace isospec::lattices {

/// Gram matrix B B^T of the lattice spanned by the rows of B.
inline GramMatrix gram_of_basis(const RationalMatrix& basis) { return GramMatrix(basis * basis.transpose()); }

inline GramMatrix integer_lattice(std::size_t n) { return GramMatrix(RationalMatrix::identity(n)); }

inline GramMatrix a2_lattice() { return GramMatrix::from_rows({{2, 1}, {1, 2}}); }

/// D_n^+ = D_n ∪ (D_n + h), h = (1/2, ..., 1/2), for n divisible by 8.
/// Basis: e_i - e_{i+1} for 1 <= i <= n-2, e_{n-1} + e_n, and h; the first
/// D_n root e_0 - e_1 is dropped, being an integral combination of the rest.
inline GramMatrix dn_plus_lattice(std::size_t n) {
  if (n == 0 || n % 8 != 0) throw Error(Errc::InvalidArgument, "D_n^+ is even unimodular only for n divisible by 8");
  RationalMatrix b(n, n);
  std::size_t r = 0;
  for (std::size_t i = 1; i + 1 < n; ++i, ++r) {
    b(r, i) = 1;
    b(r, i + 1) = -1;
  }
  b(r, n - 2) = 1;
  b(r, n - 1) = 1;
  ++r;
  for (std::size_t j = 0; j < n; ++j) b(r, j) = Rational(1, 2);
  return gram_of_basis(b);
}

inline GramMatrix e8_lattice() { return dn_plus_lattice(8); }

/// Parses "Zn(3)", "Zn:3", "A2", "E8", "E8E8", "D16plus".
inline GramMatrix builtin_lattice(std::string_view name) {
  auto unknown = [&] { return Error(Errc::UnknownName, "unknown lattice '" + std::string(name) + "'"); };
  if (name == "A2") return a2_lattice();
  if (name == "E8") return e8_lattice();
  if (name == "E8E8") return direct_sum(e8_lattice(), e8_lattice());
  if (name == "D16plus") return dn_plus_lattice(16);
  if (name.starts_with("Zn")) {
    std::string_view arg = name.substr(2);
    if (arg.starts_with(':'))
      arg.remove_prefix(1);
    else if (arg.starts_with('(') && arg.ends_with(')'))
      arg = arg.substr(1, arg.size() - 2);
    else
      throw unknown();
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string_view::npos) throw unknown();
    const auto n = std::stoul(std::string(arg));
    if (n == 0 || n > 64) throw unknown();
    return integer_lattice(n);
  }
  throw unknown();
}

}  // namespace isospec::lattices
