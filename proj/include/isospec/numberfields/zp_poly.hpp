#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "isospec/core/error.hpp"
#include "isospec/core/polynomial.hpp"
#include "isospec/core/primes.hpp"

namespace isospec::numberfields {

/// Dense polynomial over F_p, constant first, no trailing zeros.
/// p must be below 2^63 so that sums stay in range.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }

  static FpPoly reduce(const IntPolynomial& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    const Integer pz(static_cast<unsigned long>(p));
    for (const auto& a : f.coefficients()) {
      Integer r = a % pz;
      if (r < 0) r += pz;
      c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
  }
  static FpPoly one(std::uint64_t p) { return FpPoly(p, {1}); }
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

  std::uint64_t modulus() const noexcept { return p_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw Error(Errc::InvalidArgument, "division by zero in F_p");
    return isospec::detail::powmod(a % p_, p_ - 2, p_);
  }

  FpPoly monic() const {
    if (is_zero()) return *this;
    const std::uint64_t li = inv(leading());
    FpPoly r = *this;
    for (auto& x : r.c_) x = isospec::detail::mulmod(x, li, p_);
    return r;
  }

  FpPoly derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(isospec::detail::mulmod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(d));
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % a.p_;
    return FpPoly(a.p_, std::move(r));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + a.p_ - b[i]) % a.p_;
    return FpPoly(a.p_, std::move(r));
  }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + isospec::detail::mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return FpPoly(a.p_, std::move(r));
  }
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> r = a.c_;
    if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const std::uint64_t li = b.inv(b.leading());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::uint64_t t = isospec::detail::mulmod(r[k + db], li, p);
      q[k] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] = (r[k + j] + p - isospec::detail::mulmod(t, b.c_[j], p)) % p;
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
  }
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

  /// Monic gcd (zero if both are zero).
  friend FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
      FpPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// base^e mod m.
  friend FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    FpPoly result = one(base.p_) % m;
    FpPoly b = base % m;
    while (e) {
      if (e & 1) result = (result * b) % m;
      b = (b * b) % m;
      e >>= 1;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

/// f = prod part^multiplicity with each part monic and squarefree.
struct SquarefreePart {
  FpPoly part;
  unsigned multiplicity;
};

namespace detail {

// f(x) = g(x)^p; valid when f' = 0.
inline FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
  return FpPoly(p, std::move(c));
}

inline void squarefree_into(const FpPoly& f, unsigned scale, std::vector<SquarefreePart>& out) {
  if (f.degree() < 1) return;
  const FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_into(pth_root(f), scale * static_cast<unsigned>(f.modulus()), out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = f / c;
  for (unsigned i = 1; w.degree() > 0; ++i) {
    FpPoly y = gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_into(pth_root(c), scale * static_cast<unsigned>(f.modulus()), out);
}

}  // namespace detail

/// Squarefree decomposition of a nonzero polynomial (its leading coefficient is dropped).
inline std::vector<SquarefreePart> squarefree_decomposition(const FpPoly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no squarefree decomposition");
  std::vector<SquarefreePart> out;
  detail::squarefree_into(f.monic(), 1, out);
  return out;
}

/// Product of all irreducible factors of one degree.
struct DegreeBlock {
  FpPoly product;
  unsigned degree;
};

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<DegreeBlock> distinct_degree_factorization(const FpPoly& f) {
  std::vector<DegreeBlock> out;
  const std::uint64_t p = f.modulus();
  FpPoly rest = f.monic();
  FpPoly h = FpPoly::x(p) % rest;
  for (unsigned d = 1; 2 * static_cast<long>(d) <= rest.degree(); ++d) {
    h = powmod(h, p, rest);
    FpPoly g = gcd(h - FpPoly::x(p), rest);
    if (g.degree() > 0) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

struct FpFactorBlock {
  FpPoly product;
  unsigned degree;
  unsigned multiplicity;
};

/// Squarefree then distinct-degree factorization. f equals
/// leading * prod product^multiplicity over the blocks.
inline std::vector<FpFactorBlock> factor_blocks(const FpPoly& f) {
  std::vector<FpFactorBlock> out;
  for (const auto& sq : squarefree_decomposition(f))
    for (const auto& blk : distinct_degree_factorization(sq.part)) out.push_back({blk.product, blk.degree, sq.multiplicity});
  return out;
}

/// Degrees of the irreducible factors, with multiplicity, nonincreasing.
inline std::vector<unsigned> factor_degrees(const FpPoly& f) {
  std::vector<unsigned> degs;
  for (const auto& b : factor_blocks(f)) {
    const unsigned count = static_cast<unsigned>(b.product.degree()) / b.degree;
    for (unsigned i = 0; i < count * b.multiplicity; ++i) degs.push_back(b.degree);
  }
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

}  // namespace isospec::numberfields
