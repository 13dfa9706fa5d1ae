#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "isospec/core/error.hpp"

namespace isospec {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p/q" or an integer. Throws ParseError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(Errc::ParseError, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw bad();
  return make_rational(n, d);
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::string_view t = s;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  bool ok = !t.empty();
  for (char c : t) ok = ok && c >= '0' && c <= '9';
  if (!ok) throw Error(Errc::ParseError, "not an integer: '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

inline bool is_perfect_square(const Integer& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

/// True iff q is the square of a rational number.
inline bool is_rational_square(const Rational& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

/// Exact n-th root of a rational, if one exists (sign handled for odd n).
inline std::optional<Rational> rational_root(const Rational& q, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return q;
  if (q < 0 && n % 2 == 0) return std::nullopt;
  auto root = [n](const Integer& z) -> std::optional<Integer> {
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
  };
  auto num = root(q.get_num());
  auto den = root(q.get_den());
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational pow(const Rational& base, unsigned long exp) {
  return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool fits_int64(const Integer& z) {
  static const Integer lo("-9223372036854775808"), hi("9223372036854775807");
  return z >= lo && z <= hi;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw Error(Errc::InvalidArgument, "integer does not fit in 64 bits: " + z.get_str());
  // mpz_get_si is only guaranteed for long; on LP64 that is 64 bits.
  static_assert(sizeof(long) == 8);
  return mpz_get_si(z.get_mpz_t());
}

inline Integer from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

inline __int128 to_int128(const Integer& z) {
  Integer a = abs(z);
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 126)
    throw Error(Errc::InvalidArgument, "integer does not fit in 127 bits: " + z.get_str());
  Integer hi = a >> 64;
  Integer lo = a - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  return z < 0 ? -static_cast<__int128>(u) : static_cast<__int128>(u);
}

}  // namespace isospec
