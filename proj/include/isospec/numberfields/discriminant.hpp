#pragma once

#include <utility>
#include <vector>

#include "isospec/core/error.hpp"
#include "isospec/core/polynomial.hpp"

namespace isospec::numberfields {

namespace detail {

inline IntPolynomial divide_exact(const IntPolynomial& a, const Integer& d) {
  std::vector<Integer> c = a.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a mod b
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const long db = b.degree();
  const Integer& lb = b.leading();
  long e = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    a = lb * a - IntPolynomial::monomial(a.leading(), static_cast<std::size_t>(shift)) * b;
    --e;
  }
  return pow(lb, static_cast<unsigned long>(e)) * a;
}

}  // namespace detail

/// Res(a, b) by the subresultant algorithm.
inline Integer resultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * pow(b.leading(), static_cast<unsigned long>(a.degree()));

  const Integer ca = a.content(), cb = b.content();
  a = detail::divide_exact(a, ca);
  b = detail::divide_exact(b, cb);
  const Integer t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
  Integer g = 1, h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    IntPolynomial r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = detail::divide_exact(r, g * pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    // h = g^delta / h^(delta - 1)
    if (delta != 0) {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  // h = lc(b)^deg a / h^(deg a - 1)
  const long da = a.degree();
  Integer num = pow(b.leading(), static_cast<unsigned long>(da));
  Integer den = pow(h, static_cast<unsigned long>(da - 1));
  Integer last;
  mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return sign * t * last;
}

/// disc f = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Integer poly_discriminant(const IntPolynomial& f) {
  const long n = f.degree();
  if (n < 1) throw Error(Errc::InvalidArgument, "discriminant needs degree at least 1");
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  if (d == 0) throw Error(Errc::ZeroDiscriminant, "polynomial " + f.to_string() + " is not squarefree");
  return d;
}

}  // namespace isospec::numberfields
