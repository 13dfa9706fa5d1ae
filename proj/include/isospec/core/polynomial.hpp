#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "isospec/core/arith.hpp"

namespace isospec {

/// Univariate polynomial over the integers, constant term first.
/// The coefficient list never carries trailing zeros; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  IntPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(d));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
    std::vector<Integer> r = a.coeffs_;
    for (auto& c : r) c *= s;
    return IntPolynomial(std::move(r));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) out += mag.get_str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

}  // namespace isospec
