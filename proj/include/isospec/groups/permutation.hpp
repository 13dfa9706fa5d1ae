#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "isospec/core/error.hpp"

namespace isospec::groups {

using Point = std::uint32_t;

/// A bijection of {0..n-1}, stored as its image list.
///
/// Permutations act on the right: `p * q` means "apply p, then q", so
/// `(p * q)(i) == q(p(i))`. Right cosets Hg are acted on by right
/// multiplication, which keeps the coset action a homomorphism.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw Error(Errc::InvalidArgument, "image list is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> v(degree);
    std::iota(v.begin(), v.end(), Point{0});
    return Permutation(std::move(v), Unchecked{});
  }

  /// Builds a permutation from disjoint or overlapping cycles; cycles are
  /// composed left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), Point{0});
      std::vector<bool> seen(degree, false);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (cycle[k] >= degree) throw Error(Errc::InvalidArgument, "cycle point out of range");
        if (seen[cycle[k]]) throw Error(Errc::InvalidArgument, "repeated point inside a cycle");
        seen[cycle[k]] = true;
        img[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      result = result * Permutation(std::move(img), Unchecked{});
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error(Errc::InvalidArgument, "degree mismatch in product");
    std::vector<Point> v(a.degree());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.images_[a.images_[i]];
    return Permutation(std::move(v), Unchecked{});
  }

  Permutation inverse() const {
    std::vector<Point> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(v), Unchecked{});
  }

  /// Cycle lengths including fixed points, nonincreasing; sums to degree().
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (auto len : cycle_type()) o = std::lcm(o, len);
    return o;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
    return n;
  }

  /// Cycle notation with fixed points omitted, e.g. "(0 1)(2 3 4)"; "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += "(";
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += " ";
        out += std::to_string(j);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace isospec::groups
