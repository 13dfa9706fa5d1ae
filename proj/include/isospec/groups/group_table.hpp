#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isospec/groups/permutation.hpp"

namespace isospec::groups {

/// A finite group given by its full multiplication table on {0..d-1}.
class FiniteGroupTable {
 public:
  /// Validates the group axioms: closure, identity, inverses (Latin square),
  /// and associativity (exhaustive for d <= 64, 20000 seeded triples beyond).
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t d = table_.size();
    if (d == 0) throw Error(Errc::InvalidArgument, "empty multiplication table");
    for (const auto& row : table_) {
      if (row.size() != d) throw Error(Errc::InvalidArgument, "multiplication table is not square");
      std::vector<bool> seen(d, false);
      for (std::size_t v : row) {
        if (v >= d) throw Error(Errc::InvalidArgument, "table entry out of range");
        if (seen[v]) throw Error(Errc::InvalidArgument, "table row is not a permutation (no inverses)");
        seen[v] = true;
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<bool> seen(d, false);
      for (std::size_t i = 0; i < d; ++i) {
        if (seen[table_[i][j]]) throw Error(Errc::InvalidArgument, "table column is not a permutation");
        seen[table_[i][j]] = true;
      }
    }
    identity_ = d;
    for (std::size_t e = 0; e < d && identity_ == d; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < d && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) identity_ = e;
    }
    if (identity_ == d) throw Error(Errc::InvalidArgument, "table has no identity element");
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      return table_[table_[a][b]][c] == table_[a][table_[b][c]];
    };
    if (d <= 64) {
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            if (!assoc(a, b, c)) throw Error(Errc::InvalidArgument, "table is not associative");
    } else {
      std::mt19937_64 rng(0);
      std::uniform_int_distribution<std::size_t> pick(0, d - 1);
      for (int t = 0; t < 20000; ++t)
        if (!assoc(pick(rng), pick(rng), pick(rng))) throw Error(Errc::InvalidArgument, "table is not associative");
    }
    orders_.resize(d);
    for (std::size_t x = 0; x < d; ++x) {
      std::size_t k = 1;
      for (std::size_t y = x; y != identity_; y = table_[y][x]) ++k;
      orders_[x] = k;
    }
  }

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  /// element_orders()[i] is the least k >= 1 with i^k = identity.
  const std::vector<std::size_t>& element_orders() const noexcept { return orders_; }

  /// element order -> number of elements of that order.
  std::map<std::size_t, std::size_t> order_statistics() const {
    std::map<std::size_t, std::size_t> stats;
    for (auto o : orders_) ++stats[o];
    return stats;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a + 1; b < order(); ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

  /// Greedy generating set: scan elements in index order, keeping each one
  /// not already in the subgroup generated so far.
  std::vector<std::size_t> generating_set() const {
    std::vector<std::size_t> gens;
    std::vector<bool> in(order(), false);
    in[identity_] = true;
    std::vector<std::size_t> members{identity_};
    for (std::size_t x = 0; x < order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      // Re-close from scratch with the enlarged generator list.
      std::fill(in.begin(), in.end(), false);
      members.assign(1, identity_);
      in[identity_] = true;
      for (std::size_t head = 0; head < members.size(); ++head)
        for (std::size_t g : gens) {
          std::size_t y = table_[members[head]][g];
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
          }
        }
    }
    return gens;
  }

  /// Right regular representation in S_d: g acts by x -> x*g.
  Permutation regular_image(std::size_t g) const {
    std::vector<Point> v(order());
    for (std::size_t x = 0; x < order(); ++x) v[x] = static_cast<Point>(table_[x][g]);
    return Permutation(std::move(v));
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> orders_;
};

/// Exhaustive isomorphism search: images of a generating set of `a` are
/// tried over all order-preserving choices in `b`, and every candidate map is
/// checked as a bijective homomorphism on all pairs.
inline bool are_isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t d = a.order();
  if (b.order() != d) return false;
  const auto gens = a.generating_set();
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < d; ++y)
      if (b.element_orders()[y] == a.element_orders()[gens[i]]) candidates[i].push_back(y);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> choice(gens.size(), 0);

  auto try_map = [&]() {
    std::vector<std::size_t> map(d, kUnset);
    map[a.identity()] = b.identity();
    std::vector<std::size_t> queue{a.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t y = a(x, gens[i]);
        const std::size_t img = b(map[x], candidates[i][choice[i]]);
        if (map[y] == kUnset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    std::vector<bool> hit(d, false);
    for (std::size_t x = 0; x < d; ++x) {
      if (map[x] == kUnset || hit[map[x]]) return false;
      hit[map[x]] = true;
    }
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        if (map[a(x, y)] != b(map[x], map[y])) return false;
    return true;
  };

  for (const auto& c : candidates)
    if (c.empty()) return false;
  while (true) {
    if (try_map()) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == choice.size()) return false;
  }
}

}  // namespace isospec::groups
