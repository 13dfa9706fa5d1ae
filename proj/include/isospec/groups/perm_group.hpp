#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "isospec/groups/permutation.hpp"

namespace isospec::groups {

/// Full enumeration is refused beyond this many elements.
inline constexpr std::size_t kDefaultElementCap = 200'000;

/// Groups up to this order also get a dense multiplication table.
inline constexpr std::size_t kTableOrderLimit = 2048;

struct ConjugacyClass {
  Permutation representative;
  /// Indices into PermGroup::elements(), ascending; members.front() is the
  /// representative.
  std::vector<std::size_t> members;
};

/// A fully enumerated finite permutation group.
///
/// Element 0 is the identity; the remaining elements appear in breadth-first
/// order from the identity, multiplying by the generators in the order given.
/// Immutable after construction.
class PermGroup {
 public:
  static PermGroup close(std::vector<Permutation> generators, std::size_t cap = kDefaultElementCap) {
    if (generators.empty()) throw Error(Errc::InvalidArgument, "at least one generator is required");
    if (cap < 1) throw Error(Errc::InvalidArgument, "cap must be positive");
    const std::size_t n = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != n) throw Error(Errc::InvalidArgument, "generators have different degrees");

    PermGroup G;
    G.degree_ = n;
    G.generators_ = std::move(generators);
    G.add_element(Permutation::identity(n));
    for (std::size_t head = 0; head < G.elements_.size(); ++head) {
      for (const auto& s : G.generators_) {
        Permutation next = G.elements_[head] * s;
        if (G.index_.contains(next)) continue;
        if (G.elements_.size() >= cap)
          throw Error(Errc::CapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
        G.add_element(std::move(next));
      }
    }
    G.finish();
    return G;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return index_.contains(p); }

  /// Index of element(a) * element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * order() + b];
    return index_.at(elements_[a] * elements_[b]);
  }

  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Index of element(x)^-1 * element(a) * element(x).
  std::size_t conjugate(std::size_t a, std::size_t x) const { return multiply(multiply(inverse_[x], a), x); }

  std::size_t element_order(std::size_t a) const { return elements_[a].order(); }

 private:
  PermGroup() = default;

  void add_element(Permutation p) {
    index_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
  }

  void finish() {
    const std::size_t N = elements_.size();
    if (N <= kTableOrderLimit) {
      table_.resize(N * N);
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          table_[a * N + b] = static_cast<std::uint32_t>(index_.at(elements_[a] * elements_[b]));
    }
    inverse_.resize(N);
    for (std::size_t a = 0; a < N; ++a) inverse_[a] = index_.at(elements_[a].inverse());

    // Conjugation by the generators generates conjugation by all of G, so
    // each class is the closure of one element under those moves.
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    class_of_.assign(N, kUnassigned);
    std::vector<std::size_t> gen_index;
    for (const auto& s : generators_) gen_index.push_back(index_.at(s));
    for (std::size_t x = 0; x < N; ++x) {
      if (class_of_[x] != kUnassigned) continue;
      const std::size_t cid = classes_.size();
      ConjugacyClass cls{elements_[x], {x}};
      class_of_[x] = cid;
      for (std::size_t head = 0; head < cls.members.size(); ++head) {
        for (std::size_t g : gen_index) {
          std::size_t y = conjugate(cls.members[head], g);
          if (class_of_[y] != kUnassigned) continue;
          class_of_[y] = cid;
          cls.members.push_back(y);
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes_.push_back(std::move(cls));
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Closure of a generator list, with conjugacy classes.
inline PermGroup close_generators(std::vector<Permutation> generators, std::size_t cap = kDefaultElementCap) {
  return PermGroup::close(std::move(generators), cap);
}

/// A subgroup of a PermGroup, held as sorted element indices.
/// The parent group must outlive the subgroup.
class Subgroup {
 public:
  /// Validates closure; throws NotASubgroup otherwise.
  static Subgroup from_indices(const PermGroup& parent, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    Subgroup H(parent, std::move(indices));
    if (H.indices_.empty() || H.indices_.front() != 0)
      throw Error(Errc::NotASubgroup, "subset does not contain the identity");
    for (std::size_t a : H.indices_) {
      if (a >= parent.order()) throw Error(Errc::NotASubgroup, "element index out of range");
      if (!H.contains_index(parent.inverse(a))) throw Error(Errc::NotASubgroup, "subset is not closed under inverses");
    }
    for (std::size_t a : H.indices_)
      for (std::size_t b : H.indices_)
        if (!H.contains_index(parent.multiply(a, b)))
          throw Error(Errc::NotASubgroup, "subset is not closed under composition");
    if (parent.order() % H.order() != 0) throw std::logic_error("subgroup order does not divide the group order");
    return H;
  }

  /// The subgroup generated by elements of the parent; throws NotASubgroup if
  /// a generator lies outside the parent.
  static Subgroup generated_by(const PermGroup& parent, std::span<const Permutation> generators) {
    std::vector<std::size_t> gens;
    for (const auto& g : generators) {
      auto idx = parent.index_of(g);
      if (!idx) throw Error(Errc::NotASubgroup, "generator " + g.to_cycle_string() + " is not in the group");
      gens.push_back(*idx);
    }
    return generated_by_indices(parent, gens);
  }

  static Subgroup generated_by_indices(const PermGroup& parent, std::span<const std::size_t> generators) {
    std::vector<bool> in(parent.order(), false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t g : generators) {
        std::size_t y = parent.multiply(members[head], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    return Subgroup(parent, std::move(members));
  }

  /// Elements satisfying a predicate; the caller guarantees closure.
  template <class Pred>
  static Subgroup filter(const PermGroup& parent, Pred&& keep) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < parent.order(); ++i)
      if (keep(parent.element(i))) members.push_back(i);
    return from_indices(parent, std::move(members));
  }

  const PermGroup& parent() const noexcept { return *parent_; }
  const std::vector<std::size_t>& element_indices() const noexcept { return indices_; }
  std::size_t order() const noexcept { return indices_.size(); }
  std::size_t index() const noexcept { return parent_->order() / indices_.size(); }

  bool contains_index(std::size_t a) const { return std::binary_search(indices_.begin(), indices_.end(), a); }
  bool contains(const Permutation& p) const {
    auto idx = parent_->index_of(p);
    return idx && contains_index(*idx);
  }

  /// x^-1 H x.
  Subgroup conjugate_by(std::size_t x) const {
    std::vector<std::size_t> v;
    v.reserve(indices_.size());
    for (std::size_t a : indices_) v.push_back(parent_->conjugate(a, x));
    std::sort(v.begin(), v.end());
    return Subgroup(*parent_, std::move(v));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  Subgroup(const PermGroup& parent, std::vector<std::size_t> indices) : parent_(&parent), indices_(std::move(indices)) {}

  const PermGroup* parent_;
  std::vector<std::size_t> indices_;
};

inline Subgroup point_stabilizer(const PermGroup& G, Point point) {
  return Subgroup::filter(G, [point](const Permutation& p) { return p(point) == point; });
}

/// Setwise stabilizer of a set of points.
inline Subgroup set_stabilizer(const PermGroup& G, std::vector<Point> points) {
  std::vector<bool> in(G.degree(), false);
  for (Point p : points) {
    if (p >= G.degree()) throw Error(Errc::InvalidArgument, "stabilized point out of range");
    in[p] = true;
  }
  return Subgroup::filter(G, [&](const Permutation& g) {
    for (Point p : points)
      if (!in[g(p)]) return false;
    return true;
  });
}

}  // namespace isospec::groups
