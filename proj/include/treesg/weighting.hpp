#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treesg/tree.hpp"

namespace treesg {

// The grading datum: n positive integers, one per leaf. An odd total is
// accepted; membership is then only possible in even degrees.
class WeightVector {
 public:
  explicit WeightVector(std::vector<long long> entries)
      : entries_(std::move(entries)) {
    if (entries_.size() < 3)
      throw std::invalid_argument("weight vector needs at least 3 entries");
    for (long long v : entries_)
      if (v < 1)
        throw std::invalid_argument("weight vector entries must be positive");
  }

  int size() const { return static_cast<int>(entries_.size()); }
  long long operator[](int i) const { return entries_[i]; }
  const std::vector<long long>& entries() const { return entries_; }
  long long sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
  }
  bool even_sum() const { return sum() % 2 == 0; }
  std::vector<long long> scaled(long long k) const {
    std::vector<long long> s(entries_);
    for (auto& v : s) v *= k;
    return s;
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long long> entries_;
};

// An integer per edge of a fixed tree, indexed by edge id. Plain data;
// whether it is a semigroup member is a separate assertion.
struct Weighting {
  std::vector<long long> values;

  friend bool operator==(const Weighting&, const Weighting&) = default;
  friend bool operator<(const Weighting& x, const Weighting& y) {
    return x.values < y.values;
  }
};

// Triangle inequalities plus even sum on three nonnegative integers.
// Negative inputs simply fail.
inline bool delta2(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

// Delta2 with all three triangle inequalities strict.
inline bool delta2_strict(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a < b + c && b < a + c && c < a + b;
}

namespace detail {

inline void check_same_tree(const Tree& tree, const Weighting& w,
                            const char* what) {
  if (static_cast<int>(w.values.size()) != tree.edge_count())
    throw std::invalid_argument(std::string(what) + ": weighting has " +
                                std::to_string(w.values.size()) +
                                " values, tree has " +
                                std::to_string(tree.edge_count()) + " edges");
}

inline void check_same_tree(const Tree& tree, const WeightVector& r,
                            const char* what) {
  if (r.size() != tree.leaves())
    throw std::invalid_argument(std::string(what) + ": weight vector has " +
                                std::to_string(r.size()) +
                                " entries, tree has " +
                                std::to_string(tree.leaves()) + " leaves");
}

}  // namespace detail

inline Weighting constant_weighting(const Tree& tree, long long v) {
  return Weighting{std::vector<long long>(tree.edge_count(), v)};
}

inline bool is_member(const Tree& tree, const Weighting& w) {
  detail::check_same_tree(tree, w, "is_member");
  for (int t = 0; t < tree.trinode_count(); ++t) {
    const auto& e = tree.trinode_edges(t);
    if (!delta2(w.values[e[0]], w.values[e[1]], w.values[e[2]])) return false;
  }
  return true;
}

// The unique k >= 0 with leaf weights equal to k*r, if any.
inline std::optional<long long> degree_of(const Tree& tree, const Weighting& w,
                                          const WeightVector& r) {
  detail::check_same_tree(tree, w, "degree_of");
  detail::check_same_tree(tree, r, "degree_of");
  if (w.values[0] % r[0] != 0) return std::nullopt;
  const long long k = w.values[0] / r[0];
  if (k < 0) return std::nullopt;
  for (int i = 0; i < tree.leaves(); ++i)
    if (w.values[i] != k * r[i]) return std::nullopt;
  return k;
}

inline Weighting add(const Tree& tree, const Weighting& x, const Weighting& y) {
  detail::check_same_tree(tree, x, "add");
  detail::check_same_tree(tree, y, "add");
  Weighting out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += y.values[i];
  return out;
}

// Edgewise difference; may leave the cone, the caller re-checks membership.
inline Weighting subtract(const Tree& tree, const Weighting& x, const Weighting& y) {
  detail::check_same_tree(tree, x, "subtract");
  detail::check_same_tree(tree, y, "subtract");
  Weighting out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= y.values[i];
  return out;
}

namespace detail {

// Componentwise comparison of per-trinode pipe coordinates. The coordinate
// (w_i + w_j - w_k)/2 is monotone in each rotation, so comparing the doubled
// values avoids the halving.
inline bool pipes_dominated(const Tree& tree, const Weighting& x,
                            const Weighting& y) {
  for (int t = 0; t < tree.trinode_count(); ++t) {
    const auto& e = tree.trinode_edges(t);
    const long long a = x.values[e[0]], b = x.values[e[1]], c = x.values[e[2]];
    const long long u = y.values[e[0]], v = y.values[e[1]], z = y.values[e[2]];
    if (a + b - c > u + v - z) return false;
    if (a + c - b > u + z - v) return false;
    if (b + c - a > v + z - u) return false;
  }
  return true;
}

inline bool is_interior_unchecked(const Tree& tree, const Weighting& w) {
  for (int t = 0; t < tree.trinode_count(); ++t) {
    const auto& e = tree.trinode_edges(t);
    if (!delta2_strict(w.values[e[0]], w.values[e[1]], w.values[e[2]]))
      return false;
  }
  return true;
}

}  // namespace detail

// Semigroup divisibility: x divides y iff y - x is again a member, checked
// via pipe coordinates at every trinode.
inline bool divides(const Tree& tree, const Weighting& x, const Weighting& y) {
  if (!is_member(tree, x) || !is_member(tree, y))
    throw std::invalid_argument("divides requires semigroup members");
  return detail::pipes_dominated(tree, x, y);
}

// All triangle inequalities strict at every trinode; equivalently the
// constant-2 weighting divides w.
inline bool is_interior(const Tree& tree, const Weighting& w) {
  if (!is_member(tree, w))
    throw std::invalid_argument("is_interior requires a semigroup member");
  return detail::is_interior_unchecked(tree, w);
}

inline bool is_boundary(const Tree& tree, const Weighting& w,
                        const WeightVector& r) {
  if (!is_member(tree, w))
    throw std::invalid_argument("is_boundary requires a semigroup member");
  if (degree_of(tree, w, r) != std::optional<long long>(1))
    throw std::invalid_argument("is_boundary requires a member of degree 1");
  return !detail::is_interior_unchecked(tree, w);
}

}  // namespace treesg
