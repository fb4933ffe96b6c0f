#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"

namespace treesg {

namespace detail {

// Depth-first enumeration of all members with the given leaf weights.
// Internal edges are fixed in the tree's elimination order, so each new edge
// sees a trinode whose other two values u, v are known and ranges over
// |u-v| .. u+v in steps of two (the parity of either leaf arc). In strict
// mode the interval is open on both sides and the final trinode check is
// strict, which enumerates exactly the interior members.
template <typename Emit>
inline void enumerate_members_impl(const Tree& tree,
                                   const std::vector<long long>& leaf_weights,
                                   bool strict, Emit&& emit) {
  if (static_cast<int>(leaf_weights.size()) != tree.leaves())
    throw std::invalid_argument("leaf weight vector does not match the tree");
  for (long long v : leaf_weights)
    if (v < 0) return;

  std::vector<long long> vals(tree.edge_count(), -1);
  for (int i = 0; i < tree.leaves(); ++i) vals[i] = leaf_weights[i];
  const auto& steps = tree.solve_schedule();

  auto rec = [&](auto&& self, std::size_t si) -> void {
    if (si == steps.size()) {
      const auto& e = tree.trinode_edges(tree.root_trinode());
      const bool ok = strict
          ? delta2_strict(vals[e[0]], vals[e[1]], vals[e[2]])
          : delta2(vals[e[0]], vals[e[1]], vals[e[2]]);
      if (ok) emit(vals);
      return;
    }
    const auto& st = steps[si];
    const auto& ed = tree.trinode_edges(st.trinode);
    long long u = -1, v = -1;
    for (int e : ed)
      if (e != st.edge) (u < 0 ? u : v) = vals[e];
    long long lo = std::llabs(u - v);
    long long hi = u + v;
    if (strict) {
      lo += 2;
      hi -= 2;
    }
    for (long long c = lo; c <= hi; c += 2) {
      vals[st.edge] = c;
      self(self, si + 1);
    }
    vals[st.edge] = -1;
  };
  rec(rec, 0);
}

}  // namespace detail

// All members with the given leaf weights (arbitrary nonnegative integers),
// sorted lexicographically by edge values. strict = interior members only.
inline std::vector<Weighting> members_with_leaf_weights(
    const Tree& tree, const std::vector<long long>& leaf_weights,
    bool strict = false) {
  std::vector<Weighting> out;
  detail::enumerate_members_impl(tree, leaf_weights, strict,
                                 [&](const std::vector<long long>& vals) {
                                   out.push_back(Weighting{vals});
                                 });
  std::sort(out.begin(), out.end());
  return out;
}

inline long long count_members_with_leaf_weights(
    const Tree& tree, const std::vector<long long>& leaf_weights,
    bool strict = false) {
  long long count = 0;
  detail::enumerate_members_impl(tree, leaf_weights, strict,
                                 [&](const std::vector<long long>&) { ++count; });
  return count;
}

// The degree-k piece: members with leaf weights k*r.
inline std::vector<Weighting> enumerate_points(const Tree& tree,
                                               const WeightVector& r,
                                               long long k) {
  detail::check_same_tree(tree, r, "enumerate_points");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  return members_with_leaf_weights(tree, r.scaled(k));
}

// Interior members of the degree-k piece.
inline std::vector<Weighting> enumerate_interior(const Tree& tree,
                                                 const WeightVector& r,
                                                 long long k) {
  detail::check_same_tree(tree, r, "enumerate_interior");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  return members_with_leaf_weights(tree, r.scaled(k), /*strict=*/true);
}

// Number of members of degree k.
inline long long hilbert_function(const Tree& tree, const WeightVector& r,
                                  long long k) {
  detail::check_same_tree(tree, r, "hilbert_function");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  return count_members_with_leaf_weights(tree, r.scaled(k));
}

// Shape classification of a nonnegative leaf-weight vector R that pins the
// fiber to a single weighting:
//   dominant:  R_i equals the sum of all other entries, for some i
//   triangle:  a delta2 triple carries all the weight, the rest is zero
//   none:      anything else (zero or several weightings)
// Indices are 1-based leaf labels; ties pick dominant first, then the
// smallest witnesses.
struct SinglePointClass {
  enum class Kind { dominant, triangle, none };
  Kind kind = Kind::none;
  int i = 0, j = 0, k = 0;

  friend bool operator==(const SinglePointClass&, const SinglePointClass&) = default;
};

inline SinglePointClass classify_single_point(const std::vector<long long>& R) {
  const int n = static_cast<int>(R.size());
  if (n < 3) throw std::invalid_argument("classify_single_point needs >= 3 entries");
  long long total = 0;
  for (long long v : R) {
    if (v < 0) throw std::invalid_argument("classify_single_point needs nonnegative entries");
    total += v;
  }
  for (int i = 0; i < n; ++i)
    if (R[i] == total - R[i]) return {SinglePointClass::Kind::dominant, i + 1, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (R[i] + R[j] + R[k] == total && delta2(R[i], R[j], R[k]))
          return {SinglePointClass::Kind::triangle, i + 1, j + 1, k + 1};
  return {};
}

// The unique interior point of the degree-1 piece, when it exists: present
// exactly when r - 2 is nonnegative and pins a single weighting, in which
// case the point is that weighting shifted up by the constant-2 weighting.
inline std::optional<Weighting> unique_interior_point(const Tree& tree,
                                                      const WeightVector& r) {
  detail::check_same_tree(tree, r, "unique_interior_point");
  std::vector<long long> residual(r.entries());
  for (auto& v : residual) {
    v -= 2;
    if (v < 0) return std::nullopt;
  }
  if (classify_single_point(residual).kind == SinglePointClass::Kind::none)
    return std::nullopt;
  const auto pts = members_with_leaf_weights(tree, residual);
  if (pts.size() != 1)
    throw std::logic_error("single-point classification disagrees with enumeration");
  return add(tree, constant_weighting(tree, 2), pts[0]);
}

// n-3 when every entry of r is below the sum of the others, else 0
// (the fiber degenerates to at most one point).
inline int fiber_dimension(const Tree& tree, const WeightVector& r) {
  detail::check_same_tree(tree, r, "fiber_dimension");
  const long long total = r.sum();
  for (int i = 0; i < r.size(); ++i)
    if (r[i] >= total - r[i]) return 0;
  return tree.leaves() - 3;
}

}  // namespace treesg
