#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treesg {

// A planar trivalent tree with n ordered leaves, stored as a triangulation of
// a convex polygon with vertices 1..n in counterclockwise order:
//
//   polygon side i = {i, i+1} (side n = {n,1})   <->   leaf edge i
//   diagonal {a,b}                               <->   internal edge
//   triangle                                     <->   trinode
//
// Edge ids are 0-based: [0, n) are leaf edges (leaf label = id + 1),
// [n, 2n-3) are internal edges in lexicographic diagonal order. The encoding
// carries the cyclic order of edges around every trinode for free, which the
// piping transform depends on.
using Diagonal = std::pair<int, int>;

inline std::string diagonal_str(const Diagonal& d) {
  return "{" + std::to_string(d.first) + "," + std::to_string(d.second) + "}";
}

class Tree {
 public:
  // One step of the edge elimination order: `edge` is fixed at `trinode`,
  // whose other two edges are already determined.
  struct SolveStep {
    int trinode;
    int edge;
  };

  Tree(int n_leaves, std::vector<Diagonal> diagonals) : n_(n_leaves) {
    if (n_ < 3) throw std::invalid_argument("a tree needs at least 3 leaves");
    for (auto& d : diagonals) {
      if (d.first > d.second) std::swap(d.first, d.second);
      if (d.first < 1 || d.second > n_)
        throw std::invalid_argument("diagonal " + diagonal_str(d) +
                                    " out of range 1.." + std::to_string(n_));
      if (d.first == d.second || d.second - d.first < 2 ||
          (d.first == 1 && d.second == n_))
        throw std::invalid_argument("diagonal " + diagonal_str(d) +
                                    " is a polygon side or degenerate");
    }
    std::sort(diagonals.begin(), diagonals.end());
    for (std::size_t i = 1; i < diagonals.size(); ++i)
      if (diagonals[i] == diagonals[i - 1])
        throw std::invalid_argument("duplicate diagonal " +
                                    diagonal_str(diagonals[i]));
    for (std::size_t i = 0; i < diagonals.size(); ++i)
      for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
        const auto [a, b] = diagonals[i];
        const auto [c, d] = diagonals[j];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
          throw std::invalid_argument("diagonals " + diagonal_str(diagonals[i]) +
                                      " and " + diagonal_str(diagonals[j]) +
                                      " cross");
      }
    if (static_cast<int>(diagonals.size()) != n_ - 3)
      throw std::invalid_argument("expected " + std::to_string(n_ - 3) +
                                  " diagonals, got " +
                                  std::to_string(diagonals.size()));
    diags_ = std::move(diagonals);
    build_derived();
  }

  int leaves() const { return n_; }
  int edge_count() const { return 2 * n_ - 3; }
  int internal_edge_count() const { return n_ - 3; }
  int trinode_count() const { return n_ - 2; }

  bool is_leaf_edge(int e) const { return e >= 0 && e < n_; }
  int leaf_label(int e) const { return e + 1; }
  int leaf_edge(int label) const { return label - 1; }
  int internal_edge(int diagonal_index) const { return n_ + diagonal_index; }

  const std::vector<Diagonal>& diagonals() const { return diags_; }
  const Diagonal& diagonal_of(int e) const { return diags_[e - n_]; }

  // vertices (a < b < c) and edge ids ({a,b}, {b,c}, {a,c}) of a trinode,
  // counterclockwise around the triangle
  const std::array<int, 3>& trinode_vertices(int t) const { return tris_[t]; }
  const std::array<int, 3>& trinode_edges(int t) const { return tri_edges_[t]; }

  // trinodes incident to an edge; second entry is -1 for leaf edges
  const std::array<int, 2>& edge_trinodes(int e) const { return edge_tris_[e]; }

  // The two complementary arcs of consecutive leaves separated by an internal
  // edge: diagonal {a,b} yields ([a..b-1], [b..n] ++ [1..a-1]).
  std::pair<std::vector<int>, std::vector<int>> leaf_sides(int e) const {
    if (e < 0 || e >= edge_count())
      throw std::invalid_argument("edge id " + std::to_string(e) +
                                  " out of range");
    if (is_leaf_edge(e))
      throw std::invalid_argument("leaf_sides needs an internal edge, got leaf edge " +
                                  std::to_string(leaf_label(e)));
    const auto [a, b] = diagonal_of(e);
    std::pair<std::vector<int>, std::vector<int>> sides;
    for (int i = a; i < b; ++i) sides.first.push_back(i);
    for (int i = b; i <= n_; ++i) sides.second.push_back(i);
    for (int i = 1; i < a; ++i) sides.second.push_back(i);
    return sides;
  }

  const std::vector<SolveStep>& solve_schedule() const { return schedule_; }
  int root_trinode() const { return root_; }

  friend bool operator==(const Tree& x, const Tree& y) {
    return x.n_ == y.n_ && x.diags_ == y.diags_;
  }

 private:
  Diagonal side(int i) const {
    return i < n_ ? Diagonal{i, i + 1} : Diagonal{1, n_};
  }

  void build_derived() {
    std::map<Diagonal, int> edge_id;
    for (int i = 1; i <= n_; ++i) edge_id[side(i)] = i - 1;
    for (int d = 0; d < static_cast<int>(diags_.size()); ++d)
      edge_id[diags_[d]] = n_ + d;

    // Vertices are in convex position, so every mutually adjacent triple of
    // polygon vertices bounds a face of the triangulation.
    tris_.clear();
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) {
        if (!edge_id.count({a, b})) continue;
        for (int c = b + 1; c <= n_; ++c)
          if (edge_id.count({b, c}) && edge_id.count({a, c}))
            tris_.push_back({a, b, c});
      }
    if (static_cast<int>(tris_.size()) != n_ - 2)
      throw std::logic_error("triangulation has wrong face count");

    tri_edges_.resize(tris_.size());
    edge_tris_.assign(edge_count(), {-1, -1});
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      const auto [a, b, c] = tris_[t];
      tri_edges_[t] = {edge_id[{a, b}], edge_id[{b, c}], edge_id[{a, c}]};
      for (int e : tri_edges_[t]) {
        auto& inc = edge_tris_[e];
        (inc[0] < 0 ? inc[0] : inc[1]) = t;
      }
    }

    // Peel the dual tree from the leaves inward: BFS from trinode 0, then
    // fix each trinode's parent edge children-first, so whenever an edge is
    // solved the other two edges at that trinode are already known.
    std::vector<int> parent_edge(tris_.size(), -1);
    std::vector<int> order;
    std::vector<char> seen(tris_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      order.push_back(t);
      for (int e : tri_edges_[t]) {
        if (is_leaf_edge(e)) continue;
        const int other = edge_tris_[e][0] == t ? edge_tris_[e][1] : edge_tris_[e][0];
        if (!seen[other]) {
          seen[other] = 1;
          parent_edge[other] = e;
          q.push(other);
        }
      }
    }
    schedule_.clear();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (parent_edge[*it] >= 0) schedule_.push_back({*it, parent_edge[*it]});
    root_ = 0;
  }

  int n_;
  std::vector<Diagonal> diags_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::array<int, 2>> edge_tris_;
  std::vector<SolveStep> schedule_;
  int root_ = 0;
};

// All triangulations of the labeled convex n-gon, i.e. all planar trivalent
// trees on n ordered leaves. Deterministic order, Catalan(n-2) results.
// Supported up to n = 12 (16796 trees).
inline std::vector<Tree> enumerate_trees(int n) {
  if (n < 3) throw std::invalid_argument("a tree needs at least 3 leaves");
  if (n > 12) throw std::invalid_argument("tree enumeration supported up to 12 leaves");

  // Triangulations of the sub-polygon on consecutive vertices lo..hi; the
  // triangle resting on the base edge (lo,hi) chooses an apex.
  auto rec = [](auto&& self, int lo, int hi) -> std::vector<std::vector<Diagonal>> {
    std::vector<std::vector<Diagonal>> out;
    if (hi - lo + 1 < 3) {
      out.emplace_back();
      return out;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
      const auto left = self(self, lo, apex);
      const auto right = self(self, apex, hi);
      for (const auto& l : left)
        for (const auto& r : right) {
          std::vector<Diagonal> d;
          if (apex - lo >= 2) d.emplace_back(lo, apex);
          if (hi - apex >= 2) d.emplace_back(apex, hi);
          d.insert(d.end(), l.begin(), l.end());
          d.insert(d.end(), r.begin(), r.end());
          out.push_back(std::move(d));
        }
    }
    return out;
  };

  std::vector<Tree> trees;
  for (auto& d : rec(rec, 1, n)) trees.emplace_back(n, std::move(d));
  return trees;
}

}  // namespace treesg
