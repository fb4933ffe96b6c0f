#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"

namespace treesg {

// Pipe counts between the three edges incident to one trinode.
struct TrinodeCoords {
  long long x12 = 0;
  long long x13 = 0;
  long long x23 = 0;

  friend bool operator==(const TrinodeCoords&, const TrinodeCoords&) = default;
};

// Weights -> pipe counts: x_ij = (w_i + w_j - w_k) / 2. Defined exactly on
// delta2 triples, where all three counts come out integral and nonnegative.
inline TrinodeCoords trinode_pipes(long long w1, long long w2, long long w3) {
  if (!delta2(w1, w2, w3))
    throw std::invalid_argument("trinode weights (" + std::to_string(w1) + "," +
                                std::to_string(w2) + "," + std::to_string(w3) +
                                ") violate the triangle/parity conditions");
  return {(w1 + w2 - w3) / 2, (w1 + w3 - w2) / 2, (w2 + w3 - w1) / 2};
}

// Pipe counts -> weights: w_i = x_ij + x_ik. Inverse of trinode_pipes.
inline std::array<long long, 3> trinode_weights(const TrinodeCoords& x) {
  if (x.x12 < 0 || x.x13 < 0 || x.x23 < 0)
    throw std::invalid_argument("pipe counts must be nonnegative");
  return {x.x12 + x.x13, x.x12 + x.x23, x.x13 + x.x23};
}

// A multiset of chords between leaves, stored as multiplicities per unordered
// leaf pair. planar_certified marks graphs produced by to_piping, whose chord
// multiset admits a non-crossing drawing in the disk.
struct PipingGraph {
  int n_leaves = 0;
  std::map<std::pair<int, int>, long long> chords;
  bool planar_certified = false;

  void add_chord(int i, int j, long long mult) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_leaves || i == j)
      throw std::invalid_argument("chord (" + std::to_string(i) + "," +
                                  std::to_string(j) +
                                  ") is not a pair of distinct leaves in 1.." +
                                  std::to_string(n_leaves));
    if (mult < 0) throw std::invalid_argument("chord multiplicity must be nonnegative");
    if (mult == 0) return;
    chords[{i, j}] += mult;
  }

  long long multiplicity(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto it = chords.find({i, j});
    return it == chords.end() ? 0 : it->second;
  }

  long long leaf_degree(int i) const {
    long long d = 0;
    for (const auto& [pr, m] : chords)
      if (pr.first == i || pr.second == i) d += m;
    return d;
  }

  long long total_chords() const {
    long long t = 0;
    for (const auto& [pr, m] : chords) t += m;
    return t;
  }

  // Chord multisets only; the certification flag is bookkeeping.
  friend bool operator==(const PipingGraph& x, const PipingGraph& y) {
    return x.n_leaves == y.n_leaves && x.chords == y.chords;
  }
};

// Weighting -> chord diagram. Every trinode is split into pipes, and pipe
// ends meeting along an edge are joined in the unique non-crossing way.
//
// Concretely: pipe ends on an edge occupy positions 1..w counted from the
// lower-labeled polygon vertex. Inside the triangle (a < b < c) the pipes of
// each pair of sides nest around their common corner, so the blocks are
//    side {a,b}: [1..x13] toward corner a, [x13+1..w1] toward corner b
//    side {b,c}: [1..x12] toward corner b, [x12+1..w2] toward corner c
//    side {a,c}: [1..x13] toward corner a, [x13+1..w3] toward corner c
// and within a corner the s-th pipe from the corner joins the s-th positions
// counted from that corner on both sides. Positions are physical points on
// the diagonal, so the two triangles sharing it agree slot by slot.
inline PipingGraph to_piping(const Tree& tree, const Weighting& w) {
  if (!is_member(tree, w))
    throw std::invalid_argument("to_piping requires a semigroup member");

  const int ne = tree.edge_count();
  std::vector<long long> off(ne + 1, 0);
  for (int e = 0; e < ne; ++e) off[e + 1] = off[e] + w.values[e];
  const long long npts = off[ne];

  std::vector<std::array<long long, 2>> link(
      static_cast<std::size_t>(npts), std::array<long long, 2>{-1, -1});
  auto pt = [&off](int e, long long pos) { return off[e] + pos - 1; };
  auto connect = [&link](long long p, long long q) {
    auto& lp = link[p];
    (lp[0] < 0 ? lp[0] : lp[1]) = q;
    auto& lq = link[q];
    (lq[0] < 0 ? lq[0] : lq[1]) = p;
  };

  for (int t = 0; t < tree.trinode_count(); ++t) {
    const auto& ed = tree.trinode_edges(t);
    const long long w1 = w.values[ed[0]];
    const long long w2 = w.values[ed[1]];
    const long long w3 = w.values[ed[2]];
    const long long x12 = (w1 + w2 - w3) / 2;
    const long long x13 = (w1 + w3 - w2) / 2;
    const long long x23 = (w2 + w3 - w1) / 2;
    for (long long s = 1; s <= x13; ++s)
      connect(pt(ed[0], s), pt(ed[2], s));
    for (long long s = 1; s <= x12; ++s)
      connect(pt(ed[0], w1 - s + 1), pt(ed[1], s));
    for (long long s = 1; s <= x23; ++s)
      connect(pt(ed[1], w2 - s + 1), pt(ed[2], w3 - s + 1));
  }

  std::vector<int> edge_of(static_cast<std::size_t>(npts));
  for (int e = 0; e < ne; ++e)
    for (long long p = off[e]; p < off[e + 1]; ++p) edge_of[p] = e;

  PipingGraph g;
  g.n_leaves = tree.leaves();
  g.planar_certified = true;

  // Trace each pipe from a leaf port to its other end. A pipe never turns
  // back (it always leaves a triangle through a different side), so in the
  // dual tree the walk cannot revisit a trinode and must end at a leaf.
  std::vector<char> seen(static_cast<std::size_t>(npts), 0);
  for (int e = 0; e < tree.leaves(); ++e) {
    for (long long p = off[e]; p < off[e + 1]; ++p) {
      if (seen[p]) continue;
      seen[p] = 1;
      long long prev = p;
      long long cur = link[p][0];
      while (!tree.is_leaf_edge(edge_of[cur])) {
        seen[cur] = 1;
        const long long nxt = link[cur][0] == prev ? link[cur][1] : link[cur][0];
        prev = cur;
        cur = nxt;
      }
      seen[cur] = 1;
      g.add_chord(tree.leaf_label(e), tree.leaf_label(edge_of[cur]), 1);
    }
  }
  return g;
}

// Chord diagram -> weighting: every chord adds 1 along the unique tree path
// between its leaves. Accepts arbitrary (also non-planar) chord multisets;
// the result is always a semigroup member.
inline Weighting from_piping(const Tree& tree, const PipingGraph& g) {
  if (g.n_leaves != tree.leaves())
    throw std::invalid_argument("from_piping: graph has " +
                                std::to_string(g.n_leaves) +
                                " leaves, tree has " +
                                std::to_string(tree.leaves()));
  Weighting w = constant_weighting(tree, 0);
  for (const auto& [pr, m] : g.chords) {
    const auto [i, j] = pr;
    if (i < 1 || j > tree.leaves() || i == j)
      throw std::invalid_argument("chord (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
    w.values[tree.leaf_edge(i)] += m;
    w.values[tree.leaf_edge(j)] += m;
    for (int d = 0; d < tree.internal_edge_count(); ++d) {
      const auto [a, b] = tree.diagonals()[d];
      const bool i_inside = i >= a && i < b;
      const bool j_inside = j >= a && j < b;
      if (i_inside != j_inside) w.values[tree.internal_edge(d)] += m;
    }
  }
  return w;
}

// DOT emission: leaves as nodes on a circle, one edge per pipe.
inline std::string piping_dot(const PipingGraph& g) {
  std::ostringstream out;
  out << "graph piping {\n";
  out << "  layout=circo;\n";
  out << "  node [shape=circle];\n";
  for (int i = 1; i <= g.n_leaves; ++i) out << "  " << i << ";\n";
  for (const auto& [pr, m] : g.chords)
    for (long long s = 0; s < m; ++s)
      out << "  " << pr.first << " -- " << pr.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace treesg
