#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treesg/piping.hpp"
#include "treesg/polytope.hpp"
#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"

namespace treesg {

// Candidate degree for the canonical generator: the smallest divisor a of
// 2(n-2) such that a*r - 2 is nonnegative and pins a single weighting.
struct GeneratorDegree {
  long long a = 0;
  std::vector<long long> residual;  // a*r - 2, entrywise
  SinglePointClass cls;
};

inline std::vector<long long> divisors_ascending(long long m) {
  std::vector<long long> d;
  for (long long x = 1; x <= m; ++x)
    if (m % x == 0) d.push_back(x);
  return d;
}

inline std::optional<GeneratorDegree> find_generator_degree(const WeightVector& r) {
  const int n = r.size();
  for (long long a : divisors_ascending(2LL * (n - 2))) {
    std::vector<long long> residual = r.scaled(a);
    bool nonneg = true;
    for (auto& v : residual) {
      v -= 2;
      if (v < 0) {
        nonneg = false;
        break;
      }
    }
    if (!nonneg) continue;
    const auto cls = classify_single_point(residual);
    if (cls.kind != SinglePointClass::Kind::none)
      return GeneratorDegree{a, std::move(residual), cls};
  }
  return std::nullopt;
}

// Closed-form chord multiplicities of the generator minus the planar cycle.
// dominant(i): chord (i,j) has multiplicity R_j; triangle(i,j,k): the pipe
// counts of the triple; everything else is zero.
inline PipingGraph expected_generator_chords(const std::vector<long long>& R,
                                             const SinglePointClass& cls) {
  if (cls.kind == SinglePointClass::Kind::none)
    throw std::invalid_argument("expected_generator_chords needs a single-point class");
  PipingGraph g;
  g.n_leaves = static_cast<int>(R.size());
  if (cls.kind == SinglePointClass::Kind::dominant) {
    for (int j = 1; j <= g.n_leaves; ++j)
      if (j != cls.i) g.add_chord(cls.i, j, R[j - 1]);
  } else {
    const long long ri = R[cls.i - 1], rj = R[cls.j - 1], rk = R[cls.k - 1];
    g.add_chord(cls.i, cls.j, (ri + rj - rk) / 2);
    g.add_chord(cls.i, cls.k, (ri + rk - rj) / 2);
    g.add_chord(cls.j, cls.k, (rj + rk - ri) / 2);
  }
  return g;
}

enum class FailureKind {
  no_admissible_degree,       // no divisor of 2(n-2) yields a generator shape
  chord_deficit,              // some nonzero generator chord is below n-4
  no_interior_within_depth,   // oracle: no interior members up to the depth
  multiple_minimal_interior,  // oracle: lowest interior degree is not unique
  witness_not_divisible,      // oracle: interior member missing the generator
};

inline const char* failure_name(FailureKind f) {
  switch (f) {
    case FailureKind::no_admissible_degree: return "no_admissible_degree";
    case FailureKind::chord_deficit: return "chord_deficit";
    case FailureKind::no_interior_within_depth: return "no_interior_within_depth";
    case FailureKind::multiple_minimal_interior: return "multiple_minimal_interior";
    case FailureKind::witness_not_divisible: return "witness_not_divisible";
  }
  return "?";
}

struct GorensteinVerdict {
  bool is_gorenstein = false;
  std::optional<long long> generator_degree;  // a; the graded a-invariant is -a
  std::optional<Weighting> generator;
  std::optional<FailureKind> failure;
  int deficit_i = 0, deficit_j = 0;     // set for chord_deficit
  long long deficit_value = 0;
  std::optional<Weighting> witness;     // set for witness_not_divisible
  bool from_oracle = false;
  long long oracle_depth = 0;

  std::optional<long long> a_invariant() const {
    if (!is_gorenstein) return std::nullopt;
    return -*generator_degree;
  }
};

// Decide the Gorenstein property by the closed-form classification: a
// generator degree must exist, and every nonzero chord of the generator
// (minus the planar cycle) must have multiplicity at least n-4.
//
// n = 3 is special: all three edges are leaves, so each graded piece has at
// most one element and the algebra is a polynomial ring in one variable as
// soon as any positive degree is realizable. The triangle inequalities are
// scale-invariant, so that happens at degree 1, or 2 when the grading has
// odd total weight.
inline GorensteinVerdict classify_gorenstein(const Tree& tree,
                                             const WeightVector& r) {
  detail::check_same_tree(tree, r, "classify_gorenstein");
  GorensteinVerdict v;
  const int n = tree.leaves();

  if (n == 3) {
    const bool triangle_ok =
        r[0] <= r[1] + r[2] && r[1] <= r[0] + r[2] && r[2] <= r[0] + r[1];
    if (!triangle_ok) {
      v.failure = FailureKind::no_admissible_degree;
      return v;
    }
    const long long a = r.even_sum() ? 1 : 2;
    v.is_gorenstein = true;
    v.generator_degree = a;
    v.generator = Weighting{r.scaled(a)};
    return v;
  }

  const auto fg = find_generator_degree(r);
  if (!fg) {
    v.failure = FailureKind::no_admissible_degree;
    return v;
  }
  const auto expected = expected_generator_chords(fg->residual, fg->cls);
  const long long threshold = n - 4;
  for (const auto& [pr, m] : expected.chords) {
    if (m < threshold) {
      v.failure = FailureKind::chord_deficit;
      v.deficit_i = pr.first;
      v.deficit_j = pr.second;
      v.deficit_value = m;
      return v;
    }
  }
  const auto pts = members_with_leaf_weights(tree, fg->residual);
  if (pts.size() != 1)
    throw std::logic_error("generator residual did not pin a unique weighting");
  v.is_gorenstein = true;
  v.generator_degree = fg->a;
  v.generator = add(tree, constant_weighting(tree, 2), pts[0]);
  return v;
}

// Brute-force cross-check to a fixed degree bound: find the lowest degree
// carrying interior members; demand it carries exactly one, then demand that
// every interior member up to the bound is divisible by it. A positive
// verdict certifies the factorization property for degrees <= depth only.
inline GorensteinVerdict gorenstein_oracle(const Tree& tree,
                                           const WeightVector& r,
                                           long long depth) {
  detail::check_same_tree(tree, r, "gorenstein_oracle");
  if (depth < 1) throw std::invalid_argument("oracle depth must be at least 1");

  GorensteinVerdict v;
  v.from_oracle = true;
  v.oracle_depth = depth;

  std::optional<long long> min_degree;
  Weighting candidate;
  for (long long k = 1; k <= depth; ++k) {
    const auto interior = members_with_leaf_weights(tree, r.scaled(k), /*strict=*/true);
    if (!min_degree) {
      if (interior.empty()) continue;
      if (interior.size() > 1) {
        v.failure = FailureKind::multiple_minimal_interior;
        return v;
      }
      min_degree = k;
      candidate = interior.front();
      continue;
    }
    for (const auto& eta : interior) {
      if (!detail::pipes_dominated(tree, candidate, eta)) {
        v.failure = FailureKind::witness_not_divisible;
        v.witness = eta;
        return v;
      }
    }
  }
  if (!min_degree) {
    v.failure = FailureKind::no_interior_within_depth;
    return v;
  }
  v.is_gorenstein = true;
  v.generator_degree = *min_degree;
  v.generator = candidate;
  return v;
}

// The pipe-reallocation inequality deciding whether an interior weighting of
// degree k can fall below the generator's chord count at the pair (i, j):
//
//   sum_{l != i,j} [ (k/a)(R_l + 2) - 2 ]
//     - [ (k/a)(R_i + 2) - 2 ] - [ (k/a)(R_j + 2) - 2 ] + 2*nij  >  0
//
// Every bracket is scaled by a > 0, which keeps the arithmetic in integers
// without changing the sign.
inline bool deficit_inequality(int n, const std::vector<long long>& R,
                               long long a, long long k, int i, int j,
                               long long nij) {
  if (a <= 0) throw std::invalid_argument("deficit_inequality needs a >= 1");
  if (static_cast<int>(R.size()) != n)
    throw std::invalid_argument("deficit_inequality: R has wrong length");
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw std::invalid_argument("deficit_inequality: bad leaf pair");
  long long f = 0;
  for (int l = 1; l <= n; ++l) {
    if (l == i || l == j) continue;
    f += k * (R[l - 1] + 2) - 2 * a;
  }
  f -= k * (R[i - 1] + 2) - 2 * a;
  f -= k * (R[j - 1] + 2) - 2 * a;
  f += 2 * a * nij;
  return f > 0;
}

// Minus the generator degree when the algebra is Gorenstein.
inline std::optional<long long> a_invariant(const Tree& tree,
                                            const WeightVector& r) {
  return classify_gorenstein(tree, r).a_invariant();
}

}  // namespace treesg
