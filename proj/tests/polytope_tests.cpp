#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support/brute.hpp"
#include "treesg/polytope.hpp"
#include "treesg/survey.hpp"

using namespace treesg;

namespace {

const Tree& cat4() {
  static const Tree t(4, {{1, 3}});
  return t;
}

}  // namespace

TEST_CASE("degree pieces of the square caterpillar", "[polytope]") {
  const WeightVector ones({1, 1, 1, 1});
  const auto k1 = enumerate_points(cat4(), ones, 1);
  REQUIRE(k1.size() == 2);
  CHECK(k1[0] == Weighting{{1, 1, 1, 1, 0}});
  CHECK(k1[1] == Weighting{{1, 1, 1, 1, 2}});

  const auto k2 = enumerate_points(cat4(), ones, 2);
  REQUIRE(k2.size() == 3);
  CHECK(k2[0].values[4] == 0);
  CHECK(k2[1].values[4] == 2);
  CHECK(k2[2].values[4] == 4);

  const auto k0 = enumerate_points(cat4(), ones, 0);
  REQUIRE(k0.size() == 1);
  CHECK(k0[0] == constant_weighting(cat4(), 0));

  CHECK_THROWS_AS(enumerate_points(cat4(), ones, -1), std::invalid_argument);
}

TEST_CASE("pruned search agrees with box enumeration", "[polytope]") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n))
      for (const auto& rv : even_weight_vectors(n, 3)) {
        const WeightVector r(rv);
        for (long long k = 0; k <= 3; ++k) {
          const auto fast = enumerate_points(t, r, k);
          const auto slow = brute::box_enumerate(t, r.scaled(k));
          CHECK(fast == slow);
          CHECK(hilbert_function(t, r, k) == static_cast<long long>(slow.size()));
          const auto fast_int = enumerate_interior(t, r, k);
          const auto slow_int = brute::box_enumerate(t, r.scaled(k), true);
          CHECK(fast_int == slow_int);
        }
      }
}

TEST_CASE("interior two ways", "[polytope]") {
  const WeightVector ones({1, 1, 1, 1});
  const auto interior2 = enumerate_interior(cat4(), ones, 2);
  REQUIRE(interior2.size() == 1);
  CHECK(interior2[0] == constant_weighting(cat4(), 2));
  CHECK(enumerate_interior(cat4(), ones, 1).empty());
  CHECK(enumerate_interior(cat4(), ones, 0).empty());

  // strict filter == all-twos translate of the shifted leaf weights
  for (int n = 4; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n))
      for (const auto& rv : even_weight_vectors(n, n == 6 ? 2 : 3)) {
        const WeightVector r(rv);
        for (long long k = 1; k <= 3; ++k) {
          const auto direct = enumerate_interior(t, r, k);
          std::vector<long long> shifted = r.scaled(k);
          for (auto& v : shifted) v -= 2;
          std::vector<Weighting> translated;
          const auto two = constant_weighting(t, 2);
          for (const auto& eta : members_with_leaf_weights(t, shifted))
            translated.push_back(add(t, two, eta));
          CHECK(direct == translated);
          // and the filter route
          std::vector<Weighting> filtered;
          for (const auto& w : enumerate_points(t, r, k))
            if (is_interior(t, w)) filtered.push_back(w);
          CHECK(direct == filtered);
        }
      }
}

TEST_CASE("hilbert function values and tree independence", "[polytope]") {
  const WeightVector ones({1, 1, 1, 1});
  CHECK(hilbert_function(cat4(), ones, 1) == 2);
  CHECK(hilbert_function(cat4(), ones, 0) == 1);

  const auto trees4 = enumerate_trees(4);
  REQUIRE(trees4.size() == 2);
  for (const auto& rv : even_weight_vectors(4, 3)) {
    const WeightVector r(rv);
    for (long long k = 0; k <= 5; ++k)
      CHECK(hilbert_function(trees4[0], r, k) == hilbert_function(trees4[1], r, k));
  }

  for (int n = 5; n <= 6; ++n) {
    const auto trees = enumerate_trees(n);
    for (const auto& rv : even_weight_vectors(n, 2)) {
      const WeightVector r(rv);
      for (long long k = 0; k <= 4; ++k) {
        const auto h = hilbert_function(trees[0], r, k);
        for (const auto& t : trees) CHECK(hilbert_function(t, r, k) == h);
      }
    }
  }
}

TEST_CASE("single-point classification", "[polytope]") {
  using K = SinglePointClass::Kind;
  CHECK(classify_single_point({4, 2, 1, 1}) == SinglePointClass{K::dominant, 1, 0, 0});
  // ties between the two shapes resolve to dominant with the smallest index
  CHECK(classify_single_point({1, 1, 0, 0, 0, 0}) ==
        SinglePointClass{K::dominant, 1, 0, 0});
  CHECK(classify_single_point({0, 0, 0, 0}) == SinglePointClass{K::dominant, 1, 0, 0});
  CHECK(classify_single_point({2, 1, 1, 0}) == SinglePointClass{K::dominant, 1, 0, 0});
  CHECK(classify_single_point({2, 2, 2, 0, 0}) ==
        SinglePointClass{K::triangle, 1, 2, 3});
  CHECK(classify_single_point({2, 0, 0, 0, 0}).kind == K::none);
  CHECK(classify_single_point({1, 1, 1, 1}).kind == K::none);  // odd support sums
  CHECK(classify_single_point({2, 2, 2, 2}).kind == K::none);
  CHECK_THROWS_AS(classify_single_point({-1, 1, 0}), std::invalid_argument);

  // the classification matches enumeration: exactly one member iff not none
  for (int n = 4; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      std::vector<long long> R(n, 0);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
          long long sum = 0;
          for (long long v : R) sum += v;
          if (sum % 2 != 0) return;
          const bool single = classify_single_point(R).kind != K::none;
          CHECK(single == (members_with_leaf_weights(t, R).size() == 1));
          return;
        }
        for (long long v = 0; v <= 4; ++v) {
          R[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
}

TEST_CASE("unique interior point of the degree-1 polytope", "[polytope]") {
  const auto two = constant_weighting(cat4(), 2);
  CHECK(unique_interior_point(cat4(), WeightVector({2, 2, 2, 2})) == two);

  const auto w = unique_interior_point(cat4(), WeightVector({6, 4, 3, 3}));
  REQUIRE(w.has_value());
  CHECK(*w == Weighting{{6, 4, 3, 3, 4}});
  CHECK(enumerate_interior(cat4(), WeightVector({6, 4, 3, 3}), 1).size() == 1);

  const Tree cat5(5, {{1, 3}, {1, 4}});
  CHECK(unique_interior_point(cat5, WeightVector({4, 1, 1, 1, 1})) == std::nullopt);
  CHECK(enumerate_interior(cat5, WeightVector({4, 1, 1, 1, 1}), 1).empty());
}

TEST_CASE("fiber dimension", "[polytope]") {
  CHECK(fiber_dimension(cat4(), WeightVector({1, 1, 1, 1})) == 1);
  CHECK(fiber_dimension(cat4(), WeightVector({3, 1, 1, 1})) == 0);
  CHECK(fiber_dimension(Tree(3, {}), WeightVector({2, 2, 2})) == 0);
  const Tree cat6(6, {{1, 3}, {1, 4}, {1, 5}});
  CHECK(fiber_dimension(cat6, WeightVector({1, 1, 1, 1, 1, 1})) == 3);
}

TEST_CASE("points of a scaled fiber satisfy the cone inequalities", "[polytope]") {
  const WeightVector r({2, 1, 1, 2});
  for (long long k = 1; k <= 4; ++k)
    for (const auto& w : enumerate_points(cat4(), r, k))
      for (int t = 0; t < cat4().trinode_count(); ++t) {
        const auto& e = cat4().trinode_edges(t);
        const long long a = w.values[e[0]], b = w.values[e[1]], c = w.values[e[2]];
        // the real inequalities of k * P(r): scale-invariant
        CHECK(a <= b + c);
        CHECK(b <= a + c);
        CHECK(c <= a + b);
      }
}
