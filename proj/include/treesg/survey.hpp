#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "treesg/gorenstein.hpp"
#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"

namespace treesg {

// All weight vectors with entries in 1..max_entry (even total only), in
// lexicographic order.
inline std::vector<std::vector<long long>> even_weight_vectors(int n, long long max_entry) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(n, 1);
  auto rec = [&](auto&& self, int pos, long long sum) -> void {
    if (pos == n) {
      if (sum % 2 == 0) out.push_back(cur);
      return;
    }
    for (long long v = 1; v <= max_entry; ++v) {
      cur[pos] = v;
      self(self, pos + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Depth policy for cross-validation: verify positives to three times the
// generator degree (capped at 12) and hunt for witnesses up to 2(n-2) on
// negatives, the bound every generator degree must divide.
inline long long auto_oracle_depth(int n, const GorensteinVerdict& classifier) {
  if (classifier.is_gorenstein)
    return std::min<long long>(3 * *classifier.generator_degree, 12);
  return 2LL * (n - 2);
}

inline bool verdicts_agree(const GorensteinVerdict& c, const GorensteinVerdict& o) {
  if (c.is_gorenstein != o.is_gorenstein) return false;
  if (!c.is_gorenstein) return true;
  return c.generator_degree == o.generator_degree && c.generator == o.generator;
}

struct SurveyRow {
  std::vector<long long> r;
  int tree_index = 0;
  GorensteinVerdict classifier;
  GorensteinVerdict oracle;
  long long depth = 0;
  bool agree = false;
};

// Classifier-vs-oracle sweep over all trees with n leaves and all entries in
// 1..max_entry with even total. Rows are ordered by r, then tree index,
// independent of the number of worker threads.
inline std::vector<SurveyRow> run_survey(int n, long long max_entry,
                                         std::optional<long long> fixed_depth,
                                         unsigned jobs = 0) {
  const auto trees = enumerate_trees(n);
  const auto rs = even_weight_vectors(n, max_entry);
  const std::size_t total = rs.size() * trees.size();
  std::vector<SurveyRow> rows(total);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, total == 0 ? 1 : static_cast<unsigned>(total));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      const std::size_t ri = idx / trees.size();
      const int ti = static_cast<int>(idx % trees.size());
      SurveyRow& row = rows[idx];
      row.r = rs[ri];
      row.tree_index = ti;
      const WeightVector r(rs[ri]);
      row.classifier = classify_gorenstein(trees[ti], r);
      row.depth = fixed_depth ? *fixed_depth : auto_oracle_depth(n, row.classifier);
      row.oracle = gorenstein_oracle(trees[ti], r, row.depth);
      row.agree = verdicts_agree(row.classifier, row.oracle);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace treesg
