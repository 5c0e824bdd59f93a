#include "obfudet/tree.hpp"

#include <algorithm>
#include <numeric>

#include "obfudet/errors.hpp"
#include "tree_detail.hpp"

namespace obfudet {

double gini_impurity(std::int64_t count0, std::int64_t count1) {
  if (count0 < 0 || count1 < 0) {
    throw ValidationError("gini_impurity: counts must be non-negative");
  }
  const std::int64_t total = count0 + count1;
  if (total == 0) {
    throw ValidationError("gini_impurity: counts must not both be zero");
  }
  const double p0 = static_cast<double>(count0) / static_cast<double>(total);
  const double p1 = static_cast<double>(count1) / static_cast<double>(total);
  return 1.0 - p0 * p0 - p1 * p1;
}

namespace detail {

std::optional<SplitCandidate> best_split_on(const FeatureMatrix& X, const std::vector<int>& y,
                                            const std::vector<std::size_t>& rows,
                                            const std::vector<std::uint32_t>& candidate_features) {
  const std::size_t n = rows.size();
  if (n < 2) {
    throw ValidationError("best_split requires at least 2 samples");
  }
  std::int64_t parent0 = 0;
  std::int64_t parent1 = 0;
  for (const std::size_t row : rows) {
    (y[row] == 0 ? parent0 : parent1) += 1;
  }

  std::optional<SplitCandidate> best;
  std::vector<std::pair<double, int>> column(n);  // (value, label), sorted per feature
  for (const std::uint32_t feature : candidate_features) {
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = {X.rows[rows[i]].value_at(feature), y[rows[i]]};
    }
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::int64_t left0 = 0;
    std::int64_t left1 = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      (column[i].second == 0 ? left0 : left1) += 1;
      if (column[i].first == column[i + 1].first) continue;  // not a boundary
      const double threshold = column[i].first + 0.5 * (column[i + 1].first - column[i].first);
      const std::int64_t left_n = static_cast<std::int64_t>(i) + 1;
      const std::int64_t right_n = static_cast<std::int64_t>(n) - left_n;
      const double weighted =
          (static_cast<double>(left_n) * gini_impurity(left0, left1) +
           static_cast<double>(right_n) * gini_impurity(parent0 - left0, parent1 - left1)) /
          static_cast<double>(n);
      // Strict improvement keeps the first of any tie: candidate features are
      // visited in ascending ordinal and thresholds in ascending value.
      if (!best || weighted < best->weighted_impurity) {
        best = SplitCandidate{feature, threshold, weighted};
      }
    }
  }
  // Zero-reduction splits are still returned: on conflict-free data an impure
  // node whose best split leaves impurity unchanged (XOR-shaped regions) must
  // split anyway or the tree cannot memorize. Absence means every candidate
  // feature is constant across the node.
  return best;
}

namespace {

std::int32_t grow_node(const FeatureMatrix& X, const std::vector<int>& y,
                       std::vector<std::size_t> rows, std::size_t depth, const TreeConfig& config,
                       const FeatureSampler* sampler, const std::vector<std::uint32_t>& all_features,
                       std::vector<TreeNode>& nodes) {
  TreeNode node;
  for (const std::size_t row : rows) {
    node.class_counts[static_cast<std::size_t>(y[row])] += 1;
  }
  // Majority label; ties fall to 0.
  node.label = node.class_counts[1] > node.class_counts[0] ? 1 : 0;

  const bool pure = node.class_counts[0] == 0 || node.class_counts[1] == 0;
  const bool depth_capped = config.max_depth.has_value() && depth >= *config.max_depth;
  const bool too_small = rows.size() < std::max<std::size_t>(config.min_samples_split, 2);

  std::optional<SplitCandidate> split;
  if (!pure && !depth_capped && !too_small) {
    const std::vector<std::uint32_t> candidates = sampler ? (*sampler)() : all_features;
    split = best_split_on(X, y, rows, candidates);
  }
  const std::int32_t index = static_cast<std::int32_t>(nodes.size());
  nodes.push_back(node);
  if (!split) {
    return index;  // leaf
  }

  std::vector<std::size_t> left_rows;
  std::vector<std::size_t> right_rows;
  for (const std::size_t row : rows) {
    if (X.rows[row].value_at(split->feature) <= split->threshold) {
      left_rows.push_back(row);
    } else {
      right_rows.push_back(row);
    }
  }
  rows.clear();
  rows.shrink_to_fit();

  nodes[index].feature = split->feature;
  nodes[index].threshold = split->threshold;
  const std::int32_t left = grow_node(X, y, std::move(left_rows), depth + 1, config, sampler,
                                      all_features, nodes);
  nodes[index].left = left;
  const std::int32_t right = grow_node(X, y, std::move(right_rows), depth + 1, config, sampler,
                                       all_features, nodes);
  nodes[index].right = right;
  return index;
}

}  // namespace

DecisionTreeModel grow_tree(const FeatureMatrix& X, const std::vector<int>& y,
                            const std::vector<std::size_t>& rows, const TreeConfig& config,
                            const FeatureSampler* sampler) {
  DecisionTreeModel model;
  model.dimension = X.dimension;
  model.config = config;
  std::vector<std::uint32_t> all_features(X.dimension);
  std::iota(all_features.begin(), all_features.end(), 0u);
  grow_node(X, y, rows, 0, config, sampler, all_features, model.nodes);
  return model;
}

}  // namespace detail

std::optional<SplitCandidate> best_split(const FeatureMatrix& X, const std::vector<int>& y,
                                         const std::vector<std::uint32_t>& candidate_features) {
  if (X.row_count() != y.size()) {
    throw ValidationError("best_split: features and labels disagree in length");
  }
  std::vector<std::size_t> rows(X.row_count());
  std::iota(rows.begin(), rows.end(), 0u);
  return detail::best_split_on(X, y, rows, candidate_features);
}

int DecisionTreeModel::predict(const FeatureVector& x) const {
  if (x.dimension() != dimension) {
    throw ValidationError("tree predict: dimension mismatch");
  }
  std::size_t index = 0;
  while (!nodes[index].is_leaf()) {
    const TreeNode& node = nodes[index];
    index = static_cast<std::size_t>(x.value_at(node.feature) <= node.threshold ? node.left
                                                                                : node.right);
  }
  return nodes[index].label;
}

DecisionTreeModel train_tree(const FeatureMatrix& X, const std::vector<int>& y,
                             const TreeConfig& config) {
  if (X.row_count() != y.size() || y.empty()) {
    throw ValidationError("train_tree: features and labels disagree in length");
  }
  for (const int label : y) {
    if (label != 0 && label != 1) {
      throw ValidationError("train_tree: labels must be 0 or 1");
    }
  }
  std::vector<std::size_t> rows(X.row_count());
  std::iota(rows.begin(), rows.end(), 0u);
  return detail::grow_tree(X, y, rows, config, nullptr);
}

}  // namespace obfudet
