#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "obfudet/tfidf.hpp"

namespace obfudet {

struct TreeConfig {
  std::optional<std::size_t> max_depth;  // absent = unbounded
  std::size_t min_samples_split = 2;

  bool operator==(const TreeConfig&) const = default;
};

// 1 - sum p_c^2 over the two classes. Counts must not both be zero.
double gini_impurity(std::int64_t count0, std::int64_t count1);

struct SplitCandidate {
  std::uint32_t feature = 0;
  double threshold = 0.0;
  double weighted_impurity = 0.0;

  bool operator==(const SplitCandidate&) const = default;
};

// Exhaustive scan over candidate features and midpoints between consecutive
// distinct sorted values, minimizing count-weighted child Gini. Ties break
// toward the lower feature ordinal, then the lower threshold. Empty result
// when every candidate feature is constant across the samples; a best split
// with zero impurity reduction is still returned, which is what lets an
// unbounded tree memorize XOR-shaped conflict-free data.
std::optional<SplitCandidate> best_split(const FeatureMatrix& X, const std::vector<int>& y,
                                         const std::vector<std::uint32_t>& candidate_features);

struct TreeNode {
  std::int32_t left = -1;  // -1 on leaves
  std::int32_t right = -1;
  std::uint32_t feature = 0;
  double threshold = 0.0;
  int label = 0;  // leaf majority label, ties to 0
  std::array<std::int64_t, 2> class_counts{0, 0};

  bool is_leaf() const { return left < 0; }

  bool operator==(const TreeNode&) const = default;
};

struct DecisionTreeModel {
  std::vector<TreeNode> nodes;  // node 0 is the root
  std::size_t dimension = 0;
  TreeConfig config;

  // Root-to-leaf descent; goes left iff feature value <= threshold.
  int predict(const FeatureVector& x) const;

  bool operator==(const DecisionTreeModel&) const = default;
};

// Recursive greedy CART growth. A node becomes a leaf when pure, when the
// depth bound is hit, when it holds fewer than min_samples_split samples, or
// when no candidate split exists. Unbounded growth on conflict-free data
// reproduces every training label.
DecisionTreeModel train_tree(const FeatureMatrix& X, const std::vector<int>& y,
                             const TreeConfig& config = {});

}  // namespace obfudet
