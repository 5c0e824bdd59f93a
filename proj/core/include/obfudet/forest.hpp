#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "obfudet/tree.hpp"

namespace obfudet {

struct ForestConfig {
  std::size_t n_trees = 100;
  bool bootstrap = true;
  std::optional<std::size_t> features_per_split;  // absent = ceil(sqrt(dimension))
  TreeConfig tree;
  std::uint64_t seed = 0;

  bool operator==(const ForestConfig&) const = default;
};

struct RandomForestModel {
  std::vector<DecisionTreeModel> trees;
  // Per-tree records of the seeded draws, kept for reproducibility checks.
  std::vector<std::vector<std::size_t>> bootstrap_samples;
  std::vector<std::vector<std::vector<std::uint32_t>>> feature_subsets;  // per tree, per split
  std::size_t dimension = 0;
  ForestConfig config;

  // Majority vote across trees; ties go to label 0.
  int predict(const FeatureVector& x) const;

  bool operator==(const RandomForestModel&) const = default;
};

// Each tree trains on a seeded bootstrap resample (input size, with
// replacement) and draws a fresh seeded feature subset at every split.
// Per-tree seeds are config.seed + tree index, so results are independent of
// training order.
RandomForestModel train_forest(const FeatureMatrix& X, const std::vector<int>& y,
                               const ForestConfig& config = {});

}  // namespace obfudet
