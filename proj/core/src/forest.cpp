#include "obfudet/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "obfudet/errors.hpp"
#include "obfudet/rng.hpp"
#include "tree_detail.hpp"

namespace obfudet {

namespace {

// features_per_split distinct ordinals, drawn by partial Fisher-Yates and
// returned sorted so the split tie rule stays ordinal-based.
std::vector<std::uint32_t> draw_feature_subset(Rng& rng, std::size_t dimension, std::size_t count) {
  std::vector<std::uint32_t> pool(dimension);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.index(dimension - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

int RandomForestModel::predict(const FeatureVector& x) const {
  if (trees.empty()) {
    throw ValidationError("forest predict: model has no trees");
  }
  std::size_t votes_for_one = 0;
  for (const auto& tree : trees) {
    votes_for_one += static_cast<std::size_t>(tree.predict(x));
  }
  // Majority vote; an exact tie falls to label 0.
  return 2 * votes_for_one > trees.size() ? 1 : 0;
}

RandomForestModel train_forest(const FeatureMatrix& X, const std::vector<int>& y,
                               const ForestConfig& config) {
  if (config.n_trees < 1) {
    throw ValidationError("train_forest: n_trees must be at least 1");
  }
  if (X.row_count() != y.size() || y.empty()) {
    throw ValidationError("train_forest: features and labels disagree in length");
  }
  for (const int label : y) {
    if (label != 0 && label != 1) {
      throw ValidationError("train_forest: labels must be 0 or 1");
    }
  }
  const std::size_t n = X.row_count();
  const std::size_t requested = config.features_per_split.value_or(static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(X.dimension)))));
  const std::size_t per_split = std::min(std::max<std::size_t>(requested, 1), X.dimension);

  RandomForestModel model;
  model.dimension = X.dimension;
  model.config = config;
  model.trees.reserve(config.n_trees);
  model.bootstrap_samples.reserve(config.n_trees);
  model.feature_subsets.reserve(config.n_trees);

  for (std::size_t t = 0; t < config.n_trees; ++t) {
    // Per-tree seed keeps results independent of training order.
    Rng rng(config.seed + t);

    std::vector<std::size_t> sample(n);
    if (config.bootstrap) {
      for (auto& row : sample) row = rng.index(n);
    } else {
      std::iota(sample.begin(), sample.end(), 0u);
    }

    std::vector<std::vector<std::uint32_t>> drawn;
    detail::FeatureSampler sampler = [&]() {
      if (per_split >= X.dimension) {
        std::vector<std::uint32_t> all(X.dimension);
        std::iota(all.begin(), all.end(), 0u);
        drawn.push_back(all);
        return all;
      }
      drawn.push_back(draw_feature_subset(rng, X.dimension, per_split));
      return drawn.back();
    };
    model.trees.push_back(detail::grow_tree(X, y, sample, config.tree, &sampler));
    model.bootstrap_samples.push_back(std::move(sample));
    model.feature_subsets.push_back(std::move(drawn));
  }
  return model;
}

}  // namespace obfudet
