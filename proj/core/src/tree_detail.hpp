#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "obfudet/tree.hpp"

namespace obfudet::detail {

// Draws the candidate feature set for one split attempt; null means all
// features. Forest training passes a seeded sampler and records the draws.
using FeatureSampler = std::function<std::vector<std::uint32_t>()>;

std::optional<SplitCandidate> best_split_on(const FeatureMatrix& X, const std::vector<int>& y,
                                            const std::vector<std::size_t>& rows,
                                            const std::vector<std::uint32_t>& candidate_features);

DecisionTreeModel grow_tree(const FeatureMatrix& X, const std::vector<int>& y,
                            const std::vector<std::size_t>& rows, const TreeConfig& config,
                            const FeatureSampler* sampler);

}  // namespace obfudet::detail
