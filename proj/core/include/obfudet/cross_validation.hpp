#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obfudet/corpus.hpp"
#include "obfudet/metrics.hpp"
#include "obfudet/pipeline.hpp"

namespace obfudet {

struct MetricSummary {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const MetricSummary&) const = default;
};

struct CvOptions {
  // Replication-study mode: fit the vectorizer on the full corpus and apply
  // SMOTE before splitting, so synthetic near-copies of training rows land in
  // test folds. Inflates scores; off by default.
  bool unsafe_resample_before_split = false;
};

struct CvResult {
  std::vector<MetricsReport> fold_metrics;        // held-out fold
  std::vector<MetricsReport> fold_train_metrics;  // training split of the same fold
  MetricSummary mean;
  MetricSummary stddev;  // population standard deviation over folds
  FoldPlan plan;
  std::vector<std::vector<std::size_t>> fold_train_ids;
  std::vector<std::vector<std::size_t>> fold_test_ids;
  PipelineConfig config;
  std::string corpus_fingerprint;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  bool unsafe_resample_before_split = false;
};

// Stratified k-fold protocol: for each fold the full pipeline is refit on the
// training split only (vectorizer included, SMOTE included per the leakage
// rule) and evaluated on the held-out fold, so every document is tested
// exactly once. Per-fold pipeline seeds are config.seed + fold index.
CvResult cross_validate(const PipelineConfig& config, const LabeledCorpus& corpus, std::size_t k,
                        std::uint64_t seed, const CvOptions& options = {});

struct GridSearchResult {
  std::size_t best_index = 0;
  PipelineConfig best_config;
  std::vector<CvResult> all_results;

  const CvResult& best_result() const { return all_results[best_index]; }
};

// Evaluates every config with cross_validate and selects the highest mean F1;
// ties break by higher mean accuracy, then earlier grid position.
GridSearchResult grid_search(const std::vector<PipelineConfig>& grid, const LabeledCorpus& corpus,
                             std::size_t k, std::uint64_t seed, const CvOptions& options = {});

}  // namespace obfudet
