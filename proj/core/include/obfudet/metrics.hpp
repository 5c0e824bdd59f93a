#pragma once

#include <cstdint>
#include <vector>

namespace obfudet {

// Positive class is label 1 (obfuscated).
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + tn + fp + fn; }

  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion_matrix(const std::vector<int>& predictions, const std::vector<int>& truth);

struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  ConfusionMatrix confusion;

  bool operator==(const MetricsReport&) const = default;
};

// accuracy = (TP+TN)/total, precision = TP/(TP+FP), recall = TP/(TP+FN),
// f1 = 2PR/(P+R). Zero-denominator convention: precision is 0 when TP+FP=0,
// recall is 0 when TP+FN=0, f1 is 0 when P+R=0. Keeps aggregation total on
// degenerate folds.
MetricsReport compute_metrics(const ConfusionMatrix& cm);

}  // namespace obfudet
