#include "obfudet/metrics.hpp"

#include "obfudet/errors.hpp"

namespace obfudet {

ConfusionMatrix confusion_matrix(const std::vector<int>& predictions, const std::vector<int>& truth) {
  if (predictions.size() != truth.size()) {
    throw ValidationError("confusion_matrix: predictions and truth disagree in length");
  }
  if (predictions.empty()) {
    throw ValidationError("confusion_matrix: empty input");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const int p = predictions[i];
    const int t = truth[i];
    if ((p != 0 && p != 1) || (t != 0 && t != 1)) {
      throw ValidationError("confusion_matrix: labels must be 0 or 1");
    }
    if (p == 1 && t == 1) cm.tp += 1;
    else if (p == 0 && t == 0) cm.tn += 1;
    else if (p == 1 && t == 0) cm.fp += 1;
    else cm.fn += 1;
  }
  return cm;
}

MetricsReport compute_metrics(const ConfusionMatrix& cm) {
  const std::int64_t total = cm.total();
  if (total <= 0) {
    throw ValidationError("compute_metrics: empty confusion matrix");
  }
  MetricsReport report;
  report.confusion = cm;
  report.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
  report.precision =
      cm.tp + cm.fp > 0 ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp) : 0.0;
  report.recall =
      cm.tp + cm.fn > 0 ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn) : 0.0;
  const double pr = report.precision + report.recall;
  report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  return report;
}

}  // namespace obfudet
