#include "obfudet/smote.hpp"

#include <algorithm>
#include <cmath>

#include "obfudet/errors.hpp"
#include "obfudet/rng.hpp"

namespace obfudet {

namespace {

double squared_distance(const FeatureVector& a, const FeatureVector& b) {
  double sum = 0.0;
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ae.size() || j < be.size()) {
    double diff = 0.0;
    if (j >= be.size() || (i < ae.size() && ae[i].first < be[j].first)) {
      diff = ae[i].second;
      ++i;
    } else if (i >= ae.size() || be[j].first < ae[i].first) {
      diff = -be[j].second;
      ++j;
    } else {
      diff = ae[i].second - be[j].second;
      ++i;
      ++j;
    }
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

FeatureVector interpolate(const FeatureVector& x_i, const FeatureVector& x_j, double lambda) {
  if (x_i.dimension() != x_j.dimension()) {
    throw ValidationError("interpolate: dimension mismatch");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("interpolate: lambda must lie in [0, 1]");
  }
  if (lambda == 0.0) return x_i;
  if (lambda == 1.0) return x_j;

  FeatureVector out(x_i.dimension());
  const auto& ie = x_i.entries();
  const auto& je = x_j.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ie.size() || j < je.size()) {
    std::uint32_t column = 0;
    double a = 0.0;
    double b = 0.0;
    if (j >= je.size() || (i < ie.size() && ie[i].first < je[j].first)) {
      column = ie[i].first;
      a = ie[i].second;
      ++i;
    } else if (i >= ie.size() || je[j].first < ie[i].first) {
      column = je[j].first;
      b = je[j].second;
      ++j;
    } else {
      column = ie[i].first;
      a = ie[i].second;
      b = je[j].second;
      ++i;
      ++j;
    }
    // Clamp so the segment invariant min <= value <= max survives rounding.
    const double value = std::clamp(a + lambda * (b - a), std::min(a, b), std::max(a, b));
    out.push_entry(column, value);
  }
  return out;
}

std::vector<std::size_t> k_nearest_minority(std::size_t query_index, const FeatureMatrix& minority_rows,
                                            std::size_t k) {
  const std::size_t m = minority_rows.row_count();
  if (m < 2) {
    throw ValidationError("k_nearest_minority requires at least 2 minority rows");
  }
  if (query_index >= m) {
    throw ValidationError("k_nearest_minority: query index out of range");
  }
  if (k == 0) {
    throw ValidationError("k_nearest_minority: k must be positive");
  }
  std::vector<std::pair<double, std::size_t>> candidates;
  candidates.reserve(m - 1);
  for (std::size_t row = 0; row < m; ++row) {
    if (row == query_index) continue;
    candidates.emplace_back(squared_distance(minority_rows.rows[query_index], minority_rows.rows[row]), row);
  }
  // Ties break toward the lower ordinal, which the pair ordering provides.
  std::sort(candidates.begin(), candidates.end());
  const std::size_t take = std::min(k, m - 1);
  std::vector<std::size_t> neighbors;
  neighbors.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    neighbors.push_back(candidates[i].second);
  }
  return neighbors;
}

ResampledSet smote_balance(const FeatureMatrix& features, const std::vector<int>& labels,
                           const SmoteConfig& config) {
  if (features.row_count() != labels.size()) {
    throw ValidationError("smote_balance: features and labels disagree in length");
  }
  if (config.k_neighbors < 1) {
    throw ValidationError("smote_balance: k_neighbors must be at least 1");
  }
  if (!(config.target_ratio > 0.0 && config.target_ratio <= 1.0)) {
    throw ValidationError("smote_balance: target_ratio must lie in (0, 1]");
  }
  std::array<std::size_t, 2> counts{0, 0};
  for (const int label : labels) {
    if (label != 0 && label != 1) {
      throw ValidationError("smote_balance: labels must be 0 or 1");
    }
    counts[static_cast<std::size_t>(label)] += 1;
  }
  if (counts[0] == 0 || counts[1] == 0) {
    throw ValidationError("smote_balance: both classes must be present");
  }

  const int minority_label = counts[1] <= counts[0] ? 1 : 0;
  const std::size_t minority_count = counts[static_cast<std::size_t>(minority_label)];
  const std::size_t majority_count = counts[static_cast<std::size_t>(1 - minority_label)];

  ResampledSet out;
  out.minority_label = minority_label;
  out.features.dimension = features.dimension;
  out.features.rows = features.rows;  // originals unmodified, in input order
  out.labels = labels;
  out.synthetic_flags.assign(labels.size(), false);

  const double want = std::ceil(config.target_ratio * static_cast<double>(majority_count));
  const std::size_t target = static_cast<std::size_t>(want);
  const std::size_t synthetic_count = target > minority_count ? target - minority_count : 0;
  if (synthetic_count == 0) {
    return out;
  }

  // Rows of the minority class, with their original ordinals.
  std::vector<std::size_t> minority_ids;
  minority_ids.reserve(minority_count);
  for (std::size_t row = 0; row < labels.size(); ++row) {
    if (labels[row] == minority_label) minority_ids.push_back(row);
  }

  Rng rng(config.seed);

  if (minority_count == 1) {
    // Degenerate class: duplicate the lone row so folds stay trainable.
    out.duplicated_lone_minority = true;
    const std::size_t lone = minority_ids.front();
    for (std::size_t s = 0; s < synthetic_count; ++s) {
      out.features.rows.push_back(features.rows[lone]);
      out.labels.push_back(minority_label);
      out.synthetic_flags.push_back(true);
      out.synthetic_records.push_back(SyntheticRecord{lone, lone, 0.0});
    }
    return out;
  }

  FeatureMatrix minority_matrix;
  minority_matrix.dimension = features.dimension;
  minority_matrix.rows.reserve(minority_count);
  for (const std::size_t row : minority_ids) {
    minority_matrix.rows.push_back(features.rows[row]);
  }
  const std::size_t k = std::min(config.k_neighbors, minority_count - 1);
  std::vector<std::vector<std::size_t>> neighbors(minority_count);
  for (std::size_t i = 0; i < minority_count; ++i) {
    neighbors[i] = k_nearest_minority(i, minority_matrix, k);
  }

  for (std::size_t s = 0; s < synthetic_count; ++s) {
    const std::size_t i = rng.index(minority_count);
    const std::size_t j = neighbors[i][rng.index(neighbors[i].size())];
    const double lambda = rng.uniform01();
    out.features.rows.push_back(interpolate(minority_matrix.rows[i], minority_matrix.rows[j], lambda));
    out.labels.push_back(minority_label);
    out.synthetic_flags.push_back(true);
    out.synthetic_records.push_back(SyntheticRecord{minority_ids[i], minority_ids[j], lambda});
  }
  return out;
}

}  // namespace obfudet
