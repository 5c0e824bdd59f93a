#pragma once

#include <cstdint>
#include <vector>

#include "obfudet/tfidf.hpp"

namespace obfudet {

struct SmoteConfig {
  std::size_t k_neighbors = 5;  // clamped to minority size - 1
  double target_ratio = 1.0;    // minority/majority count ratio after resampling, in (0, 1]
  std::uint64_t seed = 0;

  bool operator==(const SmoteConfig&) const = default;
};

// Provenance of one synthetic row: indices into the input matrix plus the
// interpolation coefficient.
struct SyntheticRecord {
  std::size_t base_row = 0;
  std::size_t neighbor_row = 0;
  double lambda = 0.0;
};

struct ResampledSet {
  FeatureMatrix features;  // originals unmodified, in input order, then synthetics
  std::vector<int> labels;
  std::vector<bool> synthetic_flags;
  std::vector<SyntheticRecord> synthetic_records;  // one per synthetic row
  int minority_label = 0;
  // Minority class had a single row; synthetics are exact duplicates of it.
  bool duplicated_lone_minority = false;
};

// x_i + lambda * (x_j - x_i), componentwise, clamped into
// [min(x_i, x_j), max(x_i, x_j)] so the segment invariant holds exactly under
// floating point. lambda in [0, 1]; dimensions must match.
FeatureVector interpolate(const FeatureVector& x_i, const FeatureVector& x_j, double lambda);

// The k rows (excluding the query) with smallest Euclidean distance to the
// query row. k is clamped to minority size - 1; ties break toward the lower
// ordinal. Requires at least 2 rows.
std::vector<std::size_t> k_nearest_minority(std::size_t query_index, const FeatureMatrix& minority_rows,
                                            std::size_t k);

// Synthetic count is ceil(target_ratio * majority) - minority, floored at
// zero. Each synthetic draws a minority row, one of its k nearest minority
// neighbors, and a lambda in [0, 1), all from the seeded generator.
//
// Leakage rule (toolkit-wide): inside cross-validation this runs on training
// folds only; resampling before the split leaks synthetic near-copies into
// test folds.
ResampledSet smote_balance(const FeatureMatrix& features, const std::vector<int>& labels,
                           const SmoteConfig& config);

}  // namespace obfudet
