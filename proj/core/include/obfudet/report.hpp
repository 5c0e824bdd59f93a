#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "obfudet/cross_validation.hpp"

namespace obfudet {

struct ReportRow {
  std::string model;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  std::vector<double> train_accuracy_per_fold;
  bool unsafe_resample_before_split = false;
};

ReportRow summarize(const CvResult& result);

// Full cross-validation result, one file per config.
void write_cv_result(const CvResult& result, const std::filesystem::path& path);
CvResult read_cv_result(const std::filesystem::path& path);

// report.json plus report.txt under out_dir: a model-by-metric table
// (precision / recall / F1, CV-averaged and labeled as such) and the
// mean-accuracy series for bar charts. Output is deterministic: identical
// inputs produce byte-identical files.
void write_report(const std::vector<CvResult>& results, const std::filesystem::path& out_dir);

// One seed's worth of the resampling-order comparison.
struct LeakageRun {
  std::uint64_t seed = 0;
  MetricSummary safe;        // SMOTE inside training folds only
  MetricSummary unsafe_mode; // SMOTE before the split (leaky replication mode)
};

// leakage_report.json/.txt: side-by-side minority-class recall for the safe
// and unsafe orderings, one row per seed. The unsafe column is explicitly
// labeled; no gate, report only.
void write_leakage_report(const std::vector<LeakageRun>& runs, const std::string& model,
                          const std::filesystem::path& out_dir);

}  // namespace obfudet
