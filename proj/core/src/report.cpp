#include "obfudet/report.hpp"

#include <cstdio>
#include <fstream>

#include "obfudet/errors.hpp"
#include "obfudet/version.hpp"
#include "json_convert.hpp"

namespace obfudet {

namespace {

constexpr int kFileVersion = 1;

std::string display_name(const std::string& family, bool unsafe_mode) {
  std::string name;
  if (family == "logistic_regression") name = "Logistic Regression";
  else if (family == "linear_svm") name = "SVM";
  else if (family == "decision_tree") name = "Decision Tree";
  else if (family == "random_forest") name = "Random Forest";
  else if (family == "majority_baseline") name = "Majority Baseline";
  else name = family;
  if (unsafe_mode) name += " [UNSAFE: resampled before split]";
  return name;
}

std::string fixed4(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

}  // namespace

ReportRow summarize(const CvResult& result) {
  ReportRow row;
  row.model = result.config.name;
  row.precision = result.mean.precision;
  row.recall = result.mean.recall;
  row.f1 = result.mean.f1;
  row.mean_accuracy = result.mean.accuracy;
  row.std_accuracy = result.stddev.accuracy;
  for (const auto& fold : result.fold_train_metrics) {
    row.train_accuracy_per_fold.push_back(fold.accuracy);
  }
  row.unsafe_resample_before_split = result.unsafe_resample_before_split;
  return row;
}

void write_cv_result(const CvResult& result, const std::filesystem::path& path) {
  jsonio::write_envelope(path, "obfudet-cv-result", kFileVersion, jsonio::cv_result_to_json(result));
}

CvResult read_cv_result(const std::filesystem::path& path) {
  return jsonio::cv_result_from_json(jsonio::read_envelope(path, "obfudet-cv-result", kFileVersion));
}

void write_report(const std::vector<CvResult>& results, const std::filesystem::path& out_dir) {
  if (results.empty()) {
    throw ValidationError("write_report: no results");
  }
  std::filesystem::create_directories(out_dir);

  jsonio::Json payload;
  payload["toolkit_version"] = kVersion;
  payload["metric_note"] = "precision/recall/F1 are cross-validation means over test folds";
  payload["corpus_fingerprint"] = results.front().corpus_fingerprint;
  payload["k"] = results.front().k;
  payload["seed"] = results.front().seed;

  jsonio::Json table = jsonio::Json::array();
  jsonio::Json bars = jsonio::Json::array();
  for (const auto& result : results) {
    const ReportRow row = summarize(result);
    const std::string label =
        display_name(std::string(model_family(result.config.model)), row.unsafe_resample_before_split);
    jsonio::Json entry;
    entry["model"] = row.model;
    entry["display_name"] = label;
    entry["precision"] = row.precision;
    entry["recall"] = row.recall;
    entry["f1"] = row.f1;
    entry["mean_accuracy"] = row.mean_accuracy;
    entry["std_accuracy"] = row.std_accuracy;
    entry["train_accuracy_per_fold"] = row.train_accuracy_per_fold;
    entry["unsafe_resample_before_split"] = row.unsafe_resample_before_split;
    table.push_back(entry);
    bars.push_back(jsonio::Json{{"model", label}, {"mean_accuracy", row.mean_accuracy}});
  }
  payload["table"] = table;
  payload["bar_chart"] = bars;
  jsonio::write_envelope(out_dir / "report.json", "obfudet-report", kFileVersion, payload);

  // Plain-text companion: the model-by-metric table plus the bar-chart series.
  std::string text;
  text += "Cross-validated model evaluations (k=" + std::to_string(results.front().k) +
          ", seed=" + std::to_string(results.front().seed) + ")\n";
  text += "Corpus fingerprint: " + results.front().corpus_fingerprint + "\n";
  text += "Precision/recall/F1 are cross-validation means over test folds.\n\n";

  std::size_t name_width = 5;
  std::vector<std::pair<std::string, ReportRow>> rows;
  for (const auto& result : results) {
    ReportRow row = summarize(result);
    std::string label =
        display_name(std::string(model_family(result.config.model)), row.unsafe_resample_before_split);
    name_width = std::max(name_width, label.size());
    rows.emplace_back(std::move(label), std::move(row));
  }
  auto pad = [&](const std::string& s) {
    std::string out = s;
    out.resize(name_width + 2, ' ');
    return out;
  };
  text += pad("Model") + "Precision  Recall  F1-Score\n";
  for (const auto& [label, row] : rows) {
    text += pad(label) + fixed4(row.precision) + "     " + fixed4(row.recall) + "  " +
            fixed4(row.f1) + "\n";
  }
  text += "\nMean cross-validation accuracy\n";
  for (const auto& [label, row] : rows) {
    text += pad(label) + fixed4(row.mean_accuracy) + " (std " + fixed4(row.std_accuracy) + ")\n";
  }
  write_text_file(out_dir / "report.txt", text);
}

void write_leakage_report(const std::vector<LeakageRun>& runs, const std::string& model,
                          const std::filesystem::path& out_dir) {
  if (runs.empty()) {
    throw ValidationError("write_leakage_report: no runs");
  }
  std::filesystem::create_directories(out_dir);

  jsonio::Json payload;
  payload["toolkit_version"] = kVersion;
  payload["model"] = model;
  payload["safe_ordering"] = "SMOTE applied inside training folds only (default)";
  payload["unsafe_ordering"] =
      "UNSAFE --unsafe-resample-before-split: SMOTE applied before the fold split; "
      "synthetic near-copies of training rows leak into test folds";
  jsonio::Json rows = jsonio::Json::array();
  double safe_sum = 0.0;
  double unsafe_sum = 0.0;
  for (const auto& run : runs) {
    rows.push_back(jsonio::Json{{"seed", run.seed},
                                {"safe_minority_recall", run.safe.recall},
                                {"unsafe_minority_recall", run.unsafe_mode.recall},
                                {"safe_f1", run.safe.f1},
                                {"unsafe_f1", run.unsafe_mode.f1}});
    safe_sum += run.safe.recall;
    unsafe_sum += run.unsafe_mode.recall;
  }
  payload["runs"] = rows;
  payload["mean_safe_minority_recall"] = safe_sum / static_cast<double>(runs.size());
  payload["mean_unsafe_minority_recall"] = unsafe_sum / static_cast<double>(runs.size());
  jsonio::write_envelope(out_dir / "leakage_report.json", "obfudet-leakage-report", kFileVersion,
                         payload);

  std::string text;
  text += "Resampling-order comparison: " + model + "\n";
  text += "safe   = SMOTE inside training folds only (default)\n";
  text += "UNSAFE = --unsafe-resample-before-split: SMOTE before the fold split;\n";
  text += "         synthetic near-copies of training rows leak into test folds\n\n";
  text += "seed        safe recall  UNSAFE recall\n";
  for (const auto& run : runs) {
    char line[96];
    std::snprintf(line, sizeof(line), "%-10llu  %s       %s\n",
                  static_cast<unsigned long long>(run.seed), fixed4(run.safe.recall).c_str(),
                  fixed4(run.unsafe_mode.recall).c_str());
    text += line;
  }
  text += "\nmean        " + fixed4(safe_sum / static_cast<double>(runs.size())) + "       " +
          fixed4(unsafe_sum / static_cast<double>(runs.size())) + "\n";
  write_text_file(out_dir / "leakage_report.txt", text);
}

}  // namespace obfudet
