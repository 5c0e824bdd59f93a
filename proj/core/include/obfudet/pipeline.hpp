#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obfudet/classifier.hpp"
#include "obfudet/corpus.hpp"
#include "obfudet/smote.hpp"
#include "obfudet/text.hpp"
#include "obfudet/tfidf.hpp"

namespace obfudet {

struct MajorityConfig {
  bool operator==(const MajorityConfig&) const = default;
};

using ModelConfig = std::variant<LogisticConfig, SvmConfig, TreeConfig, ForestConfig, MajorityConfig>;

// Family identifier used in config files and reports.
std::string_view model_family(const ModelConfig& model);

struct PipelineConfig {
  std::string name;  // label used in reports and output filenames
  TokenizerOptions tokenizer;
  TfIdfMode tfidf_mode = TfIdfMode::kRaw;
  std::optional<SmoteConfig> smote;  // absent = no resampling
  ModelConfig model = TreeConfig{};
  std::uint64_t seed = 0;
};

// The four default families (logistic regression, linear SVM, decision tree,
// random forest) with stock hyperparameters, SMOTE on, sharing one seed.
std::vector<PipelineConfig> default_pipeline_configs(std::uint64_t seed);
PipelineConfig default_config_for_family(std::string_view family, std::uint64_t seed);

struct PipelineProvenance {
  std::string corpus_fingerprint;
  std::string trained_at;  // ISO-8601 UTC wall clock; informational only
};

struct TrainedPipeline {
  TfIdfModel tfidf;
  TrainedClassifier classifier;
  PipelineConfig config;
  PipelineProvenance provenance;
};

// tokenize -> fit TF-IDF -> transform -> optional SMOTE on the transformed
// training data -> train classifier. Stage seeds derive from config.seed
// (SMOTE gets seed+1, the model gets seed+2), so one seed pins the whole fit.
// Requires both classes present.
TrainedPipeline fit_pipeline(const PipelineConfig& config, const LabeledCorpus& corpus);

struct Prediction {
  int label = 0;
  std::optional<double> score;  // present for linear families
};

// tokenize -> transform with the fitted vocabulary -> predict. Fully-OOV text
// becomes the zero vector (label 0 for a zero-score linear model).
Prediction predict_pipeline(const TrainedPipeline& pipeline, std::string_view text);

// Self-describing versioned file with a payload checksum; load verifies both
// and reproduces identical predictions for every input.
void save_pipeline(const TrainedPipeline& pipeline, const std::filesystem::path& path);
TrainedPipeline load_pipeline(const std::filesystem::path& path);

// JSON config file mirroring PipelineConfig field-for-field; absent fields
// fall back to family defaults.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
std::string pipeline_config_json(const PipelineConfig& config);

}  // namespace obfudet
