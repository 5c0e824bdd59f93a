#pragma once

// Internal JSON conversions shared by serialization.cpp and report.cpp.
// vendored nlohmann/json stays out of the public headers.

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "obfudet/classifier.hpp"
#include "obfudet/cross_validation.hpp"
#include "obfudet/pipeline.hpp"
#include "obfudet/synth.hpp"
#include "obfudet/tfidf.hpp"

namespace obfudet::jsonio {

using Json = nlohmann::ordered_json;

Json tokenizer_to_json(const TokenizerOptions& options);
TokenizerOptions tokenizer_from_json(const Json& j);

std::string tfidf_mode_name(TfIdfMode mode);
TfIdfMode tfidf_mode_from_name(std::string_view name);

Json smote_to_json(const SmoteConfig& config);
SmoteConfig smote_from_json(const Json& j);

Json model_config_to_json(const ModelConfig& config);
ModelConfig model_config_from_json(const Json& j);

Json pipeline_config_to_json(const PipelineConfig& config);
PipelineConfig pipeline_config_from_json(const Json& j);

Json tfidf_model_to_json(const TfIdfModel& model);
TfIdfModel tfidf_model_from_json(const Json& j);

Json classifier_to_json(const TrainedClassifier& model);
TrainedClassifier classifier_from_json(const Json& j);

Json metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const Json& j);

Json summary_to_json(const MetricSummary& summary);
MetricSummary summary_from_json(const Json& j);

Json cv_result_to_json(const CvResult& result);
CvResult cv_result_from_json(const Json& j);

Json rules_to_json(const std::vector<ObfuscationRule>& rules);
std::vector<ObfuscationRule> rules_from_json(const Json& j);

Json synth_config_to_json(const SynthConfig& config);
SynthConfig synth_config_from_json(const Json& j, const std::filesystem::path& base_dir);

// Versioned file envelope: {"format", "version", "checksum", "payload"}.
// The checksum is FNV-1a over the compact payload dump; load verifies format,
// version, and checksum before handing the payload back.
void write_envelope(const std::filesystem::path& path, std::string_view format, int version,
                    const Json& payload);
Json read_envelope(const std::filesystem::path& path, std::string_view format, int version);

}  // namespace obfudet::jsonio
