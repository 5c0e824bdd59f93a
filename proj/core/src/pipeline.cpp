#include "obfudet/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "obfudet/errors.hpp"

namespace obfudet {

namespace {

std::string utc_now_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[80];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ", parts.tm_year + 1900,
                parts.tm_mon + 1, parts.tm_mday, parts.tm_hour, parts.tm_min, parts.tm_sec);
  return buffer;
}

}  // namespace

std::string_view model_family(const ModelConfig& model) {
  return std::visit(
      [](const auto& m) -> std::string_view {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticConfig>) return "logistic_regression";
        else if constexpr (std::is_same_v<T, SvmConfig>) return "linear_svm";
        else if constexpr (std::is_same_v<T, TreeConfig>) return "decision_tree";
        else if constexpr (std::is_same_v<T, ForestConfig>) return "random_forest";
        else return "majority_baseline";
      },
      model);
}

std::vector<PipelineConfig> default_pipeline_configs(std::uint64_t seed) {
  return {
      default_config_for_family("logistic_regression", seed),
      default_config_for_family("linear_svm", seed),
      default_config_for_family("decision_tree", seed),
      default_config_for_family("random_forest", seed),
  };
}

PipelineConfig default_config_for_family(std::string_view family, std::uint64_t seed) {
  PipelineConfig config;
  config.name = std::string(family);
  config.seed = seed;
  config.smote = SmoteConfig{};
  if (family == "logistic_regression") {
    config.model = LogisticConfig{};
  } else if (family == "linear_svm") {
    config.model = SvmConfig{};
  } else if (family == "decision_tree") {
    config.model = TreeConfig{};
  } else if (family == "random_forest") {
    config.model = ForestConfig{};
  } else if (family == "majority_baseline") {
    config.model = MajorityConfig{};
    config.smote.reset();  // a constant baseline gains nothing from resampling
  } else {
    throw ValidationError("unknown model family: " + std::string(family));
  }
  return config;
}

TrainedPipeline fit_pipeline(const PipelineConfig& config, const LabeledCorpus& corpus) {
  if (corpus.class_counts[0] == 0 || corpus.class_counts[1] == 0) {
    throw ValidationError("fit_pipeline: corpus must contain both classes");
  }

  std::vector<std::vector<std::string>> token_lists;
  std::vector<int> labels;
  token_lists.reserve(corpus.size());
  labels.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    token_lists.push_back(tokenize(doc.text, config.tokenizer));
    labels.push_back(doc.label);
  }

  TrainedPipeline pipeline;
  pipeline.config = config;
  pipeline.tfidf = fit_tfidf(token_lists, config.tfidf_mode);
  FeatureMatrix features = transform_all(pipeline.tfidf, token_lists);

  // Stage seeds derive from the one pipeline seed.
  if (config.smote.has_value()) {
    SmoteConfig smote = *config.smote;
    smote.seed = config.seed + 1;
    pipeline.config.smote = smote;
    ResampledSet resampled = smote_balance(features, labels, smote);
    features = std::move(resampled.features);
    labels = std::move(resampled.labels);
  }

  const std::uint64_t model_seed = config.seed + 2;
  pipeline.classifier = std::visit(
      [&](const auto& m) -> TrainedClassifier {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticConfig>) {
          LogisticConfig hp = m;
          hp.seed = model_seed;
          return train_logistic(features, labels, hp);
        } else if constexpr (std::is_same_v<T, SvmConfig>) {
          SvmConfig hp = m;
          hp.seed = model_seed;
          return train_linear_svm(features, labels, hp);
        } else if constexpr (std::is_same_v<T, TreeConfig>) {
          return train_tree(features, labels, m);
        } else if constexpr (std::is_same_v<T, ForestConfig>) {
          ForestConfig hp = m;
          hp.seed = model_seed;
          return train_forest(features, labels, hp);
        } else {
          return train_majority(labels);
        }
      },
      config.model);
  pipeline.config.model = std::visit(
      [&](auto m) -> ModelConfig {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticConfig> || std::is_same_v<T, SvmConfig> ||
                      std::is_same_v<T, ForestConfig>) {
          m.seed = model_seed;
        }
        return m;
      },
      config.model);

  pipeline.provenance.corpus_fingerprint = corpus_fingerprint(corpus);
  pipeline.provenance.trained_at = utc_now_iso8601();
  return pipeline;
}

Prediction predict_pipeline(const TrainedPipeline& pipeline, std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text, pipeline.config.tokenizer);
  const FeatureVector features = transform_tfidf(pipeline.tfidf, tokens);
  Prediction prediction;
  prediction.label = predict(pipeline.classifier, features);
  if (has_decision_score(pipeline.classifier)) {
    prediction.score = decision_score(pipeline.classifier, features);
  }
  return prediction;
}

}  // namespace obfudet
