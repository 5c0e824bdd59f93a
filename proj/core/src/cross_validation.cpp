#include "obfudet/cross_validation.hpp"

#include <cmath>

#include "obfudet/errors.hpp"

namespace obfudet {

namespace {

void summarize_folds(CvResult& result) {
  const double k = static_cast<double>(result.fold_metrics.size());
  MetricSummary mean;
  for (const auto& fold : result.fold_metrics) {
    mean.accuracy += fold.accuracy;
    mean.precision += fold.precision;
    mean.recall += fold.recall;
    mean.f1 += fold.f1;
  }
  mean.accuracy /= k;
  mean.precision /= k;
  mean.recall /= k;
  mean.f1 /= k;

  MetricSummary variance;
  for (const auto& fold : result.fold_metrics) {
    variance.accuracy += (fold.accuracy - mean.accuracy) * (fold.accuracy - mean.accuracy);
    variance.precision += (fold.precision - mean.precision) * (fold.precision - mean.precision);
    variance.recall += (fold.recall - mean.recall) * (fold.recall - mean.recall);
    variance.f1 += (fold.f1 - mean.f1) * (fold.f1 - mean.f1);
  }
  result.mean = mean;
  result.stddev = MetricSummary{std::sqrt(variance.accuracy / k), std::sqrt(variance.precision / k),
                                std::sqrt(variance.recall / k), std::sqrt(variance.f1 / k)};
}

LabeledCorpus subcorpus(const LabeledCorpus& corpus, const std::vector<std::size_t>& ids) {
  std::vector<std::pair<std::string, int>> records;
  records.reserve(ids.size());
  for (const std::size_t id : ids) {
    records.emplace_back(corpus.documents[id].text, corpus.documents[id].label);
  }
  return make_corpus(std::move(records));
}

MetricsReport evaluate_on(const TrainedPipeline& pipeline, const LabeledCorpus& corpus,
                          const std::vector<std::size_t>& ids) {
  std::vector<int> predictions;
  std::vector<int> truth;
  predictions.reserve(ids.size());
  truth.reserve(ids.size());
  for (const std::size_t id : ids) {
    predictions.push_back(predict_pipeline(pipeline, corpus.documents[id].text).label);
    truth.push_back(corpus.documents[id].label);
  }
  return compute_metrics(confusion_matrix(predictions, truth));
}

CvResult cross_validate_safe(const PipelineConfig& config, const LabeledCorpus& corpus, std::size_t k,
                             std::uint64_t seed) {
  CvResult result;
  result.config = config;
  result.corpus_fingerprint = corpus_fingerprint(corpus);
  result.k = k;
  result.seed = seed;
  result.plan = stratified_k_fold(corpus, k, seed);

  for (std::size_t fold = 0; fold < k; ++fold) {
    std::vector<std::size_t> train_ids = result.plan.train_ids(fold);
    std::vector<std::size_t> test_ids = result.plan.test_ids(fold);

    std::array<std::size_t, 2> train_counts{0, 0};
    for (const std::size_t id : train_ids) {
      train_counts[static_cast<std::size_t>(corpus.documents[id].label)] += 1;
    }
    if (train_counts[0] == 0 || train_counts[1] == 0) {
      throw ValidationError("cross_validate: fold " + std::to_string(fold) +
                            " has single-class training data");
    }

    // The pipeline is refit from scratch on the training split only: the
    // vectorizer never sees held-out text and SMOTE never crosses the split.
    PipelineConfig fold_config = config;
    fold_config.seed = config.seed + fold;
    const LabeledCorpus train_corpus = subcorpus(corpus, train_ids);
    const TrainedPipeline pipeline = fit_pipeline(fold_config, train_corpus);

    result.fold_metrics.push_back(evaluate_on(pipeline, corpus, test_ids));
    result.fold_train_metrics.push_back(evaluate_on(pipeline, corpus, train_ids));
    result.fold_train_ids.push_back(std::move(train_ids));
    result.fold_test_ids.push_back(std::move(test_ids));
  }
  summarize_folds(result);
  return result;
}

// Replication mode for the pre-split ordering: vectorizer fitted on the full
// corpus, SMOTE applied before the split, synthetic rows shuffled into every
// fold. Kept behind an explicit flag because it leaks.
CvResult cross_validate_unsafe(const PipelineConfig& config, const LabeledCorpus& corpus,
                               std::size_t k, std::uint64_t seed) {
  CvResult result;
  result.config = config;
  result.corpus_fingerprint = corpus_fingerprint(corpus);
  result.k = k;
  result.seed = seed;
  result.unsafe_resample_before_split = true;

  std::vector<std::vector<std::string>> token_lists;
  std::vector<int> labels;
  token_lists.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    token_lists.push_back(tokenize(doc.text, config.tokenizer));
    labels.push_back(doc.label);
  }
  const TfIdfModel tfidf = fit_tfidf(token_lists, config.tfidf_mode);
  FeatureMatrix features = transform_all(tfidf, token_lists);

  if (config.smote.has_value()) {
    SmoteConfig smote = *config.smote;
    smote.seed = config.seed + 1;
    result.config.smote = smote;
    ResampledSet resampled = smote_balance(features, labels, smote);
    features = std::move(resampled.features);
    labels = std::move(resampled.labels);
  }

  result.plan = stratified_k_fold(labels, k, seed);
  for (std::size_t fold = 0; fold < k; ++fold) {
    std::vector<std::size_t> train_rows = result.plan.train_ids(fold);
    std::vector<std::size_t> test_rows = result.plan.test_ids(fold);

    FeatureMatrix train_features;
    train_features.dimension = features.dimension;
    std::vector<int> train_labels;
    for (const std::size_t row : train_rows) {
      train_features.rows.push_back(features.rows[row]);
      train_labels.push_back(labels[row]);
    }

    const std::uint64_t model_seed = config.seed + fold + 2;
    TrainedClassifier classifier = std::visit(
        [&](auto hp) -> TrainedClassifier {
          using T = std::decay_t<decltype(hp)>;
          if constexpr (std::is_same_v<T, LogisticConfig>) {
            hp.seed = model_seed;
            return train_logistic(train_features, train_labels, hp);
          } else if constexpr (std::is_same_v<T, SvmConfig>) {
            hp.seed = model_seed;
            return train_linear_svm(train_features, train_labels, hp);
          } else if constexpr (std::is_same_v<T, TreeConfig>) {
            return train_tree(train_features, train_labels, hp);
          } else if constexpr (std::is_same_v<T, ForestConfig>) {
            hp.seed = model_seed;
            return train_forest(train_features, train_labels, hp);
          } else {
            return train_majority(train_labels);
          }
        },
        config.model);

    auto evaluate_rows = [&](const std::vector<std::size_t>& rows) {
      std::vector<int> predictions;
      std::vector<int> truth;
      for (const std::size_t row : rows) {
        predictions.push_back(predict(classifier, features.rows[row]));
        truth.push_back(labels[row]);
      }
      return compute_metrics(confusion_matrix(predictions, truth));
    };
    result.fold_metrics.push_back(evaluate_rows(test_rows));
    result.fold_train_metrics.push_back(evaluate_rows(train_rows));
    result.fold_train_ids.push_back(std::move(train_rows));
    result.fold_test_ids.push_back(std::move(test_rows));
  }
  summarize_folds(result);
  return result;
}

}  // namespace

CvResult cross_validate(const PipelineConfig& config, const LabeledCorpus& corpus, std::size_t k,
                        std::uint64_t seed, const CvOptions& options) {
  if (options.unsafe_resample_before_split) {
    return cross_validate_unsafe(config, corpus, k, seed);
  }
  return cross_validate_safe(config, corpus, k, seed);
}

GridSearchResult grid_search(const std::vector<PipelineConfig>& grid, const LabeledCorpus& corpus,
                             std::size_t k, std::uint64_t seed, const CvOptions& options) {
  if (grid.empty()) {
    throw ValidationError("grid_search: empty grid");
  }
  GridSearchResult result;
  result.all_results.reserve(grid.size());
  for (const auto& config : grid) {
    result.all_results.push_back(cross_validate(config, corpus, k, seed, options));
  }
  for (std::size_t i = 1; i < result.all_results.size(); ++i) {
    const MetricSummary& candidate = result.all_results[i].mean;
    const MetricSummary& incumbent = result.all_results[result.best_index].mean;
    // Highest mean F1; ties break by mean accuracy, then earlier position.
    if (candidate.f1 > incumbent.f1 ||
        (candidate.f1 == incumbent.f1 && candidate.accuracy > incumbent.accuracy)) {
      result.best_index = i;
    }
  }
  result.best_config = grid[result.best_index];
  return result;
}

}  // namespace obfudet
