#include <benchmark/benchmark.h>

#include <vector>

#include "obfudet/cross_validation.hpp"
#include "obfudet/pipeline.hpp"
#include "obfudet/smote.hpp"
#include "obfudet/synth.hpp"
#include "obfudet/text.hpp"
#include "obfudet/tfidf.hpp"
#include "obfudet/tree.hpp"

namespace {

using namespace obfudet;

LabeledCorpus bench_corpus(std::size_t n_docs) {
  SynthConfig config;
  config.n_docs = n_docs;
  config.seed = 1234;
  return generate_synthetic_corpus(config);
}

std::vector<std::vector<std::string>> tokenized(const LabeledCorpus& corpus) {
  std::vector<std::vector<std::string>> docs;
  docs.reserve(corpus.size());
  for (const auto& doc : corpus.documents) docs.push_back(tokenize(doc.text));
  return docs;
}

void BM_Tokenize(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(200);
  for (auto _ : state) {
    for (const auto& doc : corpus.documents) {
      benchmark::DoNotOptimize(tokenize(doc.text));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_Tokenize);

void BM_FitTfIdf(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(static_cast<std::size_t>(state.range(0)));
  const auto docs = tokenized(corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_tfidf(docs));
  }
}
BENCHMARK(BM_FitTfIdf)->Arg(100)->Arg(400);

void BM_TransformAll(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(200);
  const auto docs = tokenized(corpus);
  const TfIdfModel model = fit_tfidf(docs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform_all(model, docs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_TransformAll);

void BM_SmoteBalance(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(200);
  const auto docs = tokenized(corpus);
  const TfIdfModel model = fit_tfidf(docs);
  const FeatureMatrix features = transform_all(model, docs);
  std::vector<int> labels;
  for (const auto& doc : corpus.documents) labels.push_back(doc.label);
  SmoteConfig config;
  config.seed = 9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smote_balance(features, labels, config));
  }
}
BENCHMARK(BM_SmoteBalance);

void BM_TrainTree(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(static_cast<std::size_t>(state.range(0)));
  const auto docs = tokenized(corpus);
  const TfIdfModel model = fit_tfidf(docs);
  const FeatureMatrix features = transform_all(model, docs);
  std::vector<int> labels;
  for (const auto& doc : corpus.documents) labels.push_back(doc.label);
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_tree(features, labels, TreeConfig{}));
  }
}
BENCHMARK(BM_TrainTree)->Arg(100)->Arg(200);

void BM_FitPipelineForest(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(200);
  PipelineConfig config = default_config_for_family("random_forest", 5);
  ForestConfig forest = std::get<ForestConfig>(config.model);
  forest.n_trees = static_cast<std::size_t>(state.range(0));
  config.model = forest;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_pipeline(config, corpus));
  }
}
BENCHMARK(BM_FitPipelineForest)->Arg(10)->Arg(100);

void BM_CrossValidateTree(benchmark::State& state) {
  const LabeledCorpus corpus = bench_corpus(200);
  const PipelineConfig config = default_config_for_family("decision_tree", 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_validate(config, corpus, 5, 5));
  }
}
BENCHMARK(BM_CrossValidateTree);

}  // namespace

BENCHMARK_MAIN();
