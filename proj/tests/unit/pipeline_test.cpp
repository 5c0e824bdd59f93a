#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "obfudet/errors.hpp"
#include "obfudet/pipeline.hpp"
#include "obfudet/rng.hpp"
#include "obfudet/text.hpp"

using namespace obfudet;
namespace fs = std::filesystem;

namespace {

// Four documents per class with disjoint vocabularies; a single split on any
// class-1 term is enough for a tree.
LabeledCorpus disjoint_vocab_corpus() {
  return make_corpus({
      {"alpha beta", 0},
      {"alpha gamma", 0},
      {"beta delta", 0},
      {"gamma delta", 0},
      {"zeta eta", 1},
      {"zeta theta", 1},
      {"eta iota", 1},
      {"theta iota", 1},
  });
}

PipelineConfig tree_config(std::uint64_t seed) {
  PipelineConfig config;
  config.name = "tree";
  config.model = TreeConfig{};
  config.seed = seed;
  return config;
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "obfudet_pipeline_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string random_text(Rng& rng) {
  static const std::vector<std::string> pool = {"alpha", "beta", "gamma",  "delta", "zeta",
                                                "eta",   "iota", "mj1nga", "zzz",   "w3w3"};
  std::ostringstream out;
  const std::size_t words = 1 + rng.index(5);
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) out << ' ';
    out << pool[rng.index(pool.size())];
  }
  return out.str();
}

}  // namespace

TEST_CASE("fit_pipeline: disjoint vocabularies train to accuracy 1.0") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  const TrainedPipeline pipeline = fit_pipeline(tree_config(4), corpus);
  for (const auto& doc : corpus.documents) {
    CHECK(predict_pipeline(pipeline, doc.text).label == doc.label);
  }
  CHECK(pipeline.provenance.corpus_fingerprint == corpus_fingerprint(corpus));
}

TEST_CASE("fit_pipeline: SMOTE on a balanced corpus changes nothing") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  PipelineConfig plain = tree_config(9);
  PipelineConfig resampled = tree_config(9);
  resampled.smote = SmoteConfig{};  // target ratio 1.0 on 4/4 is a no-op

  const TrainedPipeline a = fit_pipeline(plain, corpus);
  const TrainedPipeline b = fit_pipeline(resampled, corpus);
  REQUIRE(std::holds_alternative<DecisionTreeModel>(a.classifier));
  REQUIRE(std::holds_alternative<DecisionTreeModel>(b.classifier));
  CHECK(std::get<DecisionTreeModel>(a.classifier) == std::get<DecisionTreeModel>(b.classifier));
}

TEST_CASE("fit_pipeline: single-class corpus rejected") {
  const LabeledCorpus corpus = make_corpus({{"moja", 0}, {"mbili", 0}});
  CHECK_THROWS_AS(fit_pipeline(tree_config(0), corpus), ValidationError);
}

TEST_CASE("fit_pipeline: vocabulary never leaves the training corpus") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  const TrainedPipeline pipeline = fit_pipeline(tree_config(1), corpus);
  std::set<std::string> training_tokens;
  for (const auto& doc : corpus.documents) {
    for (const auto& token : tokenize(doc.text)) training_tokens.insert(token);
  }
  for (const auto& term : pipeline.tfidf.vocabulary.terms) {
    CHECK(training_tokens.count(term) == 1);
  }
}

TEST_CASE("predict_pipeline: fully-OOV text and the zero linear model fall to label 0") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  PipelineConfig config = tree_config(2);
  LogisticConfig logistic;
  logistic.epochs = 0;  // stays at the zero model
  config.model = logistic;
  config.name = "zero_logistic";
  const TrainedPipeline pipeline = fit_pipeline(config, corpus);
  const Prediction prediction = predict_pipeline(pipeline, "totally unseen words");
  CHECK(prediction.label == 0);
  REQUIRE(prediction.score.has_value());
  CHECK(*prediction.score == 0.0);
}

TEST_CASE("predict_pipeline: deterministic and memorizing for the unbounded tree") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  const TrainedPipeline pipeline = fit_pipeline(tree_config(3), corpus);
  const Prediction first = predict_pipeline(pipeline, corpus.documents[5].text);
  const Prediction second = predict_pipeline(pipeline, corpus.documents[5].text);
  CHECK(first.label == second.label);
  CHECK(first.label == corpus.documents[5].label);
}

TEST_CASE("fit_pipeline: refit with the same seed reproduces the model") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  PipelineConfig config = tree_config(8);
  ForestConfig forest;
  forest.n_trees = 7;
  config.model = forest;
  config.name = "forest";
  const TrainedPipeline a = fit_pipeline(config, corpus);
  const TrainedPipeline b = fit_pipeline(config, corpus);
  REQUIRE(std::holds_alternative<RandomForestModel>(a.classifier));
  CHECK(std::get<RandomForestModel>(a.classifier) == std::get<RandomForestModel>(b.classifier));
}

TEST_CASE("save/load round-trip preserves predictions and weights") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  PipelineConfig config = tree_config(10);
  config.smote = SmoteConfig{};
  LogisticConfig logistic;
  config.model = logistic;
  config.name = "logistic";
  const TrainedPipeline pipeline = fit_pipeline(config, corpus);

  const fs::path path = temp_path("pipeline_roundtrip.json");
  save_pipeline(pipeline, path);
  const TrainedPipeline loaded = load_pipeline(path);

  REQUIRE(std::holds_alternative<LogisticModel>(loaded.classifier));
  CHECK(std::get<LogisticModel>(loaded.classifier) == std::get<LogisticModel>(pipeline.classifier));
  for (std::size_t i = 0; i < pipeline.tfidf.idf.size(); ++i) {
    CHECK(loaded.tfidf.idf[i] == pipeline.tfidf.idf[i]);  // bit-exact
  }

  Rng rng(2025);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = random_text(rng);
    const Prediction expected = predict_pipeline(pipeline, text);
    const Prediction got = predict_pipeline(loaded, text);
    CHECK(got.label == expected.label);
    CHECK(got.score == expected.score);
  }
}

TEST_CASE("load_pipeline: corruption and version mismatches are caught") {
  const LabeledCorpus corpus = disjoint_vocab_corpus();
  const TrainedPipeline pipeline = fit_pipeline(tree_config(11), corpus);
  const fs::path path = temp_path("pipeline_tamper.json");
  save_pipeline(pipeline, path);

  auto slurp = [&]() {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string original = slurp();

  SUBCASE("altered payload fails the checksum") {
    std::string tampered = original;
    const auto at = tampered.find("\"n_docs\": 8");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 11, "\"n_docs\": 9");
    std::ofstream(path, std::ios::binary) << tampered;
    CHECK_THROWS_WITH_AS(load_pipeline(path), doctest::Contains("checksum"), IoError);
  }

  SUBCASE("unknown version is rejected") {
    std::string tampered = original;
    const auto at = tampered.find("\"version\": 1");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 12, "\"version\": 9");
    std::ofstream(path, std::ios::binary) << tampered;
    CHECK_THROWS_WITH_AS(load_pipeline(path), doctest::Contains("unsupported version"), IoError);
  }

  SUBCASE("truncated file is rejected") {
    std::ofstream(path, std::ios::binary) << original.substr(0, original.size() / 2);
    CHECK_THROWS_AS(load_pipeline(path), IoError);
  }

  SUBCASE("wrong format tag is rejected") {
    const fs::path other = temp_path("not_a_pipeline.json");
    save_tfidf(pipeline.tfidf, other);
    CHECK_THROWS_AS(load_pipeline(other), IoError);
  }
}

TEST_CASE("pipeline config files round-trip") {
  PipelineConfig config = default_config_for_family("random_forest", 123);
  const fs::path path = temp_path("config.json");
  std::ofstream(path, std::ios::binary) << pipeline_config_json(config);
  const PipelineConfig loaded = load_pipeline_config(path);
  CHECK(loaded.name == config.name);
  CHECK(loaded.seed == config.seed);
  CHECK(loaded.tfidf_mode == config.tfidf_mode);
  REQUIRE(loaded.smote.has_value());
  CHECK(*loaded.smote == *config.smote);
  REQUIRE(std::holds_alternative<ForestConfig>(loaded.model));
  CHECK(std::get<ForestConfig>(loaded.model) == std::get<ForestConfig>(config.model));
}

TEST_CASE("default configs cover the four families") {
  const auto configs = default_pipeline_configs(5);
  REQUIRE(configs.size() == 4);
  CHECK(model_family(configs[0].model) == "logistic_regression");
  CHECK(model_family(configs[1].model) == "linear_svm");
  CHECK(model_family(configs[2].model) == "decision_tree");
  CHECK(model_family(configs[3].model) == "random_forest");
  for (const auto& config : configs) {
    CHECK(config.seed == 5);
    CHECK(config.smote.has_value());
  }
  CHECK_THROWS_AS(default_config_for_family("lstm", 0), ValidationError);
}
