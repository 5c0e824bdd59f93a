// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Each criterion carries its own runtime budget where one applies.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "obfudet/classifier.hpp"
#include "obfudet/cross_validation.hpp"
#include "obfudet/errors.hpp"
#include "obfudet/linear.hpp"
#include "obfudet/metrics.hpp"
#include "obfudet/pipeline.hpp"
#include "obfudet/report.hpp"
#include "obfudet/rng.hpp"
#include "obfudet/smote.hpp"
#include "obfudet/synth.hpp"
#include "obfudet/text.hpp"
#include "obfudet/tfidf.hpp"

using namespace obfudet;
namespace fs = std::filesystem;

namespace {

const std::string kCli = OBFUDET_CLI_PATH;

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "obfudet_acceptance";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string command = kCli + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(command.c_str()));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool close_rel(double got, double expected, double tolerance) {
  const double scale = std::max({std::abs(got), std::abs(expected), 1.0});
  return std::abs(got - expected) <= tolerance * scale;
}

// ---------------------------------------------------------------------------
// 1. TF-IDF oracle equivalence on random small corpora.

Outcome criterion_tfidf_oracle() {
  Rng rng(101);
  const std::vector<std::string> alphabet = {"na", "wa", "ki", "mi", "ju", "lo", "pe"};
  std::size_t compared = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n_docs = 1 + rng.index(10);
    std::vector<std::vector<std::string>> docs(n_docs);
    bool any_token = false;
    for (auto& doc : docs) {
      const std::size_t length = rng.index(8);
      for (std::size_t t = 0; t < length; ++t) doc.push_back(alphabet[rng.index(alphabet.size())]);
      any_token = any_token || !doc.empty();
    }
    if (!any_token) {
      docs[0].push_back(alphabet[0]);
    }
    const TfIdfModel model = fit_tfidf(docs, TfIdfMode::kRaw);

    // Brute-force evaluation by direct document scans.
    for (const auto& doc : docs) {
      const FeatureVector got = transform_tfidf(model, doc);
      for (std::size_t column = 0; column < model.vocabulary.size(); ++column) {
        const std::string& term = model.vocabulary.terms[column];
        std::size_t df = 0;
        for (const auto& d : docs) {
          if (std::find(d.begin(), d.end(), term) != d.end()) ++df;
        }
        std::size_t term_count = 0;
        for (const auto& token : doc) {
          if (token == term) ++term_count;
        }
        double expected = 0.0;
        if (!doc.empty() && term_count > 0) {
          const double tf = static_cast<double>(term_count) / static_cast<double>(doc.size());
          const double idf =
              std::log(static_cast<double>(n_docs) / static_cast<double>(df));
          expected = tf * idf;
        }
        if (!close_rel(got.value_at(column), expected, 1e-12)) {
          return {false, "mismatch on term '" + term + "'"};
        }
        ++compared;
      }
    }
  }
  return {true, std::to_string(compared) + " weights matched the brute-force evaluation at 1e-12"};
}

// ---------------------------------------------------------------------------
// 2. Metric identities over random confusion matrices.

Outcome criterion_metric_identities() {
  Rng rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    ConfusionMatrix cm;
    cm.tp = static_cast<std::int64_t>(rng.index(50));
    cm.tn = static_cast<std::int64_t>(rng.index(50));
    cm.fp = static_cast<std::int64_t>(rng.index(50));
    cm.fn = static_cast<std::int64_t>(rng.index(50));
    if (cm.total() == 0) cm.tn = 1;
    const MetricsReport m = compute_metrics(cm);
    const double total = static_cast<double>(cm.total());

    if (std::abs(m.accuracy - static_cast<double>(cm.tp + cm.tn) / total) > 1e-12) {
      return {false, "accuracy identity violated"};
    }
    if (cm.tp + cm.fp == 0) {
      if (m.precision != 0.0) return {false, "precision zero-denominator convention violated"};
    } else if (std::abs(m.precision - static_cast<double>(cm.tp) /
                                          static_cast<double>(cm.tp + cm.fp)) > 1e-12) {
      return {false, "precision identity violated"};
    }
    if (cm.tp + cm.fn == 0) {
      if (m.recall != 0.0) return {false, "recall zero-denominator convention violated"};
    } else if (std::abs(m.recall - static_cast<double>(cm.tp) /
                                       static_cast<double>(cm.tp + cm.fn)) > 1e-12) {
      return {false, "recall identity violated"};
    }
    if (m.precision + m.recall == 0.0) {
      if (m.f1 != 0.0) return {false, "f1 zero-denominator convention violated"};
    } else if (std::abs(m.f1 - 2.0 * m.precision * m.recall / (m.precision + m.recall)) > 1e-12) {
      return {false, "f1 identity violated"};
    }
    if (m.precision > 0.0 && m.recall > 0.0) {
      if (m.f1 > std::max(m.precision, m.recall) + 1e-12 ||
          m.f1 < std::min(m.precision, m.recall) - 1e-12) {
        return {false, "harmonic-mean bounds violated"};
      }
    }
  }
  return {true, "1000 random matrices satisfied the metric identities at 1e-12"};
}

// ---------------------------------------------------------------------------
// 3. SMOTE geometry on random imbalanced sets.

Outcome criterion_smote_geometry() {
  Rng rng(303);
  std::size_t synthetics_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t minority = 2 + rng.index(8);
    const std::size_t majority = minority + 1 + rng.index(12);
    const std::size_t dim = 3 + rng.index(4);
    FeatureMatrix features;
    features.dimension = dim;
    std::vector<int> labels;
    for (std::size_t row = 0; row < minority + majority; ++row) {
      std::vector<double> values(dim, 0.0);
      for (auto& value : values) {
        if (rng.uniform01() < 0.6) value = rng.uniform01() * 3.0;
      }
      features.rows.push_back(FeatureVector::from_dense(values));
      labels.push_back(row < minority ? 1 : 0);
    }
    SmoteConfig config;
    config.seed = rng.next_u64();
    const ResampledSet first = smote_balance(features, labels, config);
    const ResampledSet second = smote_balance(features, labels, config);

    if (first.synthetic_records.size() != majority - minority) {
      return {false, "synthetic count does not match ceil(ratio*majority)-minority"};
    }
    if (!(first.features == second.features) || first.labels != second.labels) {
      return {false, "fixed seed did not reproduce identical output"};
    }
    for (std::size_t s = 0; s < first.synthetic_records.size(); ++s) {
      const auto& record = first.synthetic_records[s];
      const FeatureVector& synthetic = first.features.rows[features.row_count() + s];
      const auto a = features.rows[record.base_row].to_dense();
      const auto b = features.rows[record.neighbor_row].to_dense();
      const auto got = synthetic.to_dense();
      for (std::size_t c = 0; c < got.size(); ++c) {
        const double expected =
            std::clamp(a[c] + record.lambda * (b[c] - a[c]), std::min(a[c], b[c]),
                       std::max(a[c], b[c]));
        if (got[c] != expected) {
          return {false, "synthetic row deviates from x_i + lambda*(x_j - x_i)"};
        }
        if (got[c] < std::min(a[c], b[c]) || got[c] > std::max(a[c], b[c])) {
          return {false, "segment bounds violated"};
        }
      }
      ++synthetics_checked;
    }
  }
  return {true, std::to_string(synthetics_checked) +
                    " synthetics satisfied the segment property; counts exact; seeds reproduce"};
}

// ---------------------------------------------------------------------------
// 4. Logistic gradient vs central finite differences.

Outcome criterion_logistic_gradient() {
  Rng rng(404);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + rng.index(5);
    const std::size_t dim = 2 + rng.index(4);
    FeatureMatrix X;
    X.dimension = dim;
    std::vector<int> y;
    for (std::size_t row = 0; row < n; ++row) {
      std::vector<double> values(dim);
      for (auto& value : values) value = rng.uniform01() * 2.0 - 0.5;
      X.rows.push_back(FeatureVector::from_dense(values));
      y.push_back(static_cast<int>(rng.index(2)));
    }
    std::vector<double> w(dim);
    for (auto& value : w) value = rng.uniform01() - 0.5;
    const double bias = rng.uniform01() - 0.5;
    const double l2 = 0.02;
    const LossAndGradient analytic = logistic_loss_gradient(X, y, w, bias, l2);

    const double h = 1e-5;
    for (std::size_t i = 0; i <= dim; ++i) {
      auto loss_at = [&](double delta) {
        if (i == dim) return logistic_loss_gradient(X, y, w, bias + delta, l2).loss;
        std::vector<double> shifted = w;
        shifted[i] += delta;
        return logistic_loss_gradient(X, y, shifted, bias, l2).loss;
      };
      const double fd = (loss_at(h) - loss_at(-h)) / (2.0 * h);
      const double analytic_i = i == dim ? analytic.grad_bias : analytic.grad_weights[i];
      const double scale = std::max({std::abs(fd), std::abs(analytic_i), 1e-8});
      worst = std::max(worst, std::abs(fd - analytic_i) / scale);
    }
  }
  if (worst >= 1e-6) {
    return {false, "worst relative error " + std::to_string(worst)};
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst relative error %.2e over 20 problems", worst);
  return {true, detail};
}

// ---------------------------------------------------------------------------
// 5. Tree memorization, including the 200-doc synthetic corpus at seed 42.

Outcome criterion_tree_memorization() {
  // Random conflict-free matrices.
  Rng rng(505);
  for (int trial = 0; trial < 5; ++trial) {
    FeatureMatrix X;
    X.dimension = 3;
    std::vector<int> y;
    std::map<std::vector<double>, int> lookup;
    while (X.rows.size() < 30) {
      std::vector<double> row(3);
      for (auto& value : row) value = static_cast<double>(rng.index(6));
      const int label = static_cast<int>(rng.index(2));
      auto [it, inserted] = lookup.emplace(row, label);
      if (!inserted) continue;
      X.rows.push_back(FeatureVector::from_dense(row));
      y.push_back(it->second);
    }
    const DecisionTreeModel tree = train_tree(X, y, TreeConfig{});
    for (std::size_t row = 0; row < X.row_count(); ++row) {
      if (tree.predict(X.rows[row]) != y[row]) {
        return {false, "random conflict-free matrix not memorized"};
      }
    }
  }

  // The pipeline path on the default 200-document synthetic corpus.
  SynthConfig synth;
  synth.seed = 42;
  const LabeledCorpus corpus = generate_synthetic_corpus(synth);

  PipelineConfig config;
  config.name = "decision_tree";
  config.model = TreeConfig{};
  config.seed = 42;
  const TrainedPipeline pipeline = fit_pipeline(config, corpus);

  // Conflict-free premise: no two documents share features across labels.
  std::map<std::vector<double>, int> seen;
  for (const auto& doc : corpus.documents) {
    const FeatureVector v = transform_tfidf(pipeline.tfidf, tokenize(doc.text));
    auto [it, inserted] = seen.emplace(v.to_dense(), doc.label);
    if (!inserted && it->second != doc.label) {
      return {false, "synthetic corpus is not conflict-free at seed 42"};
    }
  }

  std::vector<int> predictions;
  std::vector<int> truth;
  for (const auto& doc : corpus.documents) {
    predictions.push_back(predict_pipeline(pipeline, doc.text).label);
    truth.push_back(doc.label);
  }
  const MetricsReport metrics = compute_metrics(confusion_matrix(predictions, truth));
  if (metrics.accuracy != 1.0 || metrics.recall != 1.0) {
    char detail[96];
    std::snprintf(detail, sizeof(detail), "training accuracy %.4f, recall %.4f", metrics.accuracy,
                  metrics.recall);
    return {false, detail};
  }
  return {true, "training accuracy 1.0 and recall 1.0 on 200-doc synthetic corpus (seed 42)"};
}

// ---------------------------------------------------------------------------
// 6. Forest(1 tree, no bootstrap, all features) == tree on an exhaustive grid.

Outcome criterion_forest_tree_oracle() {
  Rng rng(606);
  FeatureMatrix X;
  X.dimension = 2;
  std::vector<int> y;
  for (int row = 0; row < 40; ++row) {
    const double a = static_cast<double>(rng.index(12));
    const double b = static_cast<double>(rng.index(12));
    X.rows.push_back(FeatureVector::from_dense({a, b}));
    y.push_back((a > 6.0) != (b > 4.0) ? 1 : 0);
  }
  ForestConfig config;
  config.n_trees = 1;
  config.bootstrap = false;
  config.features_per_split = 2;
  const RandomForestModel forest = train_forest(X, y, config);
  const DecisionTreeModel tree = train_tree(X, y, config.tree);

  std::size_t compared = 0;
  for (int a = 0; a < 31; ++a) {
    for (int b = 0; b < 31; ++b) {
      const FeatureVector x = FeatureVector::from_dense(
          {static_cast<double>(a) * 0.4, static_cast<double>(b) * 0.4});
      if (forest.predict(x) != tree.predict(x)) {
        return {false, "prediction mismatch on the input grid"};
      }
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " grid inputs, zero mismatches"};
}

// ---------------------------------------------------------------------------
// 7. CV protocol on a 100-document corpus.

Outcome criterion_cv_protocol() {
  SynthConfig synth;
  synth.n_docs = 100;
  synth.obfuscated_fraction = 0.3;
  synth.seed = 700;
  const LabeledCorpus corpus = generate_synthetic_corpus(synth);
  if (corpus.class_counts[0] != 70 || corpus.class_counts[1] != 30) {
    return {false, "unexpected class balance"};
  }

  PipelineConfig config;
  config.name = "majority_baseline";
  config.model = MajorityConfig{};
  config.seed = 700;
  const CvResult result = cross_validate(config, corpus, 5, 700);

  std::set<std::size_t> tested;
  for (std::size_t fold = 0; fold < 5; ++fold) {
    for (const auto id : result.fold_test_ids[fold]) {
      if (!tested.insert(id).second) {
        return {false, "a document was tested twice"};
      }
    }
  }
  if (tested.size() != corpus.size()) {
    return {false, "some documents were never tested"};
  }

  for (std::size_t fold = 0; fold < 5; ++fold) {
    std::array<std::size_t, 2> counts{0, 0};
    for (const auto id : result.fold_test_ids[fold]) {
      counts[static_cast<std::size_t>(corpus.documents[id].label)] += 1;
    }
    if (counts[0] != 14 || counts[1] != 6) {
      return {false, "stratification drifted beyond +-1 per class"};
    }
  }

  if (result.mean.accuracy != 0.7) {
    char detail[96];
    std::snprintf(detail, sizeof(detail), "majority baseline mean accuracy %.12f != 0.7",
                  result.mean.accuracy);
    return {false, detail};
  }
  return {true, "partition exact, stratification 14/6 per fold, majority accuracy exactly 0.7"};
}

// ---------------------------------------------------------------------------
// 8. End-to-end qualitative replication through the CLI.

Outcome criterion_end_to_end() {
  const fs::path dir = work_dir() / "end_to_end";
  fs::remove_all(dir);
  if (run_cli("synth --seed 42 --out " + (dir / "data").string()) != 0) {
    return {false, "synth subcommand failed"};
  }
  if (run_cli("cv --corpus " + (dir / "data" / "corpus.csv").string() +
              " --default-models --k 5 --seed 42 --out " + (dir / "cv").string()) != 0) {
    return {false, "cv subcommand failed"};
  }
  for (const char* name : {"report.json", "report.txt", "manifest.json",
                           "cv_logistic_regression.json", "cv_linear_svm.json",
                           "cv_decision_tree.json", "cv_random_forest.json"}) {
    if (!fs::exists(dir / "cv" / name)) {
      return {false, std::string("missing output ") + name};
    }
  }
  const std::string report = slurp(dir / "cv" / "report.txt");
  for (const char* label : {"Logistic Regression", "SVM", "Decision Tree", "Random Forest"}) {
    if (report.find(label) == std::string::npos) {
      return {false, std::string("report table lacks a row for ") + label};
    }
  }
  const CvResult tree_result = read_cv_result(dir / "cv" / "cv_decision_tree.json");
  for (const auto& fold : tree_result.fold_train_metrics) {
    if (fold.accuracy != 1.0) {
      char detail[96];
      std::snprintf(detail, sizeof(detail), "decision tree training-fold accuracy %.4f != 1.0",
                    fold.accuracy);
      return {false, detail};
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "4 configs x 5 folds completed; decision tree training-fold accuracy 1.0 in every "
                "fold; tree test-fold mean accuracy %.3f (reported, not gated)",
                tree_result.mean.accuracy);
  return {true, detail};
}

// ---------------------------------------------------------------------------
// 9. Leakage-ordering comparison report across 10 seeds (report-only).

Outcome criterion_leakage_report() {
  std::vector<LeakageRun> runs;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SynthConfig synth;
    synth.n_docs = 100;
    synth.obfuscated_fraction = 0.2;
    synth.seed = seed;
    const LabeledCorpus corpus = generate_synthetic_corpus(synth);

    PipelineConfig config;
    config.name = "decision_tree";
    config.model = TreeConfig{};
    config.smote = SmoteConfig{};
    config.seed = seed;

    LeakageRun run;
    run.seed = seed;
    run.safe = cross_validate(config, corpus, 5, seed).mean;
    CvOptions unsafe_options;
    unsafe_options.unsafe_resample_before_split = true;
    run.unsafe_mode = cross_validate(config, corpus, 5, seed, unsafe_options).mean;
    runs.push_back(run);
  }

  const fs::path dir = work_dir() / "leakage";
  fs::remove_all(dir);
  write_leakage_report(runs, "decision_tree", dir);
  if (!fs::exists(dir / "leakage_report.json") || !fs::exists(dir / "leakage_report.txt")) {
    return {false, "leakage report files were not written"};
  }
  const std::string text = slurp(dir / "leakage_report.txt");
  if (text.find("UNSAFE") == std::string::npos ||
      text.find("unsafe-resample-before-split") == std::string::npos) {
    return {false, "unsafe ordering is not clearly labeled"};
  }
  double safe_mean = 0.0;
  double unsafe_mean = 0.0;
  for (const auto& run : runs) {
    safe_mean += run.safe.recall / 10.0;
    unsafe_mean += run.unsafe_mode.recall / 10.0;
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "10 seeds reported side-by-side: mean minority recall %.3f (safe) vs %.3f "
                "(unsafe ordering); no numeric gate",
                safe_mean, unsafe_mean);
  return {true, detail};
}

// ---------------------------------------------------------------------------
// 10. Determinism of reports; save/load prediction equivalence.

Outcome criterion_determinism() {
  const fs::path dir = work_dir() / "determinism";
  fs::remove_all(dir);
  if (run_cli("synth --seed 11 --n-docs 80 --out " + (dir / "data").string()) != 0) {
    return {false, "synth subcommand failed"};
  }
  // Same command, same output directory: the manifests of the two runs are
  // identical, so every emitted byte must be too.
  const std::string corpus_arg = (dir / "data" / "corpus.csv").string();
  const std::string cv_command =
      "cv --corpus " + corpus_arg + " --default-models --k 5 --seed 11 --out " +
      (dir / "cv").string();
  const std::vector<std::string> outputs = {
      "report.json",        "report.txt",
      "manifest.json",      "cv_logistic_regression.json",
      "cv_linear_svm.json", "cv_decision_tree.json",
      "cv_random_forest.json"};
  if (run_cli(cv_command) != 0) {
    return {false, "cv subcommand failed"};
  }
  std::map<std::string, std::string> first_run;
  for (const auto& name : outputs) first_run[name] = slurp(dir / "cv" / name);
  if (run_cli(cv_command) != 0) {
    return {false, "cv subcommand failed on the second run"};
  }
  for (const auto& name : outputs) {
    if (slurp(dir / "cv" / name) != first_run[name]) {
      return {false, name + " differs between identical runs"};
    }
  }

  // Save/load equivalence on random strings.
  const LabeledCorpus corpus = load_corpus(dir / "data" / "corpus.csv", CorpusFormat::kCsv);
  PipelineConfig config = default_config_for_family("logistic_regression", 11);
  const TrainedPipeline pipeline = fit_pipeline(config, corpus);
  save_pipeline(pipeline, dir / "pipeline.json");
  const TrainedPipeline loaded = load_pipeline(dir / "pipeline.json");

  Rng rng(1100);
  const std::vector<std::string> pool = {"habari", "mj1nga", "za", "asubuhi", "k4zi",
                                         "upo",    "w3w3",   "xx", "yy",      "zzz"};
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const std::size_t words = 1 + rng.index(6);
    for (std::size_t w = 0; w < words; ++w) {
      if (w > 0) text.push_back(' ');
      text += pool[rng.index(pool.size())];
    }
    const Prediction expected = predict_pipeline(pipeline, text);
    const Prediction got = predict_pipeline(loaded, text);
    if (got.label != expected.label || got.score != expected.score) {
      return {false, "save/load changed a prediction"};
    }
  }
  return {true, "byte-identical reports across runs; 100 random strings predict identically "
                "after save/load"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1 tfidf-oracle-equivalence", criterion_tfidf_oracle, 1.0},
      {"C2 metric-identities", criterion_metric_identities, 1.0},
      {"C3 smote-geometry", criterion_smote_geometry, 5.0},
      {"C4 logistic-gradient-check", criterion_logistic_gradient, 1.0},
      {"C5 tree-memorization", criterion_tree_memorization, 5.0},
      {"C6 forest-tree-oracle", criterion_forest_tree_oracle, 5.0},
      {"C7 cv-protocol", criterion_cv_protocol, 10.0},
      {"C8 end-to-end-replication", criterion_end_to_end, 60.0},
      {"C9 leakage-ordering-report", criterion_leakage_report, 0.0},
      {"C10 determinism-serialization", criterion_determinism, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [exceeded " + std::to_string(criterion.budget_seconds) + "s budget]";
    }
    std::printf("[%s] %s (%.0f ms): %s\n", outcome.pass ? "PASS" : "FAIL", criterion.name,
                elapsed * 1000.0, outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
