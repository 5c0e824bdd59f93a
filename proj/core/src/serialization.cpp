#include <fstream>
#include <sstream>

#include "obfudet/errors.hpp"
#include "obfudet/fingerprint.hpp"
#include "json_convert.hpp"

namespace obfudet::jsonio {

namespace {

Json confusion_to_json(const ConfusionMatrix& cm) {
  return Json{{"tp", cm.tp}, {"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}};
}

ConfusionMatrix confusion_from_json(const Json& j) {
  ConfusionMatrix cm;
  cm.tp = j.at("tp").get<std::int64_t>();
  cm.tn = j.at("tn").get<std::int64_t>();
  cm.fp = j.at("fp").get<std::int64_t>();
  cm.fn = j.at("fn").get<std::int64_t>();
  return cm;
}

Json tree_nodes_to_json(const DecisionTreeModel& tree) {
  Json nodes = Json::array();
  for (const auto& node : tree.nodes) {
    nodes.push_back(Json{{"left", node.left},
                         {"right", node.right},
                         {"feature", node.feature},
                         {"threshold", node.threshold},
                         {"label", node.label},
                         {"counts", {node.class_counts[0], node.class_counts[1]}}});
  }
  return nodes;
}

Json tree_config_to_json(const TreeConfig& config) {
  Json j;
  if (config.max_depth.has_value()) j["max_depth"] = *config.max_depth;
  else j["max_depth"] = nullptr;
  j["min_samples_split"] = config.min_samples_split;
  return j;
}

TreeConfig tree_config_from_json(const Json& j) {
  TreeConfig config;
  if (j.contains("max_depth") && !j.at("max_depth").is_null()) {
    config.max_depth = j.at("max_depth").get<std::size_t>();
  }
  if (j.contains("min_samples_split")) {
    config.min_samples_split = j.at("min_samples_split").get<std::size_t>();
  }
  return config;
}

DecisionTreeModel tree_from_json(const Json& j) {
  DecisionTreeModel tree;
  tree.dimension = j.at("dimension").get<std::size_t>();
  tree.config = tree_config_from_json(j.at("config"));
  for (const auto& item : j.at("nodes")) {
    TreeNode node;
    node.left = item.at("left").get<std::int32_t>();
    node.right = item.at("right").get<std::int32_t>();
    node.feature = item.at("feature").get<std::uint32_t>();
    node.threshold = item.at("threshold").get<double>();
    node.label = item.at("label").get<int>();
    node.class_counts = {item.at("counts")[0].get<std::int64_t>(),
                         item.at("counts")[1].get<std::int64_t>()};
    tree.nodes.push_back(node);
  }
  if (tree.nodes.empty()) {
    throw IoError("decision tree payload has no nodes");
  }
  return tree;
}

Json tree_to_json(const DecisionTreeModel& tree) {
  Json j;
  j["config"] = tree_config_to_json(tree.config);
  j["dimension"] = tree.dimension;
  j["nodes"] = tree_nodes_to_json(tree);
  return j;
}

}  // namespace

Json tokenizer_to_json(const TokenizerOptions& options) {
  return Json{{"fold_case", options.fold_case}};
}

TokenizerOptions tokenizer_from_json(const Json& j) {
  TokenizerOptions options;
  if (j.contains("fold_case")) options.fold_case = j.at("fold_case").get<bool>();
  return options;
}

std::string tfidf_mode_name(TfIdfMode mode) {
  return mode == TfIdfMode::kRaw ? "raw" : "smoothed";
}

TfIdfMode tfidf_mode_from_name(std::string_view name) {
  if (name == "raw") return TfIdfMode::kRaw;
  if (name == "smoothed") return TfIdfMode::kSmoothed;
  throw ValidationError("unknown tfidf mode: " + std::string(name));
}

Json smote_to_json(const SmoteConfig& config) {
  return Json{{"k_neighbors", config.k_neighbors},
              {"target_ratio", config.target_ratio},
              {"seed", config.seed}};
}

SmoteConfig smote_from_json(const Json& j) {
  SmoteConfig config;
  if (j.contains("k_neighbors")) config.k_neighbors = j.at("k_neighbors").get<std::size_t>();
  if (j.contains("target_ratio")) config.target_ratio = j.at("target_ratio").get<double>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

Json model_config_to_json(const ModelConfig& config) {
  Json j;
  j["family"] = std::string(model_family(config));
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticConfig>) {
          j["learning_rate"] = m.learning_rate;
          j["epochs"] = m.epochs;
          j["l2"] = m.l2;
          j["seed"] = m.seed;
        } else if constexpr (std::is_same_v<T, SvmConfig>) {
          j["lambda"] = m.lambda;
          j["epochs"] = m.epochs;
          j["seed"] = m.seed;
        } else if constexpr (std::is_same_v<T, TreeConfig>) {
          j.update(tree_config_to_json(m));
        } else if constexpr (std::is_same_v<T, ForestConfig>) {
          j["n_trees"] = m.n_trees;
          j["bootstrap"] = m.bootstrap;
          if (m.features_per_split.has_value()) j["features_per_split"] = *m.features_per_split;
          else j["features_per_split"] = nullptr;
          j.update(tree_config_to_json(m.tree));
          j["seed"] = m.seed;
        }
      },
      config);
  return j;
}

ModelConfig model_config_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "logistic_regression") {
    LogisticConfig config;
    if (j.contains("learning_rate")) config.learning_rate = j.at("learning_rate").get<double>();
    if (j.contains("epochs")) config.epochs = j.at("epochs").get<std::size_t>();
    if (j.contains("l2")) config.l2 = j.at("l2").get<double>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
  }
  if (family == "linear_svm") {
    SvmConfig config;
    if (j.contains("lambda")) config.lambda = j.at("lambda").get<double>();
    if (j.contains("epochs")) config.epochs = j.at("epochs").get<std::size_t>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
  }
  if (family == "decision_tree") {
    return tree_config_from_json(j);
  }
  if (family == "random_forest") {
    ForestConfig config;
    if (j.contains("n_trees")) config.n_trees = j.at("n_trees").get<std::size_t>();
    if (j.contains("bootstrap")) config.bootstrap = j.at("bootstrap").get<bool>();
    if (j.contains("features_per_split") && !j.at("features_per_split").is_null()) {
      config.features_per_split = j.at("features_per_split").get<std::size_t>();
    }
    config.tree = tree_config_from_json(j);
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
  }
  if (family == "majority_baseline") {
    return MajorityConfig{};
  }
  throw ValidationError("unknown model family: " + family);
}

Json pipeline_config_to_json(const PipelineConfig& config) {
  Json j;
  j["name"] = config.name;
  j["tokenizer"] = tokenizer_to_json(config.tokenizer);
  j["tfidf_mode"] = tfidf_mode_name(config.tfidf_mode);
  if (config.smote.has_value()) j["smote"] = smote_to_json(*config.smote);
  else j["smote"] = nullptr;
  j["model"] = model_config_to_json(config.model);
  j["seed"] = config.seed;
  return j;
}

PipelineConfig pipeline_config_from_json(const Json& j) {
  PipelineConfig config;
  config.model = model_config_from_json(j.at("model"));
  config.name = j.contains("name") ? j.at("name").get<std::string>()
                                   : std::string(model_family(config.model));
  if (config.name.empty()) {
    throw ValidationError("pipeline config: name must not be empty");
  }
  if (j.contains("tokenizer")) config.tokenizer = tokenizer_from_json(j.at("tokenizer"));
  if (j.contains("tfidf_mode")) {
    config.tfidf_mode = tfidf_mode_from_name(j.at("tfidf_mode").get<std::string>());
  }
  if (j.contains("smote") && !j.at("smote").is_null()) {
    config.smote = smote_from_json(j.at("smote"));
  }
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

Json tfidf_model_to_json(const TfIdfModel& model) {
  Json j;
  j["mode"] = tfidf_mode_name(model.mode);
  j["n_docs"] = model.n_docs;
  Json terms = Json::array();
  for (std::size_t i = 0; i < model.vocabulary.terms.size(); ++i) {
    terms.push_back(
        Json{{"t", model.vocabulary.terms[i]}, {"df", model.df[i]}, {"idf", model.idf[i]}});
  }
  j["terms"] = terms;
  return j;
}

TfIdfModel tfidf_model_from_json(const Json& j) {
  TfIdfModel model;
  model.mode = tfidf_mode_from_name(j.at("mode").get<std::string>());
  model.n_docs = j.at("n_docs").get<std::size_t>();
  for (const auto& item : j.at("terms")) {
    const std::string term = item.at("t").get<std::string>();
    const std::uint32_t column = static_cast<std::uint32_t>(model.vocabulary.terms.size());
    model.vocabulary.index.emplace(term, column);
    model.vocabulary.terms.push_back(term);
    model.df.push_back(item.at("df").get<std::size_t>());
    model.idf.push_back(item.at("idf").get<double>());
  }
  return model;
}

Json classifier_to_json(const TrainedClassifier& model) {
  Json j;
  j["family"] = std::string(family_name(model));
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticModel>) {
          j["config"] = Json{{"learning_rate", m.config.learning_rate},
                             {"epochs", m.config.epochs},
                             {"l2", m.config.l2},
                             {"seed", m.config.seed}};
          j["weights"] = m.weights;
          j["bias"] = m.bias;
        } else if constexpr (std::is_same_v<T, LinearSvmModel>) {
          j["config"] = Json{{"lambda", m.config.lambda},
                             {"epochs", m.config.epochs},
                             {"seed", m.config.seed}};
          j["weights"] = m.weights;
          j["bias"] = m.bias;
        } else if constexpr (std::is_same_v<T, DecisionTreeModel>) {
          j.update(tree_to_json(m));
        } else if constexpr (std::is_same_v<T, RandomForestModel>) {
          j["config"] = Json{{"n_trees", m.config.n_trees},
                             {"bootstrap", m.config.bootstrap},
                             {"features_per_split", m.config.features_per_split.has_value()
                                                        ? Json(*m.config.features_per_split)
                                                        : Json(nullptr)},
                             {"tree", tree_config_to_json(m.config.tree)},
                             {"seed", m.config.seed}};
          j["dimension"] = m.dimension;
          Json trees = Json::array();
          for (const auto& tree : m.trees) trees.push_back(tree_to_json(tree));
          j["trees"] = trees;
          j["bootstrap_samples"] = m.bootstrap_samples;
          j["feature_subsets"] = m.feature_subsets;
        } else {
          j["label"] = m.label;
          j["counts"] = {m.class_counts[0], m.class_counts[1]};
        }
      },
      model);
  return j;
}

TrainedClassifier classifier_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "logistic_regression") {
    LogisticModel model;
    const Json& config = j.at("config");
    model.config.learning_rate = config.at("learning_rate").get<double>();
    model.config.epochs = config.at("epochs").get<std::size_t>();
    model.config.l2 = config.at("l2").get<double>();
    model.config.seed = config.at("seed").get<std::uint64_t>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    return model;
  }
  if (family == "linear_svm") {
    LinearSvmModel model;
    const Json& config = j.at("config");
    model.config.lambda = config.at("lambda").get<double>();
    model.config.epochs = config.at("epochs").get<std::size_t>();
    model.config.seed = config.at("seed").get<std::uint64_t>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    return model;
  }
  if (family == "decision_tree") {
    return tree_from_json(j);
  }
  if (family == "random_forest") {
    RandomForestModel model;
    const Json& config = j.at("config");
    model.config.n_trees = config.at("n_trees").get<std::size_t>();
    model.config.bootstrap = config.at("bootstrap").get<bool>();
    if (!config.at("features_per_split").is_null()) {
      model.config.features_per_split = config.at("features_per_split").get<std::size_t>();
    }
    model.config.tree = tree_config_from_json(config.at("tree"));
    model.config.seed = config.at("seed").get<std::uint64_t>();
    model.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& tree : j.at("trees")) model.trees.push_back(tree_from_json(tree));
    model.bootstrap_samples = j.at("bootstrap_samples").get<std::vector<std::vector<std::size_t>>>();
    model.feature_subsets =
        j.at("feature_subsets").get<std::vector<std::vector<std::vector<std::uint32_t>>>>();
    return model;
  }
  if (family == "majority_baseline") {
    MajorityModel model;
    model.label = j.at("label").get<int>();
    model.class_counts = {j.at("counts")[0].get<std::int64_t>(),
                          j.at("counts")[1].get<std::int64_t>()};
    return model;
  }
  throw IoError("unknown classifier family in file: " + family);
}

Json metrics_to_json(const MetricsReport& report) {
  Json j;
  j["accuracy"] = report.accuracy;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["confusion"] = confusion_to_json(report.confusion);
  return j;
}

MetricsReport metrics_from_json(const Json& j) {
  MetricsReport report;
  report.accuracy = j.at("accuracy").get<double>();
  report.precision = j.at("precision").get<double>();
  report.recall = j.at("recall").get<double>();
  report.f1 = j.at("f1").get<double>();
  report.confusion = confusion_from_json(j.at("confusion"));
  return report;
}

Json summary_to_json(const MetricSummary& summary) {
  return Json{{"accuracy", summary.accuracy},
              {"precision", summary.precision},
              {"recall", summary.recall},
              {"f1", summary.f1}};
}

MetricSummary summary_from_json(const Json& j) {
  MetricSummary summary;
  summary.accuracy = j.at("accuracy").get<double>();
  summary.precision = j.at("precision").get<double>();
  summary.recall = j.at("recall").get<double>();
  summary.f1 = j.at("f1").get<double>();
  return summary;
}

Json cv_result_to_json(const CvResult& result) {
  Json j;
  j["config"] = pipeline_config_to_json(result.config);
  j["corpus_fingerprint"] = result.corpus_fingerprint;
  j["k"] = result.k;
  j["seed"] = result.seed;
  j["unsafe_resample_before_split"] = result.unsafe_resample_before_split;
  j["plan"] = Json{{"k", result.plan.k}, {"assignments", result.plan.assignments}};
  Json fold_metrics = Json::array();
  for (const auto& fold : result.fold_metrics) fold_metrics.push_back(metrics_to_json(fold));
  j["fold_metrics"] = fold_metrics;
  Json train_metrics = Json::array();
  for (const auto& fold : result.fold_train_metrics) train_metrics.push_back(metrics_to_json(fold));
  j["fold_train_metrics"] = train_metrics;
  j["fold_train_ids"] = result.fold_train_ids;
  j["fold_test_ids"] = result.fold_test_ids;
  j["mean"] = summary_to_json(result.mean);
  j["stddev"] = summary_to_json(result.stddev);
  return j;
}

CvResult cv_result_from_json(const Json& j) {
  CvResult result;
  result.config = pipeline_config_from_json(j.at("config"));
  result.corpus_fingerprint = j.at("corpus_fingerprint").get<std::string>();
  result.k = j.at("k").get<std::size_t>();
  result.seed = j.at("seed").get<std::uint64_t>();
  result.unsafe_resample_before_split = j.at("unsafe_resample_before_split").get<bool>();
  result.plan.k = j.at("plan").at("k").get<std::size_t>();
  result.plan.assignments = j.at("plan").at("assignments").get<std::vector<std::size_t>>();
  for (const auto& fold : j.at("fold_metrics")) result.fold_metrics.push_back(metrics_from_json(fold));
  for (const auto& fold : j.at("fold_train_metrics")) {
    result.fold_train_metrics.push_back(metrics_from_json(fold));
  }
  result.fold_train_ids = j.at("fold_train_ids").get<std::vector<std::vector<std::size_t>>>();
  result.fold_test_ids = j.at("fold_test_ids").get<std::vector<std::vector<std::size_t>>>();
  result.mean = summary_from_json(j.at("mean"));
  result.stddev = summary_from_json(j.at("stddev"));
  return result;
}

namespace {

std::string rule_kind_name(ObfuscationRule::Kind kind) {
  switch (kind) {
    case ObfuscationRule::Kind::kSubstitute: return "substitute";
    case ObfuscationRule::Kind::kInsertSeparator: return "insert_separator";
    case ObfuscationRule::Kind::kRepeatChar: return "repeat_char";
    case ObfuscationRule::Kind::kSpaceSplit: return "space_split";
  }
  return "substitute";
}

std::string position_name(PositionPolicy policy) {
  switch (policy) {
    case PositionPolicy::kFirst: return "first";
    case PositionPolicy::kMiddle: return "middle";
    case PositionPolicy::kRandom: return "random";
  }
  return "random";
}

char single_char(const Json& j, const char* field) {
  const std::string value = j.at(field).get<std::string>();
  if (value.size() != 1) {
    throw ValidationError(std::string("rule field '") + field + "' must be a single character");
  }
  return value[0];
}

}  // namespace

Json rules_to_json(const std::vector<ObfuscationRule>& rules) {
  Json out = Json::array();
  for (const auto& rule : rules) {
    Json j;
    j["kind"] = rule_kind_name(rule.kind);
    j["probability"] = rule.probability;
    switch (rule.kind) {
      case ObfuscationRule::Kind::kSubstitute:
        j["from"] = std::string(1, rule.from);
        j["to"] = std::string(1, rule.to);
        break;
      case ObfuscationRule::Kind::kInsertSeparator:
        j["separator"] = std::string(1, rule.separator);
        j["every_n"] = rule.every_n;
        break;
      case ObfuscationRule::Kind::kRepeatChar:
        j["position"] = position_name(rule.position);
        break;
      case ObfuscationRule::Kind::kSpaceSplit:
        break;
    }
    out.push_back(j);
  }
  return out;
}

std::vector<ObfuscationRule> rules_from_json(const Json& j) {
  std::vector<ObfuscationRule> rules;
  for (const auto& item : j) {
    ObfuscationRule rule;
    const std::string kind = item.at("kind").get<std::string>();
    if (item.contains("probability")) rule.probability = item.at("probability").get<double>();
    if (kind == "substitute") {
      rule.kind = ObfuscationRule::Kind::kSubstitute;
      rule.from = single_char(item, "from");
      rule.to = single_char(item, "to");
    } else if (kind == "insert_separator") {
      rule.kind = ObfuscationRule::Kind::kInsertSeparator;
      if (item.contains("separator")) rule.separator = single_char(item, "separator");
      if (item.contains("every_n")) rule.every_n = item.at("every_n").get<std::size_t>();
    } else if (kind == "repeat_char") {
      rule.kind = ObfuscationRule::Kind::kRepeatChar;
      if (item.contains("position")) {
        const std::string position = item.at("position").get<std::string>();
        if (position == "first") rule.position = PositionPolicy::kFirst;
        else if (position == "middle") rule.position = PositionPolicy::kMiddle;
        else if (position == "random") rule.position = PositionPolicy::kRandom;
        else throw ValidationError("unknown repeat_char position: " + position);
      }
    } else if (kind == "space_split") {
      rule.kind = ObfuscationRule::Kind::kSpaceSplit;
    } else {
      throw ValidationError("unknown obfuscation rule kind: " + kind);
    }
    rules.push_back(rule);
  }
  return rules;
}

Json synth_config_to_json(const SynthConfig& config) {
  Json j;
  j["n_docs"] = config.n_docs;
  j["obfuscated_fraction"] = config.obfuscated_fraction;
  j["seed"] = config.seed;
  j["lexicon"] = config.lexicon;
  j["rules"] = rules_to_json(config.rules);
  return j;
}

SynthConfig synth_config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  SynthConfig config;
  if (j.contains("n_docs")) config.n_docs = j.at("n_docs").get<std::size_t>();
  if (j.contains("obfuscated_fraction")) {
    config.obfuscated_fraction = j.at("obfuscated_fraction").get<double>();
  }
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("rules")) config.rules = rules_from_json(j.at("rules"));
  if (j.contains("lexicon")) {
    config.lexicon = j.at("lexicon").get<std::vector<std::string>>();
  } else if (j.contains("lexicon_file")) {
    std::filesystem::path lexicon_path = j.at("lexicon_file").get<std::string>();
    if (lexicon_path.is_relative()) lexicon_path = base_dir / lexicon_path;
    std::ifstream in(lexicon_path);
    if (!in) {
      throw IoError("cannot open lexicon file: " + lexicon_path.string());
    }
    config.lexicon.clear();
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) config.lexicon.push_back(line);
    }
  }
  return config;
}

void write_envelope(const std::filesystem::path& path, std::string_view format, int version,
                    const Json& payload) {
  Json envelope;
  envelope["format"] = std::string(format);
  envelope["version"] = version;
  envelope["checksum"] = to_hex64(fnv1a64(payload.dump()));
  envelope["payload"] = payload;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << envelope.dump(2) << '\n';
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

Json read_envelope(const std::filesystem::path& path, std::string_view format, int version) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json envelope;
  try {
    envelope = Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": corrupt or truncated file: " + e.what());
  }
  if (!envelope.is_object() || !envelope.contains("format") || !envelope.contains("version") ||
      !envelope.contains("checksum") || !envelope.contains("payload")) {
    throw IoError(path.string() + ": not a recognized toolkit file");
  }
  try {
    if (envelope.at("format").get<std::string>() != format) {
      throw IoError(path.string() + ": expected a '" + std::string(format) + "' file, found '" +
                    envelope.at("format").get<std::string>() + "'");
    }
    if (envelope.at("version").get<int>() != version) {
      throw IoError(path.string() + ": unsupported version " +
                    std::to_string(envelope.at("version").get<int>()));
    }
    const Json payload = envelope.at("payload");
    if (to_hex64(fnv1a64(payload.dump())) != envelope.at("checksum").get<std::string>()) {
      throw IoError(path.string() + ": checksum mismatch, file is corrupt");
    }
    return payload;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": malformed envelope: " + e.what());
  }
}

}  // namespace obfudet::jsonio

// Public serialization surface.
namespace obfudet {

namespace {
constexpr int kFileVersion = 1;
}

void save_tfidf(const TfIdfModel& model, const std::filesystem::path& path) {
  jsonio::write_envelope(path, "obfudet-tfidf", kFileVersion, jsonio::tfidf_model_to_json(model));
}

TfIdfModel load_tfidf(const std::filesystem::path& path) {
  return jsonio::tfidf_model_from_json(jsonio::read_envelope(path, "obfudet-tfidf", kFileVersion));
}

void save_classifier(const TrainedClassifier& model, const std::filesystem::path& path) {
  jsonio::write_envelope(path, "obfudet-model", kFileVersion, jsonio::classifier_to_json(model));
}

TrainedClassifier load_classifier(const std::filesystem::path& path) {
  return jsonio::classifier_from_json(jsonio::read_envelope(path, "obfudet-model", kFileVersion));
}

void save_pipeline(const TrainedPipeline& pipeline, const std::filesystem::path& path) {
  jsonio::Json payload;
  payload["config"] = jsonio::pipeline_config_to_json(pipeline.config);
  payload["tfidf"] = jsonio::tfidf_model_to_json(pipeline.tfidf);
  payload["classifier"] = jsonio::classifier_to_json(pipeline.classifier);
  payload["provenance"] = jsonio::Json{{"corpus_fingerprint", pipeline.provenance.corpus_fingerprint},
                                       {"trained_at", pipeline.provenance.trained_at}};
  jsonio::write_envelope(path, "obfudet-pipeline", kFileVersion, payload);
}

TrainedPipeline load_pipeline(const std::filesystem::path& path) {
  const jsonio::Json payload = jsonio::read_envelope(path, "obfudet-pipeline", kFileVersion);
  TrainedPipeline pipeline;
  pipeline.config = jsonio::pipeline_config_from_json(payload.at("config"));
  pipeline.tfidf = jsonio::tfidf_model_from_json(payload.at("tfidf"));
  pipeline.classifier = jsonio::classifier_from_json(payload.at("classifier"));
  pipeline.provenance.corpus_fingerprint =
      payload.at("provenance").at("corpus_fingerprint").get<std::string>();
  pipeline.provenance.trained_at = payload.at("provenance").at("trained_at").get<std::string>();
  return pipeline;
}

SynthConfig load_synth_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  jsonio::Json j;
  try {
    j = jsonio::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    return jsonio::synth_config_from_json(j, path.parent_path());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": bad synth config: " + e.what());
  }
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  jsonio::Json j;
  try {
    j = jsonio::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    return jsonio::pipeline_config_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": bad pipeline config: " + e.what());
  }
}

std::string pipeline_config_json(const PipelineConfig& config) {
  return jsonio::pipeline_config_to_json(config).dump(2);
}

std::string synth_config_json(const SynthConfig& config) {
  return jsonio::synth_config_to_json(config).dump(2);
}

}  // namespace obfudet
