// obfudet: batch toolkit for obfuscated abusive-text detection experiments.
// Subcommands: synth, cv, train, predict, report. Every randomized command
// takes a mandatory --seed and is byte-reproducible from its manifest.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "obfudet/cross_validation.hpp"
#include "obfudet/errors.hpp"
#include "obfudet/fingerprint.hpp"
#include "obfudet/pipeline.hpp"
#include "obfudet/report.hpp"
#include "obfudet/synth.hpp"
#include "obfudet/version.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitTraining = 4;
constexpr int kExitIo = 5;

std::string file_fingerprint(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw obfudet::IoError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return obfudet::to_hex64(obfudet::fnv1a64(buffer.str()));
}

obfudet::CorpusFormat resolve_format(const std::string& flag, const fs::path& path) {
  if (flag == "csv") return obfudet::CorpusFormat::kCsv;
  if (flag == "jsonl") return obfudet::CorpusFormat::kJsonl;
  return path.extension() == ".jsonl" ? obfudet::CorpusFormat::kJsonl : obfudet::CorpusFormat::kCsv;
}

struct ManifestBuilder {
  Json inputs = Json::array();
  Json outputs = Json::array();
  Json resolved = Json::object();

  void add_input(const fs::path& path, const std::string& fingerprint) {
    inputs.push_back(Json{{"path", path.string()}, {"fingerprint", fingerprint}});
  }
  void add_output(const fs::path& path) { outputs.push_back(path.string()); }

  void write(const fs::path& out_dir, const std::string& command, std::uint64_t seed) const {
    Json manifest;
    manifest["format"] = "obfudet-manifest";
    manifest["version"] = 1;
    manifest["toolkit_version"] = obfudet::kVersion;
    manifest["command"] = command;
    manifest["seed"] = seed;
    manifest["inputs"] = inputs;
    manifest["resolved"] = resolved;
    manifest["outputs"] = outputs;
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (!out) {
      throw obfudet::IoError("cannot write " + (out_dir / "manifest.json").string());
    }
    out << manifest.dump(2) << '\n';
  }
};

void ensure_out_dir(const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw obfudet::IoError("cannot create output directory " + out_dir.string() + ": " +
                           ec.message());
  }
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (const char c : name) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) != 0 ? c : '_');
  }
  return out.empty() ? std::string("config") : out;
}

// ---------------------------------------------------------------------------
// synth

struct SynthArgs {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "csv";
  std::size_t n_docs_override = 0;
  double fraction_override = -1.0;
};

int run_synth(const SynthArgs& args) {
  obfudet::SynthConfig config;
  ManifestBuilder manifest;
  if (!args.config_path.empty()) {
    config = obfudet::load_synth_config(args.config_path);
    manifest.add_input(args.config_path, file_fingerprint(args.config_path));
  }
  if (args.n_docs_override > 0) config.n_docs = args.n_docs_override;
  if (args.fraction_override >= 0.0) config.obfuscated_fraction = args.fraction_override;
  config.seed = args.seed;

  const obfudet::LabeledCorpus corpus = obfudet::generate_synthetic_corpus(config);

  const fs::path out_dir(args.out_dir);
  ensure_out_dir(out_dir);
  const bool jsonl = args.format == "jsonl";
  const fs::path corpus_path = out_dir / (jsonl ? "corpus.jsonl" : "corpus.csv");
  obfudet::save_corpus(corpus, corpus_path,
                       jsonl ? obfudet::CorpusFormat::kJsonl : obfudet::CorpusFormat::kCsv);

  manifest.resolved = Json::parse(obfudet::synth_config_json(config));
  manifest.resolved["corpus_fingerprint"] = obfudet::corpus_fingerprint(corpus);
  manifest.add_output(corpus_path);
  manifest.write(out_dir, "synth", args.seed);

  std::cout << "wrote " << corpus_path.string() << " (" << corpus.size() << " documents, "
            << corpus.class_counts[1] << " obfuscated)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cv

struct CvArgs {
  std::string corpus_path;
  std::string format = "auto";
  std::vector<std::string> config_paths;
  bool default_models = false;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool unsafe_resample_before_split = false;
};

int run_cv(const CvArgs& args) {
  const obfudet::LabeledCorpus corpus =
      obfudet::load_corpus(args.corpus_path, resolve_format(args.format, args.corpus_path));

  ManifestBuilder manifest;
  manifest.add_input(args.corpus_path, obfudet::corpus_fingerprint(corpus));

  std::vector<obfudet::PipelineConfig> configs;
  if (args.default_models || args.config_paths.empty()) {
    configs = obfudet::default_pipeline_configs(args.seed);
  }
  for (const auto& path : args.config_paths) {
    obfudet::PipelineConfig config = obfudet::load_pipeline_config(path);
    config.seed = args.seed;  // the CLI seed pins every randomized stage
    configs.push_back(std::move(config));
    manifest.add_input(path, file_fingerprint(path));
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = i + 1; j < configs.size(); ++j) {
      if (configs[i].name == configs[j].name) {
        throw obfudet::ValidationError("duplicate config name: " + configs[i].name);
      }
    }
  }

  const fs::path out_dir(args.out_dir);
  ensure_out_dir(out_dir);
  obfudet::CvOptions options;
  options.unsafe_resample_before_split = args.unsafe_resample_before_split;

  std::vector<obfudet::CvResult> results;
  Json resolved_configs = Json::array();
  for (const auto& config : configs) {
    obfudet::CvResult result = obfudet::cross_validate(config, corpus, args.k, args.seed, options);
    const fs::path result_path = out_dir / ("cv_" + sanitize_name(config.name) + ".json");
    obfudet::write_cv_result(result, result_path);
    manifest.add_output(result_path);
    resolved_configs.push_back(Json::parse(obfudet::pipeline_config_json(result.config)));
    std::cout << config.name << ": mean accuracy " << result.mean.accuracy << ", mean F1 "
              << result.mean.f1 << (args.unsafe_resample_before_split ? " [UNSAFE ordering]" : "")
              << "\n";
    results.push_back(std::move(result));
  }

  obfudet::write_report(results, out_dir);
  manifest.add_output(out_dir / "report.json");
  manifest.add_output(out_dir / "report.txt");
  manifest.resolved["k"] = args.k;
  manifest.resolved["unsafe_resample_before_split"] = args.unsafe_resample_before_split;
  manifest.resolved["configs"] = resolved_configs;
  manifest.write(out_dir, "cv", args.seed);

  std::cout << "wrote " << (out_dir / "report.txt").string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string corpus_path;
  std::string format = "auto";
  std::string config_path;
  std::string family;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int run_train(const TrainArgs& args) {
  if (args.config_path.empty() == args.family.empty()) {
    throw CLI::ValidationError("train", "provide exactly one of --config or --model");
  }
  const obfudet::LabeledCorpus corpus =
      obfudet::load_corpus(args.corpus_path, resolve_format(args.format, args.corpus_path));

  ManifestBuilder manifest;
  manifest.add_input(args.corpus_path, obfudet::corpus_fingerprint(corpus));

  obfudet::PipelineConfig config;
  if (!args.config_path.empty()) {
    config = obfudet::load_pipeline_config(args.config_path);
    manifest.add_input(args.config_path, file_fingerprint(args.config_path));
  } else {
    config = obfudet::default_config_for_family(args.family, args.seed);
  }
  config.seed = args.seed;

  const obfudet::TrainedPipeline pipeline = obfudet::fit_pipeline(config, corpus);

  const fs::path out_dir(args.out_dir);
  ensure_out_dir(out_dir);
  const fs::path pipeline_path = out_dir / "pipeline.json";
  obfudet::save_pipeline(pipeline, pipeline_path);

  manifest.resolved = Json::parse(obfudet::pipeline_config_json(pipeline.config));
  manifest.add_output(pipeline_path);
  manifest.write(out_dir, "train", args.seed);

  std::cout << "wrote " << pipeline_path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// predict

struct PredictArgs {
  std::string pipeline_path;
  std::string text;
  std::string input_path;
  std::string out_dir;
};

int run_predict(const PredictArgs& args) {
  if (args.text.empty() == args.input_path.empty()) {
    throw CLI::ValidationError("predict", "provide exactly one of --text or --input");
  }
  const obfudet::TrainedPipeline pipeline = obfudet::load_pipeline(args.pipeline_path);

  std::vector<std::string> texts;
  if (!args.text.empty()) {
    texts.push_back(args.text);
  } else {
    std::ifstream in(args.input_path);
    if (!in) {
      throw obfudet::IoError("cannot open " + args.input_path);
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) texts.push_back(line);
    }
  }

  std::string table;
  for (const auto& text : texts) {
    const obfudet::Prediction prediction = obfudet::predict_pipeline(pipeline, text);
    std::string score = "-";
    if (prediction.score.has_value()) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.17g", *prediction.score);
      score = buffer;
    }
    table += std::to_string(prediction.label) + "\t" + score + "\t" + text + "\n";
  }
  std::cout << table;

  if (!args.out_dir.empty()) {
    const fs::path out_dir(args.out_dir);
    ensure_out_dir(out_dir);
    const fs::path predictions_path = out_dir / "predictions.tsv";
    std::ofstream out(predictions_path, std::ios::binary);
    if (!out) {
      throw obfudet::IoError("cannot write " + predictions_path.string());
    }
    out << "label\tscore\ttext\n" << table;

    ManifestBuilder manifest;
    manifest.add_input(args.pipeline_path, file_fingerprint(args.pipeline_path));
    if (!args.input_path.empty()) {
      manifest.add_input(args.input_path, file_fingerprint(args.input_path));
    }
    manifest.add_output(predictions_path);
    manifest.write(out_dir, "predict", 0);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string out_dir;
};

int run_report(const ReportArgs& args) {
  ManifestBuilder manifest;
  std::vector<obfudet::CvResult> results;
  for (const auto& path : args.inputs) {
    results.push_back(obfudet::read_cv_result(path));
    manifest.add_input(path, file_fingerprint(path));
  }
  const fs::path out_dir(args.out_dir);
  ensure_out_dir(out_dir);
  obfudet::write_report(results, out_dir);
  manifest.add_output(out_dir / "report.json");
  manifest.add_output(out_dir / "report.txt");
  manifest.write(out_dir, "report", 0);
  std::cout << "wrote " << (out_dir / "report.txt").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "obfudet " + std::string(obfudet::kVersion) +
      " - obfuscated abusive-text detection toolkit\n"
      "TF-IDF features, SMOTE balancing, four classifier families, stratified k-fold CV."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  2  usage error (unknown flag, missing argument)\n"
      "  3  data validation error (malformed corpus or config)\n"
      "  4  training failure\n"
      "  5  I/O error (missing or corrupt file)");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate a seeded synthetic corpus");
  synth->add_option("--config", synth_args.config_path, "Synth config JSON (defaults when omitted)");
  synth->add_option("--seed", synth_args.seed, "Generator seed")->required();
  synth->add_option("--out", synth_args.out_dir, "Output directory")->required();
  synth->add_option("--format", synth_args.format, "Corpus format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->default_val("csv");
  synth->add_option("--n-docs", synth_args.n_docs_override, "Override document count");
  synth->add_option("--obfuscated-fraction", synth_args.fraction_override,
                    "Override obfuscated fraction");

  CvArgs cv_args;
  auto* cv = app.add_subcommand("cv", "Cross-validate pipeline configs on a corpus");
  cv->add_option("--corpus", cv_args.corpus_path, "Corpus file")->required();
  cv->add_option("--format", cv_args.format, "Corpus format (auto by extension)")
      ->check(CLI::IsMember({"auto", "csv", "jsonl"}))
      ->default_val("auto");
  cv->add_option("--config", cv_args.config_paths, "Pipeline config JSON (repeatable)");
  cv->add_flag("--default-models", cv_args.default_models,
               "Evaluate the four default families (implied when no --config is given)");
  cv->add_option("--k", cv_args.k, "Fold count")->default_val(5);
  cv->add_option("--seed", cv_args.seed, "Seed for folds and every pipeline stage")->required();
  cv->add_option("--out", cv_args.out_dir, "Output directory")->required();
  cv->add_flag("--unsafe-resample-before-split", cv_args.unsafe_resample_before_split,
               "Replication mode: apply SMOTE before the fold split (leaks synthetic rows "
               "into test folds; inflates scores)");

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Fit one pipeline and save it");
  train->add_option("--corpus", train_args.corpus_path, "Corpus file")->required();
  train->add_option("--format", train_args.format, "Corpus format (auto by extension)")
      ->check(CLI::IsMember({"auto", "csv", "jsonl"}))
      ->default_val("auto");
  train->add_option("--config", train_args.config_path, "Pipeline config JSON");
  train->add_option("--model", train_args.family,
                    "Model family with default hyperparameters (logistic_regression, linear_svm, "
                    "decision_tree, random_forest, majority_baseline)");
  train->add_option("--seed", train_args.seed, "Training seed")->required();
  train->add_option("--out", train_args.out_dir, "Output directory")->required();

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Label texts with a saved pipeline");
  predict->add_option("--pipeline", predict_args.pipeline_path, "Pipeline file")->required();
  predict->add_option("--text", predict_args.text, "Single text to classify");
  predict->add_option("--input", predict_args.input_path, "File of texts, one per line");
  predict->add_option("--out", predict_args.out_dir, "Optional output directory");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Combine CV result files into one report");
  report->add_option("inputs", report_args.inputs, "CV result JSON files")->required();
  report->add_option("--out", report_args.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
    if (synth->parsed()) return run_synth(synth_args);
    if (cv->parsed()) return run_cv(cv_args);
    if (train->parsed()) return run_train(train_args);
    if (predict->parsed()) return run_predict(predict_args);
    if (report->parsed()) return run_report(report_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nSee --help for usage.\n";
    return kExitUsage;
  } catch (const obfudet::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const obfudet::TrainingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTraining;
  } catch (const obfudet::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
