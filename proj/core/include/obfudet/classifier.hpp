#pragma once

#include <array>
#include <filesystem>
#include <string_view>
#include <variant>
#include <vector>

#include "obfudet/forest.hpp"
#include "obfudet/linear.hpp"
#include "obfudet/tree.hpp"

namespace obfudet {

// Constant baseline: always predicts the training-set majority label. Not
// part of the default roster; exists so evaluation code has a floor to
// compare against.
struct MajorityModel {
  int label = 0;
  std::array<std::int64_t, 2> class_counts{0, 0};

  bool operator==(const MajorityModel&) const = default;
};

MajorityModel train_majority(const std::vector<int>& y);

using TrainedClassifier =
    std::variant<LogisticModel, LinearSvmModel, DecisionTreeModel, RandomForestModel, MajorityModel>;

// Binary label per family rule: linear families predict 1 iff the decision
// score is strictly positive (a score of exactly 0 falls to label 0), trees
// descend root to leaf, forests take a majority vote with ties to 0.
int predict(const TrainedClassifier& model, const FeatureVector& x);

bool has_decision_score(const TrainedClassifier& model);

// w . x + bias. Linear families only; throws on tree/forest/majority models.
double decision_score(const TrainedClassifier& model, const FeatureVector& x);

std::string_view family_name(const TrainedClassifier& model);

// Human-readable single-model files; load(save(m)) reproduces identical
// predictions on all inputs.
void save_classifier(const TrainedClassifier& model, const std::filesystem::path& path);
TrainedClassifier load_classifier(const std::filesystem::path& path);

}  // namespace obfudet
