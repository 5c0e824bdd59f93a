#include "obfudet/classifier.hpp"

#include "obfudet/errors.hpp"

namespace obfudet {

MajorityModel train_majority(const std::vector<int>& y) {
  if (y.empty()) {
    throw ValidationError("train_majority: no labels");
  }
  MajorityModel model;
  for (const int label : y) {
    if (label != 0 && label != 1) {
      throw ValidationError("train_majority: labels must be 0 or 1");
    }
    model.class_counts[static_cast<std::size_t>(label)] += 1;
  }
  model.label = model.class_counts[1] > model.class_counts[0] ? 1 : 0;
  return model;
}

namespace {

int predict_linear(const std::vector<double>& weights, double bias, const FeatureVector& x) {
  // Label 1 on a strictly positive score; exactly 0 falls to label 0.
  return linear_score(weights, bias, x) > 0.0 ? 1 : 0;
}

}  // namespace

int predict(const TrainedClassifier& model, const FeatureVector& x) {
  return std::visit(
      [&x](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticModel> || std::is_same_v<T, LinearSvmModel>) {
          return predict_linear(m.weights, m.bias, x);
        } else if constexpr (std::is_same_v<T, MajorityModel>) {
          return m.label;
        } else {
          return m.predict(x);
        }
      },
      model);
}

bool has_decision_score(const TrainedClassifier& model) {
  return std::holds_alternative<LogisticModel>(model) || std::holds_alternative<LinearSvmModel>(model);
}

double decision_score(const TrainedClassifier& model, const FeatureVector& x) {
  if (const auto* logistic = std::get_if<LogisticModel>(&model)) {
    return linear_score(logistic->weights, logistic->bias, x);
  }
  if (const auto* svm = std::get_if<LinearSvmModel>(&model)) {
    return linear_score(svm->weights, svm->bias, x);
  }
  throw ValidationError("decision_score is defined for linear models only");
}

std::string_view family_name(const TrainedClassifier& model) {
  return std::visit(
      [](const auto& m) -> std::string_view {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LogisticModel>) return "logistic_regression";
        else if constexpr (std::is_same_v<T, LinearSvmModel>) return "linear_svm";
        else if constexpr (std::is_same_v<T, DecisionTreeModel>) return "decision_tree";
        else if constexpr (std::is_same_v<T, RandomForestModel>) return "random_forest";
        else return "majority_baseline";
      },
      model);
}

}  // namespace obfudet
