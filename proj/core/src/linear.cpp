#include "obfudet/linear.hpp"

#include <cmath>

#include "obfudet/errors.hpp"

namespace obfudet {

namespace {

void check_training_inputs(const FeatureMatrix& X, const std::vector<int>& y, const char* who) {
  if (X.row_count() != y.size() || y.empty()) {
    throw ValidationError(std::string(who) + ": features and labels disagree in length");
  }
  bool seen[2] = {false, false};
  for (const int label : y) {
    if (label != 0 && label != 1) {
      throw ValidationError(std::string(who) + ": labels must be 0 or 1");
    }
    seen[label] = true;
  }
  if (!seen[0] || !seen[1]) {
    throw ValidationError(std::string(who) + ": training data contains a single class");
  }
  for (const auto& row : X.rows) {
    if (row.dimension() != X.dimension) {
      throw ValidationError(std::string(who) + ": row dimension mismatch");
    }
    for (const auto& [column, value] : row.entries()) {
      if (!std::isfinite(value)) {
        throw ValidationError(std::string(who) + ": non-finite feature value");
      }
    }
  }
}

// ln(1 + e^z) without overflow.
double log1p_exp(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

}  // namespace

double linear_score(const std::vector<double>& weights, double bias, const FeatureVector& x) {
  if (x.dimension() != weights.size()) {
    throw ValidationError("linear_score: dimension mismatch");
  }
  double score = bias;
  for (const auto& [column, value] : x.entries()) {
    score += weights[column] * value;
  }
  return score;
}

LossAndGradient logistic_loss_gradient(const FeatureMatrix& X, const std::vector<int>& y,
                                       const std::vector<double>& weights, double bias, double l2) {
  const double n = static_cast<double>(X.row_count());
  LossAndGradient out;
  out.grad_weights.assign(weights.size(), 0.0);
  for (std::size_t row = 0; row < X.row_count(); ++row) {
    const double z = linear_score(weights, bias, X.rows[row]);
    const double target = static_cast<double>(y[row]);
    out.loss += log1p_exp(z) - target * z;
    const double sigma = 1.0 / (1.0 + std::exp(-z));
    const double residual = (sigma - target) / n;
    out.grad_bias += residual;
    for (const auto& [column, value] : X.rows[row].entries()) {
      out.grad_weights[column] += residual * value;
    }
  }
  out.loss /= n;
  double penalty = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    penalty += weights[i] * weights[i];
    out.grad_weights[i] += l2 * weights[i];
  }
  out.loss += 0.5 * l2 * penalty;
  return out;
}

LogisticModel train_logistic(const FeatureMatrix& X, const std::vector<int>& y,
                             const LogisticConfig& config) {
  check_training_inputs(X, y, "train_logistic");
  LogisticModel model;
  model.config = config;
  model.weights.assign(X.dimension, 0.0);
  model.bias = 0.0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const LossAndGradient g = logistic_loss_gradient(X, y, model.weights, model.bias, config.l2);
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      model.weights[i] -= config.learning_rate * g.grad_weights[i];
    }
    model.bias -= config.learning_rate * g.grad_bias;
  }
  for (const double w : model.weights) {
    if (!std::isfinite(w)) {
      throw TrainingError("train_logistic: weights diverged; lower the learning rate");
    }
  }
  if (!std::isfinite(model.bias)) {
    throw TrainingError("train_logistic: bias diverged; lower the learning rate");
  }
  return model;
}

LossAndGradient svm_objective_subgradient(const FeatureMatrix& X, const std::vector<int>& y,
                                          const std::vector<double>& weights, double bias,
                                          double lambda) {
  const double n = static_cast<double>(X.row_count());
  LossAndGradient out;
  out.grad_weights.assign(weights.size(), 0.0);
  for (std::size_t row = 0; row < X.row_count(); ++row) {
    const double sign = y[row] == 1 ? 1.0 : -1.0;
    const double margin = sign * linear_score(weights, bias, X.rows[row]);
    if (margin < 1.0) {
      out.loss += (1.0 - margin) / n;
      out.grad_bias -= sign / n;
      for (const auto& [column, value] : X.rows[row].entries()) {
        out.grad_weights[column] -= sign * value / n;
      }
    }
  }
  double penalty = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    penalty += weights[i] * weights[i];
    out.grad_weights[i] += lambda * weights[i];
  }
  out.loss += 0.5 * lambda * penalty;
  return out;
}

LinearSvmModel train_linear_svm(const FeatureMatrix& X, const std::vector<int>& y,
                                const SvmConfig& config) {
  check_training_inputs(X, y, "train_linear_svm");
  if (config.lambda <= 0.0) {
    throw ValidationError("train_linear_svm: lambda must be positive");
  }
  LinearSvmModel model;
  model.config = config;
  model.weights.assign(X.dimension, 0.0);
  model.bias = 0.0;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    const double step = 1.0 / (config.lambda * static_cast<double>(epoch));
    const LossAndGradient g = svm_objective_subgradient(X, y, model.weights, model.bias, config.lambda);
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      model.weights[i] -= step * g.grad_weights[i];
    }
    model.bias -= step * g.grad_bias;
  }
  for (const double w : model.weights) {
    if (!std::isfinite(w)) {
      throw TrainingError("train_linear_svm: weights diverged");
    }
  }
  if (!std::isfinite(model.bias)) {
    throw TrainingError("train_linear_svm: bias diverged");
  }
  return model;
}

}  // namespace obfudet
