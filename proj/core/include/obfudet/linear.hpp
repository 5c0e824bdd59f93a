#pragma once

#include <cstdint>
#include <vector>

#include "obfudet/tfidf.hpp"

namespace obfudet {

struct LogisticConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;
  std::uint64_t seed = 0;  // echoed for provenance; full-batch training draws nothing

  bool operator==(const LogisticConfig&) const = default;
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  LogisticConfig config;

  bool operator==(const LogisticModel&) const = default;
};

struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> grad_weights;
  double grad_bias = 0.0;
};

// Mean negative log-likelihood plus (l2/2)*||w||^2; the bias is unpenalized.
LossAndGradient logistic_loss_gradient(const FeatureMatrix& X, const std::vector<int>& y,
                                       const std::vector<double>& weights, double bias, double l2);

// Full-batch gradient descent from zero init, fixed epoch count.
LogisticModel train_logistic(const FeatureMatrix& X, const std::vector<int>& y,
                             const LogisticConfig& config = {});

struct SvmConfig {
  double lambda = 1e-3;  // regularization strength
  std::size_t epochs = 500;
  std::uint64_t seed = 0;

  bool operator==(const SvmConfig&) const = default;
};

struct LinearSvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  SvmConfig config;

  bool operator==(const LinearSvmModel&) const = default;
};

// (lambda/2)*||w||^2 + mean hinge loss, labels mapped internally to {-1,+1}.
// A sample with margin >= 1 contributes nothing beyond the regularization
// term. Subgradient wrt (w, bias); the bias is unpenalized.
LossAndGradient svm_objective_subgradient(const FeatureMatrix& X, const std::vector<int>& y,
                                          const std::vector<double>& weights, double bias, double lambda);

// Full-batch subgradient descent with the Pegasos step schedule
// eta_t = 1 / (lambda * t), zero init.
LinearSvmModel train_linear_svm(const FeatureMatrix& X, const std::vector<int>& y,
                                const SvmConfig& config = {});

// w . x + bias
double linear_score(const std::vector<double>& weights, double bias, const FeatureVector& x);

}  // namespace obfudet
