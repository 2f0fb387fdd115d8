#pragma once

// Deterministic linear learners.
//
// Three training objectives share one full-batch gradient-descent optimizer:
//   - logistic, unit example weights        (standard cross-entropy)
//   - logistic, example weights = |delta|   (cost-weighted cross-entropy)
//   - linear, squared error on delta        (delta regression)
//
// The objective minimized is exactly what loss_and_gradient returns:
//
//   sum_i w_i * loss_i + (l2_lambda / 2) * ||weights||^2     (bias unpenalized)
//
// with loss_i the binary cross-entropy against sign(delta_i) or the squared
// error (prediction_i - delta_i)^2. The optimizer divides it by the total
// example weight, so step sizes and the gradient tolerance are per-example
// quantities. The step is learning_rate / L, where L is a power-iteration
// estimate of the curvature bound; the rate halves whenever a step would
// increase the objective. Parameters start at zero.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "costsense/cost_model.hpp"
#include "costsense/dataset.hpp"
#include "costsense/metrics.hpp"

namespace costsense {

enum class ModelKind { kLogistic, kLinear };

std::string_view to_string(ModelKind kind);

struct LinearModel {
  ModelKind kind = ModelKind::kLogistic;
  std::vector<double> weights;
  double bias = 0.0;

  [[nodiscard]] std::size_t dim() const { return weights.size(); }
};

struct TrainConfig {
  double l2_lambda = 1.0;
  double learning_rate = 1.0;
  std::size_t max_iters = 5000;
  double grad_tol = 1e-6;
  bool weight_normalization = true;  // rescale example weights to mean 1

  void validate() const;
};

struct LossAndGradient {
  double loss = 0.0;
  // d/d weights, followed by d/d bias.
  std::vector<double> gradient;
};

LossAndGradient loss_and_gradient(const LinearModel& model, const Dataset& dataset,
                                  std::span<const double> example_weights, double l2_lambda);

// Weights must be non-negative and finite, one per example, and each class
// needs at least one example with positive weight.
LinearModel fit_logistic(const Dataset& dataset, std::span<const double> example_weights,
                         const TrainConfig& cfg);

LinearModel fit_delta_regression(const Dataset& dataset, const TrainConfig& cfg);

struct ScoredLabel {
  Label label = Label::kPositive;
  // sigmoid(w.x + b) for logistic models, the delta estimate for linear ones.
  double score = 0.0;
};

ScoredLabel predict_class(const LinearModel& model, std::span<const double> features);
Predictions predict(const LinearModel& model, const Dataset& dataset);

// Line-oriented text record:
//   costsense-linear-model 1
//   kind logistic|linear
//   dim <d>
//   bias <value>
//   weights <w0> ... <w{d-1}>
// Values use shortest round-trip formatting.
std::string serialize(const LinearModel& model);
LinearModel deserialize_model(const std::string& text);

}  // namespace costsense
