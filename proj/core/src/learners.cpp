#include "costsense/learners.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "costsense/text.hpp"

namespace costsense {

namespace {

constexpr int kPowerIterations = 60;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

double margin(const LinearModel& model, std::span<const double> x) {
  return dot(model.weights, x) + model.bias;
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_weights(const Dataset& dataset, std::span<const double> weights) {
  if (weights.size() != dataset.size()) {
    throw std::invalid_argument("example weight count " + std::to_string(weights.size()) +
                                " does not match dataset size " +
                                std::to_string(dataset.size()));
  }
  for (const double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("example weights must be finite and non-negative");
    }
  }
}

// Largest eigenvalue of X~^T diag(w) X~ / total, X~ = [X 1], by power iteration.
double top_curvature(const Dataset& dataset, std::span<const double> weights, double total) {
  const std::size_t d = dataset.dim();
  std::vector<double> v(d + 1, 1.0 / std::sqrt(static_cast<double>(d + 1)));
  std::vector<double> next(d + 1);
  double estimate = 0.0;
  for (int it = 0; it < kPowerIterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (weights[i] == 0.0) continue;
      const auto& x = dataset[i].features;
      const double proj = (dot(x, std::span(v).first(d)) + v[d]) * weights[i];
      for (std::size_t j = 0; j < d; ++j) next[j] += proj * x[j];
      next[d] += proj;
    }
    for (double& e : next) e /= total;
    estimate = dot(v, next);  // Rayleigh quotient, v has unit norm
    const double norm = std::sqrt(dot(next, next));
    if (!(norm > 0.0)) break;
    for (std::size_t j = 0; j <= d; ++j) v[j] = next[j] / norm;
  }
  return estimate;
}

LinearModel minimize(ModelKind kind, const Dataset& dataset, std::span<const double> weights,
                     const TrainConfig& cfg) {
  double total = 0.0;
  for (const double w : weights) total += w;
  if (!(total > 0.0)) throw std::invalid_argument("total example weight must be positive");

  const double loss_curvature = kind == ModelKind::kLogistic ? 0.25 : 2.0;
  const double lipschitz =
      loss_curvature * top_curvature(dataset, weights, total) + cfg.l2_lambda / total;

  LinearModel model{kind, std::vector<double>(dataset.dim(), 0.0), 0.0};
  LossAndGradient current = loss_and_gradient(model, dataset, weights, cfg.l2_lambda);
  double rate = cfg.learning_rate;
  const double min_rate = cfg.learning_rate * 1e-12;
  LinearModel candidate = model;

  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    double gmax = 0.0;
    for (const double g : current.gradient) gmax = std::max(gmax, std::abs(g));
    if (gmax / total < cfg.grad_tol) break;

    const double step = rate / (lipschitz * total);
    for (std::size_t j = 0; j < model.dim(); ++j) {
      candidate.weights[j] = model.weights[j] - step * current.gradient[j];
    }
    candidate.bias = model.bias - step * current.gradient.back();

    LossAndGradient next = loss_and_gradient(candidate, dataset, weights, cfg.l2_lambda);
    if (!(next.loss <= current.loss)) {
      rate *= 0.5;
      if (rate < min_rate) break;
      continue;
    }
    std::swap(model, candidate);
    current = std::move(next);
  }
  return model;
}

std::vector<double> normalized_weights(std::span<const double> weights, bool normalize) {
  std::vector<double> out(weights.begin(), weights.end());
  if (!normalize || out.empty()) return out;
  double total = 0.0;
  for (const double w : out) total += w;
  if (!(total > 0.0)) return out;
  const double scale = static_cast<double>(out.size()) / total;
  for (double& w : out) w *= scale;
  return out;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::kLogistic ? "logistic" : "linear";
}

void TrainConfig::validate() const {
  if (!(l2_lambda >= 0.0) || !std::isfinite(l2_lambda)) {
    throw std::invalid_argument("l2_lambda must be finite and non-negative");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning_rate must be positive");
  }
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
}

LossAndGradient loss_and_gradient(const LinearModel& model, const Dataset& dataset,
                                  std::span<const double> example_weights, double l2_lambda) {
  check_weights(dataset, example_weights);
  if (model.dim() != dataset.dim() && !dataset.empty()) {
    throw std::invalid_argument("model dimension " + std::to_string(model.dim()) +
                                " does not match dataset dimension " +
                                std::to_string(dataset.dim()));
  }
  const std::size_t d = model.dim();
  LossAndGradient out;
  out.gradient.assign(d + 1, 0.0);

  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const double w = example_weights[i];
    if (w == 0.0) continue;
    const auto& ex = dataset[i];
    const double m = margin(model, ex.features);
    double dloss = 0.0;
    if (model.kind == ModelKind::kLogistic) {
      const bool positive = label_of(ex.delta) == Label::kPositive;
      out.loss += w * softplus(positive ? -m : m);
      dloss = sigmoid(m) - (positive ? 1.0 : 0.0);
    } else {
      const double r = m - ex.delta;
      out.loss += w * r * r;
      dloss = 2.0 * r;
    }
    const double scale = w * dloss;
    for (std::size_t j = 0; j < d; ++j) out.gradient[j] += scale * ex.features[j];
    out.gradient[d] += scale;
  }

  out.loss += 0.5 * l2_lambda * dot(model.weights, model.weights);
  for (std::size_t j = 0; j < d; ++j) out.gradient[j] += l2_lambda * model.weights[j];
  return out;
}

LinearModel fit_logistic(const Dataset& dataset, std::span<const double> example_weights,
                         const TrainConfig& cfg) {
  cfg.validate();
  check_weights(dataset, example_weights);
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (example_weights[i] <= 0.0) continue;
    (dataset.label(i) == Label::kPositive ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg) {
    throw std::invalid_argument(
        "fit_logistic: training set needs positive-weight examples of both classes");
  }
  const auto weights = normalized_weights(example_weights, cfg.weight_normalization);
  return minimize(ModelKind::kLogistic, dataset, weights, cfg);
}

LinearModel fit_delta_regression(const Dataset& dataset, const TrainConfig& cfg) {
  cfg.validate();
  if (dataset.empty()) throw std::invalid_argument("fit_delta_regression: empty dataset");
  const std::vector<double> weights(dataset.size(), 1.0);
  return minimize(ModelKind::kLinear, dataset, weights, cfg);
}

ScoredLabel predict_class(const LinearModel& model, std::span<const double> features) {
  if (features.size() != model.dim()) {
    throw std::invalid_argument("feature dimension " + std::to_string(features.size()) +
                                " does not match model dimension " +
                                std::to_string(model.dim()));
  }
  const double m = margin(model, features);
  const Label y = m >= 0.0 ? Label::kPositive : Label::kNegative;
  return {y, model.kind == ModelKind::kLogistic ? sigmoid(m) : m};
}

Predictions predict(const LinearModel& model, const Dataset& dataset) {
  Predictions out;
  out.labels.reserve(dataset.size());
  std::vector<double> scores;
  scores.reserve(dataset.size());
  for (const auto& ex : dataset.examples()) {
    const auto p = predict_class(model, ex.features);
    out.labels.push_back(p.label);
    scores.push_back(p.score);
  }
  out.scores = std::move(scores);
  return out;
}

std::string serialize(const LinearModel& model) {
  std::string out = "costsense-linear-model 1\n";
  out += "kind " + std::string(to_string(model.kind)) + "\n";
  out += "dim " + std::to_string(model.dim()) + "\n";
  out += "bias " + text::format_double(model.bias) + "\n";
  out += "weights";
  for (const double w : model.weights) out += " " + text::format_double(w);
  out += "\n";
  return out;
}

LinearModel deserialize_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto expect_line = [&](std::string_view key) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("model record truncated before '" + std::string(key) + "'");
    }
    const auto view = text::trim(line);
    if (!view.starts_with(key)) {
      throw std::invalid_argument("model record: expected '" + std::string(key) + "', got '" +
                                  std::string(view) + "'");
    }
    return text::trim(view.substr(key.size()));
  };

  if (expect_line("costsense-linear-model") != "1") {
    throw std::invalid_argument("model record: unsupported version");
  }
  LinearModel model;
  const auto kind = expect_line("kind");
  if (kind == "logistic") {
    model.kind = ModelKind::kLogistic;
  } else if (kind == "linear") {
    model.kind = ModelKind::kLinear;
  } else {
    throw std::invalid_argument("model record: unknown kind '" + std::string(kind) + "'");
  }
  const auto dim = text::parse_uint(expect_line("dim"), "model dimension");
  model.bias = text::parse_double(expect_line("bias"), "bias");
  const auto weights = expect_line("weights");
  if (!weights.empty()) {
    for (const auto token : text::split(weights, ' ')) {
      if (token.empty()) continue;
      model.weights.push_back(text::parse_double(token, "weight"));
    }
  }
  if (model.weights.size() != dim) {
    throw std::invalid_argument("model record: dim " + std::to_string(dim) + " but " +
                                std::to_string(model.weights.size()) + " weights");
  }
  return model;
}

}  // namespace costsense
