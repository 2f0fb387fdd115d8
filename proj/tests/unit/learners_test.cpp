#include <gtest/gtest.h>

#include <cmath>

#include "costsense/learners.hpp"
#include "costsense/random.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace costsense {
namespace {

using testing::random_dataset;

std::vector<double> params_of(const LinearModel& m) {
  auto p = m.weights;
  p.push_back(m.bias);
  return p;
}

LinearModel model_from(ModelKind kind, std::span<const double> params) {
  LinearModel m{kind, {params.begin(), params.end() - 1}, params.back()};
  return m;
}

double max_relative_error(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double scale = std::max({std::abs(a[j]), std::abs(b[j]), 1e-12});
    worst = std::max(worst, std::abs(a[j] - b[j]) / scale);
  }
  return worst;
}

TrainConfig unnormalized(double lambda) {
  TrainConfig cfg;
  cfg.l2_lambda = lambda;
  cfg.weight_normalization = false;
  return cfg;
}

TEST(FitLogistic, SeparableTwoPoints) {
  Dataset d;
  d.add({{1.0}, 1.0});
  d.add({{-1.0}, -1.0});
  const std::vector<double> w(2, 1.0);
  const auto model = fit_logistic(d, w, TrainConfig{});
  EXPECT_GT(model.weights[0], 0.0);
  EXPECT_NEAR(model.bias, 0.0, 1e-9);
  const auto preds = predict(model, d);
  EXPECT_EQ(preds.labels[0], Label::kPositive);
  EXPECT_EQ(preds.labels[1], Label::kNegative);
}

TEST(FitLogistic, ScaledWeightsAndLambdaGiveIdenticalTrajectory) {
  Pcg32 rng(31);
  const auto d = random_dataset(rng, 60, 3);
  const std::vector<double> unit(d.size(), 1.0);
  const auto base = fit_logistic(d, unit, unnormalized(1.0));
  // Powers of two scale every intermediate exactly.
  for (const double c : {4.0, 0.5}) {
    const std::vector<double> w(d.size(), c);
    const auto scaled = fit_logistic(d, w, unnormalized(c));
    EXPECT_EQ(scaled.weights, base.weights);
    EXPECT_EQ(scaled.bias, base.bias);
  }
  const std::vector<double> w3(d.size(), 3.0);
  const auto scaled = fit_logistic(d, w3, unnormalized(3.0));
  for (std::size_t j = 0; j < d.dim(); ++j) EXPECT_NEAR(scaled.weights[j], base.weights[j], 1e-9);
  EXPECT_EQ(predict(scaled, d).labels, predict(base, d).labels);
}

TEST(FitLogistic, NormalizationMakesConstantWeightsEquivalentToUnit) {
  Pcg32 rng(32);
  const auto d = random_dataset(rng, 40, 2);
  const std::vector<double> unit(d.size(), 1.0);
  const std::vector<double> eights(d.size(), 8.0);
  const auto a = fit_logistic(d, unit, TrainConfig{});
  const auto b = fit_logistic(d, eights, TrainConfig{});
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

TEST(FitLogistic, MatchesGridRefinementOracle) {
  Pcg32 rng(33);
  const auto d = random_dataset(rng, 20, 2);
  const std::vector<double> unit(d.size(), 1.0);
  const auto model = fit_logistic(d, unit, TrainConfig{});
  auto objective = [&](std::span<const double> p) {
    return loss_and_gradient(model_from(ModelKind::kLogistic, p), d, unit, 1.0).loss;
  };
  const auto best = oracle::grid_refine_minimize(objective, 3, 5.0, 11, 40);
  const double fitted = objective(params_of(model));
  EXPECT_NEAR(fitted, objective(best), 1e-4);
}

TEST(FitLogistic, IsDeterministic) {
  Pcg32 rng(34);
  const auto d = random_dataset(rng, 100, 4);
  std::vector<double> w;
  for (const auto& ex : d.examples()) w.push_back(std::abs(ex.delta));
  const auto a = fit_logistic(d, w, TrainConfig{});
  const auto b = fit_logistic(d, w, TrainConfig{});
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

TEST(FitLogistic, RejectsBadInputs) {
  Dataset one_class;
  one_class.add({{1.0}, 1.0});
  one_class.add({{2.0}, 0.5});
  const std::vector<double> w(2, 1.0);
  EXPECT_THROW(fit_logistic(one_class, w, TrainConfig{}), std::invalid_argument);

  Dataset both;
  both.add({{1.0}, 1.0});
  both.add({{-1.0}, -1.0});
  EXPECT_THROW(fit_logistic(both, std::vector<double>{1.0}, TrainConfig{}),
               std::invalid_argument);
  EXPECT_THROW(fit_logistic(both, std::vector<double>{1.0, -1.0}, TrainConfig{}),
               std::invalid_argument);
  // Class present but with zero weight is a single-class effective set.
  EXPECT_THROW(fit_logistic(both, std::vector<double>{1.0, 0.0}, TrainConfig{}),
               std::invalid_argument);
  TrainConfig bad;
  bad.max_iters = 0;
  EXPECT_THROW(fit_logistic(both, w, bad), std::invalid_argument);
}

TEST(FitDeltaRegression, RecoversNoiselessLinearCosts) {
  Pcg32 rng(35);
  const std::vector<double> truth{0.7, -1.3, 0.4};
  Dataset d;
  for (int i = 0; i < 80; ++i) {
    CostedExample ex;
    double delta = 0.0;
    for (const double w : truth) {
      ex.features.push_back(rng.gaussian());
      delta += w * ex.features.back();
    }
    ex.delta = delta;
    d.add(std::move(ex));
  }
  TrainConfig cfg;
  cfg.l2_lambda = 0.0;
  const auto model = fit_delta_regression(d, cfg);
  for (std::size_t j = 0; j < truth.size(); ++j) EXPECT_NEAR(model.weights[j], truth[j], 1e-4);
  EXPECT_NEAR(model.bias, 0.0, 1e-4);
}

TEST(FitDeltaRegression, MatchesRidgeNormalEquations) {
  Pcg32 rng(36);
  for (int trial = 0; trial < 5; ++trial) {
    const auto d = random_dataset(rng, 50, 3);
    std::vector<std::vector<double>> x;
    for (const auto& ex : d.examples()) x.push_back(ex.features);
    const auto expected = oracle::ridge_normal_equations(x, d.deltas(), 1.0);
    const auto model = fit_delta_regression(d, TrainConfig{});
    const auto got = params_of(model);
    double dist = 0.0;
    for (std::size_t j = 0; j < got.size(); ++j) dist += (got[j] - expected[j]) * (got[j] - expected[j]);
    EXPECT_LT(std::sqrt(dist), 1e-4);
  }
}

TEST(FitDeltaRegression, ConstantCostsFitTheIntercept) {
  Pcg32 rng(37);
  Dataset d;
  for (int i = 0; i < 30; ++i) d.add({{rng.gaussian(), rng.gaussian()}, 1.5});
  TrainConfig cfg;
  cfg.l2_lambda = 0.0;
  const auto model = fit_delta_regression(d, cfg);
  EXPECT_NEAR(model.weights[0], 0.0, 1e-5);
  EXPECT_NEAR(model.weights[1], 0.0, 1e-5);
  EXPECT_NEAR(model.bias, 1.5, 1e-5);
}

TEST(PredictClass, ThresholdConventions) {
  const LinearModel zero{ModelKind::kLogistic, {0.0}, 0.0};
  const std::vector<double> x{3.0};
  EXPECT_EQ(predict_class(zero, x).label, Label::kPositive);
  EXPECT_EQ(predict_class(zero, x).score, 0.5);

  const LinearModel confident{ModelKind::kLogistic, {0.0}, std::log(0.9 / 0.1)};
  const auto p = predict_class(confident, x);
  EXPECT_NEAR(p.score, 0.9, 1e-12);
  EXPECT_EQ(p.label, Label::kPositive);

  const LinearModel linear{ModelKind::kLinear, {0.0}, -0.2};
  const auto q = predict_class(linear, x);
  EXPECT_EQ(q.label, Label::kNegative);
  EXPECT_DOUBLE_EQ(q.score, -0.2);

  EXPECT_THROW(predict_class(linear, std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST(LossAndGradient, ZeroModelCostsLn2PerExample) {
  Dataset d;
  d.add({{1.0, 2.0}, 1.0});
  d.add({{-1.0, 0.5}, -2.0});
  d.add({{0.3, 0.1}, 0.5});
  d.add({{2.0, -1.0}, -0.5});
  const std::vector<double> w(4, 1.0);
  const LinearModel zero{ModelKind::kLogistic, {0.0, 0.0}, 0.0};
  EXPECT_NEAR(loss_and_gradient(zero, d, w, 0.0).loss / 4.0, std::log(2.0), 1e-15);
}

TEST(LossAndGradient, PenaltyOnlyGradient) {
  Pcg32 rng(38);
  const auto d = random_dataset(rng, 10, 3);
  const std::vector<double> zero(d.size(), 0.0);
  const LinearModel m{ModelKind::kLogistic, {0.5, -1.5, 2.0}, 0.7};
  const auto lg = loss_and_gradient(m, d, zero, 2.5);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(lg.gradient[j], 2.5 * m.weights[j]);
  EXPECT_EQ(lg.gradient[3], 0.0);
}

TEST(LossAndGradient, MatchesFiniteDifferences) {
  Pcg32 rng(39);
  for (const auto kind : {ModelKind::kLogistic, ModelKind::kLinear}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = random_dataset(rng, 10, 4);
      std::vector<double> w(d.size());
      for (auto& v : w) v = rng.uniform() * 2.0;
      std::vector<double> params(5);
      for (auto& p : params) p = rng.gaussian();
      const double lambda = rng.uniform();
      auto f = [&](std::span<const double> p) {
        return loss_and_gradient(model_from(kind, p), d, w, lambda).loss;
      };
      const auto numeric = oracle::central_difference(f, params, 1e-5);
      const auto analytic = loss_and_gradient(model_from(kind, params), d, w, lambda).gradient;
      EXPECT_LT(max_relative_error(analytic, numeric), 1e-5);
    }
  }
}

TEST(ModelRecord, RoundTripsExactly) {
  const LinearModel m{ModelKind::kLinear, {0.1, -1.0 / 3.0, 1e-300}, 2.0 / 7.0};
  const auto back = deserialize_model(serialize(m));
  EXPECT_EQ(back.kind, m.kind);
  EXPECT_EQ(back.weights, m.weights);
  EXPECT_EQ(back.bias, m.bias);
  EXPECT_EQ(serialize(back), serialize(m));
}

TEST(ModelRecord, RejectsMalformed) {
  EXPECT_THROW(deserialize_model("nope"), std::invalid_argument);
  EXPECT_THROW(deserialize_model("costsense-linear-model 1\nkind cubic\n"), std::invalid_argument);
  EXPECT_THROW(
      deserialize_model("costsense-linear-model 1\nkind linear\ndim 2\nbias 0\nweights 1\n"),
      std::invalid_argument);
}

}  // namespace
}  // namespace costsense
