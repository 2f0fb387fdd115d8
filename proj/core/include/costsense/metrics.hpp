#pragma once

// Cost-weighted evaluation.
//
// Normalized excess cost (NEC) is the share of total |delta| that a
// predictor forfeits:
//
//   NEC = sum_i |delta_i| * [yhat_i != sign(delta_i)] / sum_i |delta_i|
//
// It equals the plain error rate whenever all |delta_i| are equal, so the two
// are reported side by side together with error_rate / NEC. A ratio above 1
// means the mistakes sit on low-cost (ambiguous) examples.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "costsense/cost_model.hpp"
#include "costsense/dataset.hpp"

namespace costsense {

// Index-aligned with the dataset being evaluated. `scores` holds either
// probability estimates or delta estimates, depending on the producer.
struct Predictions {
  std::vector<Label> labels;
  std::optional<std::vector<double>> scores;
};

struct MetricReport {
  double nec = 0.0;
  double error_rate = 0.0;
  std::optional<double> ratio;  // error_rate / nec; absent when nec == 0
  std::optional<double> delta_mae;
  std::size_t n = 0;
};

struct Interval {
  double mean = 0.0;
  double half_width = 0.0;
};

struct AggregateReport {
  Interval nec;
  Interval error_rate;
  std::optional<double> ratio;  // error mean / nec mean
  std::optional<Interval> delta_mae;
  std::size_t n_seeds = 0;
};

struct HistogramBin {
  double low = 0.0;
  double high = 0.0;
  std::size_t count = 0;
};

/// Throws std::invalid_argument if lengths differ or every delta is zero.
double nec(const Dataset& dataset, const Predictions& preds);
double nec(std::span<const double> deltas, std::span<const Label> labels);

/// Throws std::invalid_argument if lengths differ or the dataset is empty.
double error_rate(const Dataset& dataset, const Predictions& preds);
double error_rate(std::span<const double> deltas, std::span<const Label> labels);

/// Mean |score_i - delta_i|. Requires `preds.scores` to hold delta estimates.
double delta_mae(const Dataset& dataset, const Predictions& preds);

/// NEC, error rate, and ratio. When `scores_are_deltas` the MAE is filled in.
MetricReport evaluate(const Dataset& dataset, const Predictions& preds,
                      bool scores_are_deltas = false);

/// Two-sided 95% Student-t quantile, t_{0.975, dof}.
double t_quantile_975(std::size_t degrees_of_freedom);

/// Mean and 95% t-interval half-width over a sample of at least two values.
Interval mean_interval(std::span<const double> values);

/// Per-metric mean +- 95% CI across seeds. Needs at least two reports.
/// delta_mae is aggregated only when every report carries it.
AggregateReport aggregate(std::span<const MetricReport> reports);

/// Equal-width bins over [min delta, max delta], last bin closed. A zero-width
/// range is widened by kHistogramEpsilon * max(1, |delta|).
std::vector<HistogramBin> delta_histogram(const Dataset& dataset, std::size_t bins);
std::vector<HistogramBin> delta_histogram(std::span<const double> deltas, std::size_t bins);

inline constexpr double kHistogramEpsilon = 1e-9;

}  // namespace costsense
