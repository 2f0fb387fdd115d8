#include "costsense/metrics.hpp"

#include <algorithm>
#include <functional>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace costsense {

namespace {

void check_lengths(std::size_t n_data, std::size_t n_preds) {
  if (n_data != n_preds) {
    throw std::invalid_argument("prediction count " + std::to_string(n_preds) +
                                " does not match dataset size " + std::to_string(n_data));
  }
}

}  // namespace

double nec(std::span<const double> deltas, std::span<const Label> labels) {
  check_lengths(deltas.size(), labels.size());
  double lost = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double cost = std::abs(deltas[i]);
    total += cost;
    if (labels[i] != label_of(deltas[i])) lost += cost;
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("NEC undefined: every |delta| is zero");
  }
  return lost / total;
}

double nec(const Dataset& dataset, const Predictions& preds) {
  return nec(dataset.deltas(), preds.labels);
}

double error_rate(std::span<const double> deltas, std::span<const Label> labels) {
  check_lengths(deltas.size(), labels.size());
  if (deltas.empty()) throw std::invalid_argument("error rate of an empty dataset");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (labels[i] != label_of(deltas[i])) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(deltas.size());
}

double error_rate(const Dataset& dataset, const Predictions& preds) {
  return error_rate(dataset.deltas(), preds.labels);
}

double delta_mae(const Dataset& dataset, const Predictions& preds) {
  if (!preds.scores) throw std::invalid_argument("delta MAE needs delta estimates");
  const auto& scores = *preds.scores;
  check_lengths(dataset.size(), scores.size());
  if (dataset.empty()) throw std::invalid_argument("delta MAE of an empty dataset");
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    sum += std::abs(scores[i] - dataset[i].delta);
  }
  return sum / static_cast<double>(scores.size());
}

MetricReport evaluate(const Dataset& dataset, const Predictions& preds,
                      bool scores_are_deltas) {
  const auto deltas = dataset.deltas();
  MetricReport report;
  report.n = dataset.size();
  report.nec = nec(deltas, preds.labels);
  report.error_rate = error_rate(deltas, preds.labels);
  if (report.nec > 0.0) report.ratio = report.error_rate / report.nec;
  if (scores_are_deltas) report.delta_mae = delta_mae(dataset, preds);
  return report;
}

double t_quantile_975(std::size_t degrees_of_freedom) {
  if (degrees_of_freedom == 0) throw std::invalid_argument("t quantile needs dof >= 1");
  const boost::math::students_t dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(dist, 0.975);
}

Interval mean_interval(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("confidence interval needs >= 2 values");
  // Identical values: report them exactly rather than a rounded mean.
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end()) {
    return {values.front(), 0.0};
  }
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  return {mean, t_quantile_975(values.size() - 1) * sd / std::sqrt(n)};
}

AggregateReport aggregate(std::span<const MetricReport> reports) {
  if (reports.size() < 2) {
    throw std::invalid_argument("aggregate needs at least 2 reports, got " +
                                std::to_string(reports.size()));
  }
  std::vector<double> necs;
  std::vector<double> errors;
  std::vector<double> maes;
  for (const auto& r : reports) {
    necs.push_back(r.nec);
    errors.push_back(r.error_rate);
    if (r.delta_mae) maes.push_back(*r.delta_mae);
  }
  AggregateReport out;
  out.n_seeds = reports.size();
  out.nec = mean_interval(necs);
  out.error_rate = mean_interval(errors);
  if (out.nec.mean > 0.0) out.ratio = out.error_rate.mean / out.nec.mean;
  if (maes.size() == reports.size()) out.delta_mae = mean_interval(maes);
  return out;
}

std::vector<HistogramBin> delta_histogram(std::span<const double> deltas, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  if (deltas.empty()) throw std::invalid_argument("histogram of an empty dataset");
  const auto [min_it, max_it] = std::minmax_element(deltas.begin(), deltas.end());
  const double low = *min_it;
  double high = *max_it;
  if (high == low) high = low + kHistogramEpsilon * std::max(1.0, std::abs(low));
  const double width = (high - low) / static_cast<double>(bins);

  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].low = low + width * static_cast<double>(b);
    out[b].high = b + 1 == bins ? high : low + width * static_cast<double>(b + 1);
  }
  for (const double d : deltas) {
    auto b = static_cast<std::size_t>(std::floor((d - low) / width));
    b = std::min(b, bins - 1);
    // Edges are computed independently of the division; keep bins consistent with them.
    while (b > 0 && d < out[b].low) --b;
    while (b + 1 < bins && d >= out[b + 1].low) ++b;
    ++out[b].count;
  }
  return out;
}

std::vector<HistogramBin> delta_histogram(const Dataset& dataset, std::size_t bins) {
  return delta_histogram(dataset.deltas(), bins);
}

}  // namespace costsense
