#include <gtest/gtest.h>

#include <cmath>

#include "costsense/metrics.hpp"
#include "costsense/random.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace costsense {
namespace {

using testing::dataset_from_deltas;
using testing::flip;
using testing::labels_only;
using testing::true_labels;

constexpr auto P = Label::kPositive;
constexpr auto N = Label::kNegative;

TEST(Nec, UniformCostsEqualErrorRate) {
  const std::vector<double> d{1, 1, 1, 1};
  const auto data = dataset_from_deltas(d);
  const auto preds = labels_only({P, P, P, N});
  EXPECT_EQ(nec(data, preds), 0.25);
  EXPECT_EQ(error_rate(data, preds), 0.25);
}

TEST(Nec, WeightsErrorsByCost) {
  const std::vector<double> d{2, 1, 1};
  const auto data = dataset_from_deltas(d);
  EXPECT_EQ(nec(data, labels_only({N, P, P})), 0.5);
  EXPECT_EQ(nec(data, labels_only({P, N, P})), 0.25);
  EXPECT_DOUBLE_EQ(error_rate(data, labels_only({P, N, P})), 1.0 / 3.0);
}

TEST(Nec, ZeroCostExamplesContributeNothing) {
  const std::vector<double> d{0.0, 1.0, -1.0};
  const auto data = dataset_from_deltas(d);
  EXPECT_EQ(nec(data, labels_only({N, P, N})), 0.0);
  EXPECT_EQ(nec(data, labels_only({P, P, P})), 0.5);
}

TEST(Nec, DegenerateAndMismatchedInputsThrow) {
  const std::vector<double> zeros{0.0, 0.0};
  EXPECT_THROW(nec(dataset_from_deltas(zeros), labels_only({P, N})), std::invalid_argument);
  const std::vector<double> d{1.0, -1.0};
  EXPECT_THROW(nec(dataset_from_deltas(d), labels_only({P})), std::invalid_argument);
  EXPECT_THROW(error_rate(dataset_from_deltas(d), labels_only({P})), std::invalid_argument);
  EXPECT_THROW(error_rate(Dataset{}, labels_only({})), std::invalid_argument);
}

TEST(ErrorRate, PerfectAndFlipped) {
  const std::vector<double> d{0.3, -2.0, 1.5, -0.1};
  const auto data = dataset_from_deltas(d);
  auto labels = true_labels(d);
  EXPECT_EQ(error_rate(data, labels_only(labels)), 0.0);
  EXPECT_EQ(nec(data, labels_only(labels)), 0.0);
  for (auto& y : labels) y = flip(y);
  EXPECT_EQ(error_rate(data, labels_only(labels)), 1.0);
  EXPECT_EQ(nec(data, labels_only(labels)), 1.0);
}

TEST(DeltaMae, Values) {
  const std::vector<double> d1{1.0, -1.0};
  Predictions p1{{P, N}, std::vector<double>{0.5, -0.5}};
  EXPECT_EQ(delta_mae(dataset_from_deltas(d1), p1), 0.5);

  const std::vector<double> d2{2.0};
  Predictions p2{{N}, std::vector<double>{-1.0}};
  EXPECT_EQ(delta_mae(dataset_from_deltas(d2), p2), 3.0);

  Predictions exact{{P, N}, d1};
  EXPECT_EQ(delta_mae(dataset_from_deltas(d1), exact), 0.0);

  EXPECT_THROW(delta_mae(dataset_from_deltas(d1), labels_only({P, N})), std::invalid_argument);
}

TEST(Evaluate, RatioAbsentWhenNecIsZero) {
  const std::vector<double> d{1.0, -1.0};
  const auto r = evaluate(dataset_from_deltas(d), labels_only({P, N}));
  EXPECT_EQ(r.nec, 0.0);
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_FALSE(r.delta_mae.has_value());
  EXPECT_EQ(r.n, 2u);

  const std::vector<double> d2{2, 1, 1};
  const auto r2 = evaluate(dataset_from_deltas(d2), labels_only({P, N, P}));
  ASSERT_TRUE(r2.ratio.has_value());
  EXPECT_DOUBLE_EQ(*r2.ratio, (1.0 / 3.0) / 0.25);
}

TEST(Aggregate, ZeroVariance) {
  std::vector<MetricReport> reports(3);
  for (auto& r : reports) {
    r.nec = 0.05;
    r.error_rate = 0.05;
  }
  const auto a = aggregate(reports);
  EXPECT_DOUBLE_EQ(a.nec.mean, 0.05);
  EXPECT_EQ(a.nec.half_width, 0.0);
  EXPECT_EQ(a.n_seeds, 3u);
}

TEST(Aggregate, TwoSeedTInterval) {
  std::vector<MetricReport> reports(2);
  reports[0].nec = 0.04;
  reports[1].nec = 0.06;
  reports[0].error_rate = reports[1].error_rate = 0.1;
  const auto a = aggregate(reports);
  // t_{0.975,1} is the Cauchy quantile tan(0.475 pi); sd = 0.01 * sqrt(2).
  const double expected = oracle::cauchy_quantile_975() * (0.01 * std::sqrt(2.0)) / std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(a.nec.mean, 0.05);
  EXPECT_NEAR(a.nec.half_width, expected, 1e-12);
  EXPECT_NEAR(a.nec.half_width, 0.1271, 1e-4);
  ASSERT_TRUE(a.ratio.has_value());
  EXPECT_DOUBLE_EQ(*a.ratio, 0.1 / 0.05);
}

TEST(Aggregate, MaeOnlyWhenEveryReportHasIt) {
  std::vector<MetricReport> reports(2);
  reports[0].nec = reports[1].nec = 0.1;
  reports[0].delta_mae = 0.3;
  EXPECT_FALSE(aggregate(reports).delta_mae.has_value());
  reports[1].delta_mae = 0.5;
  ASSERT_TRUE(aggregate(reports).delta_mae.has_value());
  EXPECT_DOUBLE_EQ(aggregate(reports).delta_mae->mean, 0.4);
}

TEST(Aggregate, NeedsTwoReports) {
  std::vector<MetricReport> one(1);
  EXPECT_THROW(aggregate(one), std::invalid_argument);
}

TEST(TQuantile, KnownValues) {
  EXPECT_NEAR(t_quantile_975(1), oracle::cauchy_quantile_975(), 1e-10);
  EXPECT_NEAR(t_quantile_975(9), 2.262157, 1e-6);
  EXPECT_NEAR(t_quantile_975(1000000), 1.959964, 1e-5);
}

TEST(Aggregate, IntervalCoverageIsNear95Percent) {
  Pcg32 rng(2024);
  const double truth = 0.3;
  const int trials = 4000;
  int covered = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<MetricReport> reports(10);
    for (auto& r : reports) {
      r.nec = truth + 0.02 * rng.gaussian();
      r.error_rate = r.nec;
    }
    const auto a = aggregate(reports);
    covered += std::abs(a.nec.mean - truth) <= a.nec.half_width;
  }
  const double rate = static_cast<double>(covered) / trials;
  // 3 sigma band for a binomial(4000, 0.95) proportion.
  EXPECT_NEAR(rate, 0.95, 3.0 * std::sqrt(0.95 * 0.05 / trials));
}

TEST(Histogram, SymmetricSplit) {
  const std::vector<double> d{-1.0, 1.0};
  const auto h = delta_histogram(d, 2);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].count, 1u);
  EXPECT_EQ(h[1].count, 1u);
  EXPECT_EQ(h[0].low, -1.0);
  EXPECT_EQ(h[1].high, 1.0);
}

TEST(Histogram, DegenerateRangeIsWidened) {
  const std::vector<double> d{0.0, 0.0, 0.0};
  const auto h = delta_histogram(d, 1);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].count, 3u);
  EXPECT_EQ(h[0].low, 0.0);
  EXPECT_GT(h[0].high, 0.0);
}

TEST(Histogram, CountsAreConservedAndInsideEdges) {
  Pcg32 rng(8);
  std::vector<double> d(1000);
  for (auto& v : d) v = rng.gaussian() * 3.0;
  for (const std::size_t bins : {1u, 3u, 10u, 37u}) {
    const auto h = delta_histogram(d, bins);
    std::size_t total = 0;
    for (const auto& b : h) total += b.count;
    EXPECT_EQ(total, d.size());
    for (const double v : d) {
      std::size_t hits = 0;
      for (std::size_t b = 0; b < h.size(); ++b) {
        const bool last = b + 1 == h.size();
        hits += v >= h[b].low && (last ? v <= h[b].high : v < h[b].high);
      }
      EXPECT_EQ(hits, 1u);
    }
  }
}

TEST(Histogram, RejectsBadInput) {
  const std::vector<double> d{1.0};
  EXPECT_THROW(delta_histogram(d, 0), std::invalid_argument);
  EXPECT_THROW(delta_histogram(std::vector<double>{}, 3), std::invalid_argument);
}

TEST(NecProperties, ReductionAndScaleInvariance) {
  Pcg32 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.bounded(40);
    std::vector<double> d(n);
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = rng.gaussian();
      labels[i] = rng.uniform() < 0.5 ? P : N;
    }
    const double base = nec(d, labels);
    for (const double c : {0.01, 1.0, 100.0}) {
      std::vector<double> scaled(d);
      for (auto& v : scaled) v *= c;
      EXPECT_NEAR(nec(scaled, labels), base, 1e-14);
      EXPECT_EQ(error_rate(scaled, labels), error_rate(d, labels));
    }
    std::vector<double> uniform_cost(n);
    const double c = 0.5 + rng.uniform();
    for (std::size_t i = 0; i < n; ++i) uniform_cost[i] = d[i] < 0 ? -c : c;
    EXPECT_NEAR(nec(uniform_cost, labels), error_rate(uniform_cost, labels), 1e-12);
  }
}

TEST(NecProperties, MatchesBruteForceOnSmallSets) {
  Pcg32 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.bounded(8);
    std::vector<double> d(n);
    for (auto& v : d) v = rng.gaussian();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Label> labels(n);
      std::vector<int> ints(n);
      for (std::size_t i = 0; i < n; ++i) {
        ints[i] = (mask >> i) & 1u ? 1 : -1;
        labels[i] = label_from_int(ints[i]);
      }
      ASSERT_EQ(nec(d, labels), oracle::brute_force_nec(d, ints));
      ASSERT_EQ(error_rate(d, labels), oracle::brute_force_error_rate(d, ints));
    }
  }
}

TEST(NecProperties, RandomPredictorAveragesOneHalf) {
  Pcg32 rng(12);
  std::vector<double> d(2000);
  for (auto& v : d) v = rng.gaussian();
  const int reps = 400;
  double sum = 0.0;
  std::vector<Label> labels(d.size());
  for (int r = 0; r < reps; ++r) {
    for (auto& y : labels) y = rng.uniform() < 0.5 ? P : N;
    sum += nec(d, labels);
  }
  // Each draw has sd below 0.5 / sqrt(n_eff); n_eff >= 1000 for gaussian costs.
  const double sd_of_mean = 0.5 / std::sqrt(1000.0) / std::sqrt(static_cast<double>(reps));
  EXPECT_NEAR(sum / reps, 0.5, 3.0 * sd_of_mean);
}

}  // namespace
}  // namespace costsense
