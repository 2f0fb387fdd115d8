#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "costsense/cost_model.hpp"
#include "costsense/random.hpp"

namespace costsense {
namespace {

TEST(VotesToDelta, SpotValues) {
  EXPECT_EQ(votes_to_delta({5, 5}), 0.0);
  EXPECT_NEAR(votes_to_delta({10, 0}), std::log(11.0), 1e-15);
  EXPECT_NEAR(votes_to_delta({10, 0}), 2.3979, 1e-4);
  EXPECT_NEAR(votes_to_delta({1, 9}), std::log(2.0 / 10.0), 1e-15);
  EXPECT_NEAR(votes_to_delta({1, 9}), -1.6094, 1e-4);
  EXPECT_EQ(votes_to_delta({0, 0}), 0.0);
}

TEST(VotesToDelta, AntisymmetricAndMonotone) {
  for (std::uint64_t a = 0; a < 30; ++a) {
    for (std::uint64_t b = 0; b < 30; ++b) {
      EXPECT_EQ(votes_to_delta({a, b}), -votes_to_delta({b, a}));
      EXPECT_LT(votes_to_delta({a, b}), votes_to_delta({a + 1, b}));
    }
  }
}

TEST(VotesToDelta, UnanimousBeatsAnySplitOfSameTotal) {
  for (std::uint64_t total = 1; total <= 40; ++total) {
    const double unanimous = std::abs(votes_to_delta({total, 0}));
    for (std::uint64_t yes = 1; yes < total; ++yes) {
      EXPECT_GT(unanimous, std::abs(votes_to_delta({yes, total - yes})));
    }
  }
}

TEST(ThresholdToDelta, Values) {
  EXPECT_EQ(threshold_to_delta(150, 130), 20);
  EXPECT_EQ(threshold_to_delta(130, 130), 0);
  EXPECT_EQ(threshold_to_delta(100, 130), -30);
}

TEST(ThresholdToDelta, RejectsNonFinite) {
  EXPECT_THROW(threshold_to_delta(std::numeric_limits<double>::quiet_NaN(), 1.0),
               std::invalid_argument);
  EXPECT_THROW(threshold_to_delta(1.0, std::numeric_limits<double>::infinity()),
               std::invalid_argument);
}

TEST(RatingToDelta, Values) {
  const RatingScale seven{1.0, 7.0, 4.0};
  EXPECT_EQ(rating_to_delta(1, seven, RatingOrientation::kMidpointMinusScore), 3);
  EXPECT_EQ(rating_to_delta(7, seven, RatingOrientation::kMidpointMinusScore), -3);
  EXPECT_EQ(rating_to_delta(7, seven, RatingOrientation::kScoreMinusMidpoint), 3);
  EXPECT_EQ(rating_to_delta(4, seven, RatingOrientation::kMidpointMinusScore), 0);
  EXPECT_EQ(rating_to_delta(4, seven, RatingOrientation::kScoreMinusMidpoint), 0);
}

TEST(RatingToDelta, RejectsOutOfScale) {
  const RatingScale five{1.0, 5.0, 3.0};
  EXPECT_THROW(rating_to_delta(0, five, RatingOrientation::kMidpointMinusScore),
               std::invalid_argument);
  EXPECT_THROW(rating_to_delta(6, five, RatingOrientation::kMidpointMinusScore),
               std::invalid_argument);
}

TEST(RatingOrientation, ParsesNames) {
  EXPECT_EQ(parse_rating_orientation("midpoint_minus_score"),
            RatingOrientation::kMidpointMinusScore);
  EXPECT_EQ(to_string(parse_rating_orientation("score_minus_midpoint")),
            "score_minus_midpoint");
  EXPECT_THROW(parse_rating_orientation("upside_down"), std::invalid_argument);
}

TEST(RewardsToDelta, Values) {
  EXPECT_EQ(rewards_to_delta({0, 0}), 0);
  EXPECT_EQ(rewards_to_delta({1, 3}), 2);
  EXPECT_EQ(rewards_to_delta({3, 1}), -2);
}

TEST(ExactArithmetic, MatchesDirectRecomputation) {
  Pcg32 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.gaussian() * 100.0;
    const double b = rng.gaussian() * 100.0;
    EXPECT_EQ(threshold_to_delta(a, b), a - b);
    EXPECT_EQ(rewards_to_delta({b, a}), a - b);
  }
}

TEST(LabelOf, SignConvention) {
  EXPECT_EQ(label_of(2.3979), Label::kPositive);
  EXPECT_EQ(label_of(-1.6094), Label::kNegative);
  EXPECT_EQ(label_of(0.0), Label::kPositive);
  EXPECT_EQ(label_of(-0.0), Label::kPositive);
}

TEST(LabelOf, InvariantUnderPositiveScaling) {
  Pcg32 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.gaussian();
    for (const double c : {1e-3, 0.5, 1.0, 7.0, 1e6}) EXPECT_EQ(label_of(c * d), label_of(d));
  }
}

TEST(LabelFromInt, AcceptsOnlyPlusMinusOne) {
  EXPECT_EQ(label_from_int(1), Label::kPositive);
  EXPECT_EQ(label_from_int(-1), Label::kNegative);
  EXPECT_THROW(label_from_int(0), std::invalid_argument);
}

}  // namespace
}  // namespace costsense
