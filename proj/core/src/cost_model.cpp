#include "costsense/cost_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace costsense {

Label label_from_int(int value) {
  if (value == 1) return Label::kPositive;
  if (value == -1) return Label::kNegative;
  throw std::invalid_argument("label must be -1 or +1, got " + std::to_string(value));
}

std::string_view to_string(RatingOrientation orientation) {
  switch (orientation) {
    case RatingOrientation::kMidpointMinusScore:
      return "midpoint_minus_score";
    case RatingOrientation::kScoreMinusMidpoint:
      return "score_minus_midpoint";
  }
  return "unknown";
}

RatingOrientation parse_rating_orientation(std::string_view text) {
  if (text == "midpoint_minus_score") return RatingOrientation::kMidpointMinusScore;
  if (text == "score_minus_midpoint") return RatingOrientation::kScoreMinusMidpoint;
  throw std::invalid_argument("unknown rating orientation '" + std::string(text) + "'");
}

double votes_to_delta(VoteCount votes) {
  return std::log(static_cast<double>(votes.yes) + 1.0) -
         std::log(static_cast<double>(votes.no) + 1.0);
}

double threshold_to_delta(double measurement, double threshold) {
  if (!std::isfinite(measurement) || !std::isfinite(threshold)) {
    throw std::invalid_argument("threshold_to_delta: non-finite input");
  }
  return measurement - threshold;
}

double rating_to_delta(double score, const RatingScale& scale,
                       RatingOrientation orientation) {
  if (!std::isfinite(score) || score < scale.min || score > scale.max) {
    throw std::invalid_argument("rating " + std::to_string(score) + " outside scale [" +
                                std::to_string(scale.min) + ", " +
                                std::to_string(scale.max) + "]");
  }
  return orientation == RatingOrientation::kMidpointMinusScore ? scale.midpoint - score
                                                               : score - scale.midpoint;
}

double rewards_to_delta(RewardPair rewards) {
  return rewards.reward_pos - rewards.reward_neg;
}

}  // namespace costsense
