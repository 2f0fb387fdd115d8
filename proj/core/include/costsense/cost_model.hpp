#pragma once

// Signed per-example costs.
//
// Every example carries a signed cost `delta` = reward(+1) - reward(-1).
// Its sign is the label and its magnitude is what a misclassification of
// that example costs. The functions here turn raw annotations into delta.

#include <cstdint>
#include <string_view>
#include <vector>

namespace costsense {

enum class Label : std::int8_t { kNegative = -1, kPositive = 1 };

inline constexpr int to_int(Label y) { return static_cast<int>(y); }
Label label_from_int(int value);

struct CostedExample {
  std::vector<double> features;
  double delta = 0.0;
};

struct VoteCount {
  std::uint64_t yes = 0;
  std::uint64_t no = 0;
};

struct RewardPair {
  double reward_neg = 0.0;
  double reward_pos = 0.0;
};

enum class RatingOrientation { kMidpointMinusScore, kScoreMinusMidpoint };

std::string_view to_string(RatingOrientation orientation);
RatingOrientation parse_rating_orientation(std::string_view text);

// Inclusive range a rating must fall in.
struct RatingScale {
  double min = 1.0;
  double max = 7.0;
  double midpoint = 4.0;
};

/// Laplace-smoothed vote log-odds, ln((yes + 1) / (no + 1)).
double votes_to_delta(VoteCount votes);

/// Distance of a measurement above its decision threshold. Throws
/// std::invalid_argument on non-finite input.
double threshold_to_delta(double measurement, double threshold);

/// Rating shifted by the scale midpoint. Throws std::invalid_argument when
/// the score is outside the scale or non-finite.
double rating_to_delta(double score, const RatingScale& scale,
                       RatingOrientation orientation);

double rewards_to_delta(RewardPair rewards);

/// sign(delta) with delta == 0 mapped to the positive class.
inline Label label_of(double delta) {
  return delta >= 0.0 ? Label::kPositive : Label::kNegative;
}

}  // namespace costsense
