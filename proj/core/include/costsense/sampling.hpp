#pragma once

// Cost-driven changes to the training distribution. Both transforms work
// within each class (sign of delta) so class balance is preserved.

#include <cstdint>
#include <string>
#include <string_view>

#include "costsense/dataset.hpp"

namespace costsense {

struct SamplingStrategy {
  enum class Kind { kUniform, kProportionalUp, kTopK };
  Kind kind = Kind::kUniform;
  int k_percent = 100;  // only for kTopK

  static SamplingStrategy uniform() { return {}; }
  static SamplingStrategy proportional_up() { return {Kind::kProportionalUp, 100}; }
  static SamplingStrategy top_k(int k_percent);

  // "uniform", "p_up", "tdown<k>"
  static SamplingStrategy parse(std::string_view name);
  [[nodiscard]] std::string name() const;
};

struct SamplingPlan {
  SamplingStrategy strategy;
  std::uint64_t seed = 0;
};

/// Within each class, draws as many examples as the class holds, with
/// replacement, picking example i with probability |delta_i| / sum |delta|.
/// Each draw lands in the slot of an example of the same class, so the output
/// keeps the input's class layout. Throws std::invalid_argument if a
/// non-empty class has zero total |delta|.
Dataset p_up_resample(const Dataset& dataset, std::uint64_t seed);

/// Within each class, keeps the ceil(k/100 * n_class) examples with the
/// largest |delta| (ties by original index). Output keeps input order.
/// Throws std::invalid_argument for k outside [1, 100] or an empty class.
Dataset tdown_filter(const Dataset& dataset, int k_percent);

inline Dataset uniform_passthrough(const Dataset& dataset) { return dataset; }

Dataset apply(const SamplingPlan& plan, const Dataset& dataset);

}  // namespace costsense
