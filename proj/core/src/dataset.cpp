#include "costsense/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace costsense {

std::string_view to_string(CostSource source) {
  switch (source) {
    case CostSource::kVotes:
      return "votes";
    case CostSource::kThreshold:
      return "threshold";
    case CostSource::kRating:
      return "rating";
    case CostSource::kRewards:
      return "rewards";
    case CostSource::kSynthetic:
      return "synthetic";
    case CostSource::kPrecomputed:
      return "precomputed";
  }
  return "unknown";
}

void Dataset::add(CostedExample example) {
  if (examples_.empty()) {
    dim_ = example.features.size();
  } else if (example.features.size() != dim_) {
    throw std::invalid_argument("feature dimension " + std::to_string(example.features.size()) +
                                " does not match dataset dimension " + std::to_string(dim_));
  }
  if (!std::isfinite(example.delta)) {
    throw std::invalid_argument("delta must be finite");
  }
  if (!std::all_of(example.features.begin(), example.features.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("features must be finite");
  }
  ++class_counts_[label_of(example.delta) == Label::kPositive ? 1 : 0];
  examples_.push_back(std::move(example));
}

std::vector<double> Dataset::deltas() const {
  std::vector<double> out;
  out.reserve(examples_.size());
  for (const auto& ex : examples_) out.push_back(ex.delta);
  return out;
}

std::vector<std::size_t> Dataset::indices_of(Label y) const {
  std::vector<std::size_t> out;
  out.reserve(count(y));
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    if (label(i) == y) out.push_back(i);
  }
  return out;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out(name_, source_);
  out.dim_ = dim_;
  out.examples_.reserve(indices.size());
  for (const std::size_t i : indices) {
    if (i >= examples_.size()) throw std::out_of_range("Dataset::subset: index out of range");
    ++out.class_counts_[label(i) == Label::kPositive ? 1 : 0];
    out.examples_.push_back(examples_[i]);
  }
  return out;
}

}  // namespace costsense
