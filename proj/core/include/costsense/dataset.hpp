#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costsense/cost_model.hpp"

namespace costsense {

enum class CostSource { kVotes, kThreshold, kRating, kRewards, kSynthetic, kPrecomputed };

std::string_view to_string(CostSource source);

// Ordered examples sharing one feature dimension. The dimension is fixed by
// the first example added; class counts are maintained as examples arrive.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::string name, CostSource source) : name_(std::move(name)), source_(source) {}

  // Throws std::invalid_argument on dimension mismatch or non-finite values.
  void add(CostedExample example);
  void reserve(std::size_t n) { examples_.reserve(n); }

  [[nodiscard]] std::size_t size() const { return examples_.size(); }
  [[nodiscard]] bool empty() const { return examples_.empty(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const CostedExample& operator[](std::size_t i) const { return examples_[i]; }
  [[nodiscard]] std::span<const CostedExample> examples() const { return examples_; }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] CostSource source() const { return source_; }
  void set_name(std::string name) { name_ = std::move(name); }

  [[nodiscard]] std::size_t count(Label y) const {
    return class_counts_[y == Label::kPositive ? 1 : 0];
  }
  [[nodiscard]] Label label(std::size_t i) const { return label_of(examples_[i].delta); }
  [[nodiscard]] std::vector<double> deltas() const;
  // Indices of examples in class y, ascending.
  [[nodiscard]] std::vector<std::size_t> indices_of(Label y) const;

  // Examples at the given indices, in the given order (repeats allowed).
  [[nodiscard]] Dataset subset(std::span<const std::size_t> indices) const;

 private:
  std::string name_;
  CostSource source_ = CostSource::kPrecomputed;
  std::vector<CostedExample> examples_;
  std::size_t dim_ = 0;
  std::array<std::size_t, 2> class_counts_{0, 0};
};

}  // namespace costsense
