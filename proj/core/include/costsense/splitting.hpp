#pragma once

// Stratified partitioning and subsampling. Stratification is on sign(delta);
// split sizes use largest-remainder rounding so they sum exactly to the
// group size and never miss their target by a whole example.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "costsense/dataset.hpp"

namespace costsense {

struct SplitSpec {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;
  bool stratify_on_sign = true;

  void validate() const;
};

struct DatasetSplit {
  Dataset train;
  Dataset validation;
  Dataset test;
};

// Example indices (ascending) behind each part of a split.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

/// Integer parts of `total` proportional to `fractions`, summing to `total`.
/// Remainders go to the largest fractional parts, earlier parts first on ties.
std::vector<std::size_t> largest_remainder(std::size_t total, std::span<const double> fractions);

/// Throws std::invalid_argument when a stratum has fewer than three examples
/// or any part would come out empty.
SplitIndices split_indices(const Dataset& dataset, const SplitSpec& spec);
DatasetSplit split(const Dataset& dataset, const SplitSpec& spec);

/// Sign-stratified uniform draw without replacement of n_target examples,
/// returned in original order. Throws when n_target exceeds the dataset.
Dataset subsample_train(const Dataset& train, std::size_t n_target, std::uint64_t seed);

// Per-feature affine map to mean 0, variance 1, fit on training data only.
// Constant features keep scale 1.
struct Standardizer {
  std::vector<double> means;
  std::vector<double> scales;

  static Standardizer fit(const Dataset& train);
  [[nodiscard]] Dataset apply(const Dataset& dataset) const;
};

}  // namespace costsense
