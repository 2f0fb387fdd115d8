#include "costsense/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "costsense/random.hpp"

namespace costsense {

namespace {

constexpr Label kClasses[] = {Label::kNegative, Label::kPositive};

std::vector<std::vector<std::size_t>> strata(const Dataset& dataset, bool stratify) {
  if (!stratify) {
    std::vector<std::size_t> all(dataset.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return {std::move(all)};
  }
  std::vector<std::vector<std::size_t>> out;
  for (const Label y : kClasses) out.push_back(dataset.indices_of(y));
  return out;
}

}  // namespace

void SplitSpec::validate() const {
  for (const double f : {train, validation, test}) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw std::invalid_argument("split fractions must be positive");
    }
  }
  if (std::abs(train + validation + test - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must sum to 1");
  }
}

std::vector<std::size_t> largest_remainder(std::size_t total, std::span<const double> fractions) {
  std::vector<std::size_t> parts(fractions.size());
  std::vector<double> remainders(fractions.size());
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    const double quota = fractions[k] * static_cast<double>(total);
    parts[k] = static_cast<std::size_t>(std::floor(quota));
    remainders[k] = quota - static_cast<double>(parts[k]);
    assigned += parts[k];
  }
  if (assigned > total) throw std::invalid_argument("largest_remainder: fractions exceed 1");
  std::vector<std::size_t> order(fractions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t k = 0; assigned < total; k = (k + 1) % order.size(), ++assigned) {
    ++parts[order[k]];
  }
  return parts;
}

SplitIndices split_indices(const Dataset& dataset, const SplitSpec& spec) {
  spec.validate();
  const std::array<double, 3> fractions{spec.train, spec.validation, spec.test};
  auto rng = make_rng(spec.seed, Stream::kSplit);

  SplitIndices out;
  for (auto& members : strata(dataset, spec.stratify_on_sign)) {
    if (members.empty() && spec.stratify_on_sign) continue;
    if (members.size() < 3) {
      throw std::invalid_argument("split: a stratum of " + std::to_string(members.size()) +
                                  " examples cannot populate train, validation and test");
    }
    shuffle(members, rng);
    const auto sizes = largest_remainder(members.size(), fractions);
    auto it = members.begin();
    for (auto [part, size] : {std::pair{&out.train, sizes[0]}, std::pair{&out.validation, sizes[1]},
                              std::pair{&out.test, sizes[2]}}) {
      part->insert(part->end(), it, it + static_cast<long>(size));
      it += static_cast<long>(size);
    }
  }
  for (auto* part : {&out.train, &out.validation, &out.test}) {
    if (part->empty()) throw std::invalid_argument("split: a partition would be empty");
    std::sort(part->begin(), part->end());
  }
  return out;
}

DatasetSplit split(const Dataset& dataset, const SplitSpec& spec) {
  const auto idx = split_indices(dataset, spec);
  return {dataset.subset(idx.train), dataset.subset(idx.validation), dataset.subset(idx.test)};
}

Dataset subsample_train(const Dataset& train, std::size_t n_target, std::uint64_t seed) {
  if (n_target == 0) throw std::invalid_argument("subsample_train: n_target must be positive");
  if (n_target > train.size()) {
    throw std::invalid_argument("subsample_train: n_target " + std::to_string(n_target) +
                                " exceeds training size " + std::to_string(train.size()));
  }
  auto rng = make_rng(seed, Stream::kSubsample);
  const auto n = static_cast<double>(train.size());
  const std::array<double, 2> shares{static_cast<double>(train.count(Label::kNegative)) / n,
                                     static_cast<double>(train.count(Label::kPositive)) / n};
  const auto quotas = largest_remainder(n_target, shares);

  std::vector<std::size_t> kept;
  kept.reserve(n_target);
  for (std::size_t c = 0; c < 2; ++c) {
    auto members = train.indices_of(kClasses[c]);
    shuffle(members, rng);
    kept.insert(kept.end(), members.begin(), members.begin() + static_cast<long>(quotas[c]));
  }
  std::sort(kept.begin(), kept.end());
  return train.subset(kept);
}

Standardizer Standardizer::fit(const Dataset& train) {
  if (train.empty()) throw std::invalid_argument("Standardizer::fit: empty dataset");
  const std::size_t d = train.dim();
  const auto n = static_cast<double>(train.size());
  Standardizer s{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  for (const auto& ex : train.examples()) {
    for (std::size_t j = 0; j < d; ++j) s.means[j] += ex.features[j];
  }
  for (double& m : s.means) m /= n;
  for (const auto& ex : train.examples()) {
    for (std::size_t j = 0; j < d; ++j) {
      const double c = ex.features[j] - s.means[j];
      s.scales[j] += c * c;
    }
  }
  for (double& v : s.scales) {
    v = std::sqrt(v / n);
    if (!(v > 0.0)) v = 1.0;
  }
  return s;
}

Dataset Standardizer::apply(const Dataset& dataset) const {
  if (!dataset.empty() && dataset.dim() != means.size()) {
    throw std::invalid_argument("Standardizer::apply: dimension mismatch");
  }
  Dataset out(dataset.name(), dataset.source());
  out.reserve(dataset.size());
  for (const auto& ex : dataset.examples()) {
    CostedExample scaled = ex;
    for (std::size_t j = 0; j < means.size(); ++j) {
      scaled.features[j] = (ex.features[j] - means[j]) / scales[j];
    }
    out.add(std::move(scaled));
  }
  return out;
}

}  // namespace costsense
