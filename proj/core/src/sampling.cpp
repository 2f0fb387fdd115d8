#include "costsense/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "costsense/random.hpp"
#include "costsense/text.hpp"

namespace costsense {

namespace {
constexpr Label kClasses[] = {Label::kNegative, Label::kPositive};
}

SamplingStrategy SamplingStrategy::top_k(int k_percent) {
  if (k_percent < 1 || k_percent > 100) {
    throw std::invalid_argument("tdown k must be in [1, 100], got " + std::to_string(k_percent));
  }
  return {Kind::kTopK, k_percent};
}

SamplingStrategy SamplingStrategy::parse(std::string_view name) {
  if (name == "uniform") return uniform();
  if (name == "p_up") return proportional_up();
  if (name.starts_with("tdown")) {
    return top_k(static_cast<int>(text::parse_int(name.substr(5), "tdown percentage")));
  }
  throw std::invalid_argument("unknown sampling strategy '" + std::string(name) + "'");
}

std::string SamplingStrategy::name() const {
  switch (kind) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kProportionalUp:
      return "p_up";
    case Kind::kTopK:
      return "tdown" + std::to_string(k_percent);
  }
  return "unknown";
}

Dataset p_up_resample(const Dataset& dataset, std::uint64_t seed) {
  auto rng = make_rng(seed, Stream::kResample);
  std::vector<std::size_t> chosen(dataset.size());
  for (const Label y : kClasses) {
    const auto members = dataset.indices_of(y);
    if (members.empty()) continue;
    std::vector<double> cumulative;
    cumulative.reserve(members.size());
    double total = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const double cost = std::abs(dataset[members[k]].delta);
      total += cost;
      cumulative.push_back(total);
      if (cost > 0.0) last_positive = k;
    }
    if (!(total > 0.0)) {
      throw std::invalid_argument("p_up: class " + std::to_string(to_int(y)) +
                                  " has zero total |delta|");
    }
    for (const std::size_t slot : members) {
      const double target = rng.uniform() * total;
      auto pos = static_cast<std::size_t>(
          std::upper_bound(cumulative.begin(), cumulative.end(), target) - cumulative.begin());
      pos = std::min(pos, last_positive);
      chosen[slot] = members[pos];
    }
  }
  return dataset.subset(chosen);
}

Dataset tdown_filter(const Dataset& dataset, int k_percent) {
  const auto strategy = SamplingStrategy::top_k(k_percent);
  std::vector<std::size_t> kept;
  for (const Label y : kClasses) {
    auto members = dataset.indices_of(y);
    if (members.empty()) {
      throw std::invalid_argument("tdown: class " + std::to_string(to_int(y)) + " is empty");
    }
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(dataset[a].delta) > std::abs(dataset[b].delta);
    });
    // ceil(k * n / 100) in integers
    const std::size_t keep =
        (static_cast<std::size_t>(strategy.k_percent) * members.size() + 99) / 100;
    kept.insert(kept.end(), members.begin(), members.begin() + static_cast<long>(keep));
  }
  std::sort(kept.begin(), kept.end());
  return dataset.subset(kept);
}

Dataset apply(const SamplingPlan& plan, const Dataset& dataset) {
  switch (plan.strategy.kind) {
    case SamplingStrategy::Kind::kUniform:
      return uniform_passthrough(dataset);
    case SamplingStrategy::Kind::kProportionalUp:
      return p_up_resample(dataset, plan.seed);
    case SamplingStrategy::Kind::kTopK:
      return tdown_filter(dataset, plan.strategy.k_percent);
  }
  return dataset;
}

}  // namespace costsense
