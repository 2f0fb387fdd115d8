#include "costsense/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "costsense/random.hpp"

namespace costsense {

void SyntheticConfig::validate() const {
  if (n < 1) throw std::invalid_argument("synthetic n must be at least 1");
  if (dim < 1) throw std::invalid_argument("synthetic dim must be at least 1");
  if (!(weight_norm > 0.0) || !std::isfinite(weight_norm)) {
    throw std::invalid_argument("synthetic weight_norm must be positive");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw std::invalid_argument("synthetic noise_sigma must be non-negative");
  }
}

SyntheticData generate(const SyntheticConfig& cfg) {
  cfg.validate();
  auto rng = make_rng(cfg.seed, Stream::kSynthetic);

  SyntheticData out;
  out.true_weights.resize(cfg.dim);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double& w : out.true_weights) {
      w = rng.gaussian();
      norm_sq += w * w;
    }
  } while (!(norm_sq > 0.0));
  const double scale = cfg.weight_norm / std::sqrt(norm_sq);
  for (double& w : out.true_weights) w *= scale;

  out.dataset = Dataset("synthetic", CostSource::kSynthetic);
  out.dataset.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    CostedExample ex;
    ex.features.resize(cfg.dim);
    double signal = 0.0;
    for (std::size_t j = 0; j < cfg.dim; ++j) {
      ex.features[j] = rng.gaussian();
      signal += out.true_weights[j] * ex.features[j];
    }
    ex.delta = signal + cfg.noise_sigma * rng.gaussian();
    out.dataset.add(std::move(ex));
  }
  return out;
}

}  // namespace costsense
