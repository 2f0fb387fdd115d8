#include "costsense/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace costsense {

namespace {
constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
}

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream)
    : inc_((stream << 1u) | 1u) {
  next();
  state_ += seed;
  next();
}

std::uint32_t Pcg32::next() {
  const std::uint64_t old = state_;
  state_ = old * kMultiplier + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

std::uint64_t Pcg32::next64() {
  const std::uint64_t hi = next();
  const std::uint64_t lo = next();
  return (hi << 32u) | lo;
}

double Pcg32::uniform() {
  return static_cast<double>(next64() >> 11u) * 0x1.0p-53;
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("Pcg32::bounded: bound must be positive");
  // Lemire's multiply-shift with rejection.
  std::uint64_t m = static_cast<std::uint64_t>(next()) * bound;
  auto low = static_cast<std::uint32_t>(m);
  if (low < bound) {
    const std::uint32_t threshold = (-bound) % bound;
    while (low < threshold) {
      m = static_cast<std::uint64_t>(next()) * bound;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32u);
}

double Pcg32::gaussian() {
  if (spare_gaussian_) {
    const double z = *spare_gaussian_;
    spare_gaussian_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_gaussian_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30u)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27u)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31u);
}

void shuffle(std::span<std::size_t> values, Pcg32& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = rng.bounded(static_cast<std::uint32_t>(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace costsense
