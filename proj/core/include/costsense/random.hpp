#pragma once

// Portable seeded randomness.
//
// Everything that consumes randomness in this library goes through Pcg32
// (O'Neill's PCG-XSH-RR with 64-bit state and 32-bit output) and the
// helpers below. None of the <random> distributions are used, because their
// output is implementation-defined; these helpers produce the same stream on
// every platform and compiler. Gaussian draws use the Box-Muller transform,
// consuming two uniforms per pair and returning both values in order.
//
// The algorithm is fixed for the lifetime of the project. Changing it changes
// every generated dataset, split, and resample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace costsense {

inline constexpr std::string_view kGeneratorName =
    "pcg32 (PCG-XSH-RR 64/32), Box-Muller gaussian, Lemire bounded ints";

class Pcg32 {
 public:
  Pcg32(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next();
  std::uint64_t next64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer on [0, bound); bound must be > 0.
  std::uint32_t bounded(std::uint32_t bound);
  // Standard normal.
  double gaussian();

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
  std::optional<double> spare_gaussian_;
};

// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Fisher-Yates with Pcg32::bounded.
void shuffle(std::span<std::size_t> values, Pcg32& rng);

// Stream ids keep the consumers of one experiment seed independent.
enum class Stream : std::uint64_t {
  kSynthetic = 1,
  kSplit = 2,
  kResample = 3,
  kSubsample = 4,
  kEvalNoise = 5,
};

inline Pcg32 make_rng(std::uint64_t seed, Stream stream) {
  return Pcg32(seed, static_cast<std::uint64_t>(stream));
}

}  // namespace costsense
