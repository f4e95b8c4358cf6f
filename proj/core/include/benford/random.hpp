// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace benford {

/// Seeded deterministic random source; the single origin of all
/// stochasticity in this library.
///
/// Core generator is xoshiro256++ (256-bit state). Any 64-bit seed is
/// expanded into a full state through SplitMix64, and substreams for
/// parallel work are derived from (seed, index) with the SplittableRandom
/// golden-gamma construction, so every (seed, index) pair names one fixed,
/// reproducible sequence.
///
/// Integer and uniform outputs are bit-exact across platforms. Normal
/// deviates use the Marsaglia polar method (one spare cached per pair),
/// which additionally depends on libm's log/sqrt; identical libm implies
/// identical sequences.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0) {}

  /// Independent stream deterministically derived from (seed(), index).
  /// The parent stream is not advanced.
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(seed_, index);
  }

  std::uint64_t next_u64();

  /// Uniform on [0,1) with 53 random bits.
  double next_double();

  /// Uniform on (0,1); zero draws are rejected and redrawn.
  double next_unit_positive();

  /// Standard normal deviate (Marsaglia polar method).
  double next_normal();

  std::uint64_t seed() const { return seed_; }

 private:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace benford
