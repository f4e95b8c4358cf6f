// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#include "benford/random.hpp"

#include <cmath>

namespace benford {

namespace {

// Fixed-increment SplitMix64 (Vigna 2015). Used only for state expansion.
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += kGoldenGamma);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : seed_(seed) {
  // SplittableRandom-style substream naming: offset the SplitMix64 state by
  // index gammas, then draw the four xoshiro words.
  std::uint64_t s = seed + index * kGoldenGamma;
  for (auto& word : state_) word = splitmix64(s);
  // xoshiro's one forbidden state; cannot occur through SplitMix64 in
  // practice but the guard is free.
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RandomStream::next_u64() {
  // xoshiro256++ 1.0 (Blackman & Vigna).
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_unit_positive() {
  double u;
  do {
    u = next_double();
  } while (u == 0.0);
  return u;
}

double RandomStream::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

}  // namespace benford
