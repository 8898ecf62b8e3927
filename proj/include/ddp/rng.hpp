// Copyright 2026 The ddp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace ddp {

/// splitmix64: a counter-based 64-bit generator.  The state is a plain
/// counter advanced by a fixed odd constant, and each output is a bijective
/// avalanche mix of the counter, so `discard` is O(1) and independent streams
/// are just independently seeded counters.  Perfect reproducibility across
/// platforms; not cryptographic.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }

  result_type operator()() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Skips n draws in O(1): the state is a counter.
  void discard(std::uint64_t n) { state_ += n * kGamma; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Stateless finalizer used to hash (seed, stream, substream) into a starting
// counter.  Same avalanche as the generator output stage.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives an independent named stream from a master seed.  Streams with
// different (stream, substream) tags never share state, so releases, Monte
// Carlo replicas, and synthetic-data draws cannot collide even under the same
// master seed.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t substream = 0) {
  std::uint64_t s = mix64(seed + SplitMix64::kGamma * (stream + 1));
  s = mix64(s ^ (substream * SplitMix64::kGamma + 0xd1b54a32d192ed03ull));
  return SplitMix64{s};
}

// Uniform on the open interval (0, 1): top 53 bits, centered on half-ulps so
// neither endpoint is reachable.
inline double uniform_unit(SplitMix64& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform on the open interval (-1/2, 1/2).
inline double uniform_symmetric(SplitMix64& g) { return uniform_unit(g) - 0.5; }

// Inverse-CDF map from u in (-1/2, 1/2) to Laplace(0, scale).  Kept separate
// from the sampler so the transform can be tested without a generator.
inline double laplace_from_uniform(double u, double scale) {
  const double log_tail = std::log(1.0 - 2.0 * std::abs(u));
  return u < 0.0 ? scale * log_tail : -scale * log_tail;
}

inline double sample_laplace(SplitMix64& g, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("sample_laplace: scale must be finite and > 0");
  }
  return laplace_from_uniform(uniform_symmetric(g), scale);
}

// Box-Muller, one draw per call (the sibling draw is discarded for
// simplicity; synthetic-data generation is not performance critical).
inline double sample_normal(SplitMix64& g, double mean, double stddev) {
  if (!(stddev >= 0.0) || !std::isfinite(stddev)) {
    throw std::invalid_argument("sample_normal: stddev must be finite and >= 0");
  }
  const double u1 = uniform_unit(g);
  const double u2 = uniform_unit(g);
  return mean + stddev * std::sqrt(-2.0 * std::log(u1)) *
                    std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace ddp
