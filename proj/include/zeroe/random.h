// Copyright 2026 The Zeroe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEROE_RANDOM_H_
#define ZEROE_RANDOM_H_

#include <array>
#include <cstdint>

namespace zeroe {

// xoshiro256** stream seeded per (global seed, sample index). The seeding
// is part of the output format: four successive splitmix64 outputs starting
// from seed ^ (sample_index * 0x9E3779B97F4A7C15).
//
// A stream is owned by the processing of one sample; it is not thread-safe.
class RandomStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static RandomStream Derive(std::uint64_t seed, std::uint64_t sample_index);

  // Raw 64-bit xoshiro256** output.
  std::uint64_t Next();

  // (Next() >> 11) * 2^-53, in [0, 1).
  double NextUniform();

  // Unbiased draw from [0, n) by rejection. Requires n >= 1.
  std::uint64_t NextBelow(std::uint64_t n);

  // Coin with tail probability p: true iff NextUniform() < p.
  bool Bernoulli(double p) { return NextUniform() < p; }

  const std::array<std::uint64_t, 4>& state() const { return state_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t sample_index() const { return sample_index_; }

 private:
  RandomStream() = default;

  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  std::uint64_t sample_index_ = 0;
};

}  // namespace zeroe

#endif  // ZEROE_RANDOM_H_
