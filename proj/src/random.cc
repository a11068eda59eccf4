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

#include "zeroe/random.h"

#include <bit>
#include <cassert>

namespace zeroe {
namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  state += RandomStream::kGolden;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream RandomStream::Derive(std::uint64_t seed,
                                  std::uint64_t sample_index) {
  RandomStream stream;
  stream.seed_ = seed;
  stream.sample_index_ = sample_index;
  std::uint64_t x = seed ^ (sample_index * kGolden);
  for (auto& word : stream.state_) word = SplitMix64(x);
  return stream;
}

std::uint64_t RandomStream::Next() {
  auto& s = state_;
  const std::uint64_t result = std::rotl(s[1] * 5, 7) * 9;
  const std::uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = std::rotl(s[3], 45);
  return result;
}

double RandomStream::NextUniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::NextBelow(std::uint64_t n) {
  assert(n >= 1);
  // 2^64 mod n; zero when n divides 2^64 and nothing needs rejecting.
  const std::uint64_t remainder = (0 - n) % n;
  const std::uint64_t limit = 0 - remainder;  // floor(2^64 / n) * n
  for (;;) {
    const std::uint64_t value = Next();
    if (remainder == 0 || value < limit) return value % n;
  }
}

}  // namespace zeroe
