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

// Token selection: which tokens of a sample an attack touches, and how
// many it is allowed to touch.

#ifndef ZEROE_PROTOCOL_H_
#define ZEROE_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zeroe/attacks.h"
#include "zeroe/random.h"
#include "zeroe/types.h"

namespace zeroe {

// round-half-up(p * n).
std::size_t TargetCount(std::size_t n, double p);

// Indices are positions in the sample's flattened token sequence (premise
// tokens first for pairs).
struct SelectionTrace {
  std::vector<std::size_t> drawn_indices;
  std::vector<std::size_t> attacked_indices;
  std::size_t target_count = 0;
};

struct ProtocolResult {
  Sample sample;
  SelectionTrace trace;
  std::size_t tokens_modified = 0;
  std::size_t missing_glyphs = 0;
};

// Draws unvisited indices uniformly, flips a p-coin per draw and perturbs
// eligible tokens until the target is reached or indices run out. Segment
// runs its own boundary process instead; there the trace's target is the
// number of boundaries and the attacked indices are the merged tokens.
// Throws kSegmentOnTagged.
ProtocolResult RunProtocol(const Sample& sample, double p,
                           const Attacker& attacker, RandomStream& stream);

// RunProtocol on the stream derived from (config.seed, sample_index).
ProtocolResult PerturbSample(const Sample& sample, std::uint64_t sample_index,
                             const PerturbationConfig& config,
                             const Attacker& attacker);

}  // namespace zeroe

#endif  // ZEROE_PROTOCOL_H_
