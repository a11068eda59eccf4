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

#include "zeroe/protocol.h"

#include <cmath>
#include <utility>

#include "zeroe/error.h"
#include "zeroe/unicode.h"

namespace zeroe {

std::size_t TargetCount(std::size_t n, double p) {
  // The epsilon keeps products such as 0.5 * 5 from landing just below the
  // half-way point.
  return static_cast<std::size_t>(
      std::floor(p * static_cast<double>(n) + 0.5 + 1e-9));
}

namespace {

ProtocolResult RunSegment(const Sample& sample, double p,
                          const Attacker& attacker, RandomStream& stream) {
  ProtocolResult result;
  if (p <= 0.0) {
    result.sample = sample;
    return result;
  }
  SegmentResult segmented = Segment(sample, attacker.phi(), stream);
  result.sample = std::move(segmented.sample);
  result.trace.target_count = segmented.boundaries;
  std::size_t offset = 0;
  for (const Text& text : sample.texts) {
    for (std::size_t i = 1; i < text.tokens.size(); ++i) {
      result.trace.drawn_indices.push_back(offset + i);
    }
    offset += text.tokens.size();
  }
  result.trace.attacked_indices = std::move(segmented.merged);
  result.tokens_modified = result.trace.attacked_indices.size();
  return result;
}

}  // namespace

ProtocolResult RunProtocol(const Sample& sample, double p,
                           const Attacker& attacker, RandomStream& stream) {
  if (attacker.id() == AttackId::kSegment) {
    if (sample.kind == CorpusFormat::kTagged) {
      throw Error(ErrorCode::kSegmentOnTagged,
                  "segment cannot be applied to tagged corpora");
    }
    return RunSegment(sample, p, attacker, stream);
  }

  std::vector<Token*> flat;
  ProtocolResult result;
  result.sample = sample;
  for (Text& text : result.sample.texts) {
    for (Token& token : text.tokens) flat.push_back(&token);
  }
  const std::size_t n = flat.size();
  SelectionTrace& trace = result.trace;
  trace.target_count = TargetCount(n, p);
  if (trace.target_count == 0) return result;

  PerturbContext context;
  context.tagged = sample.kind == CorpusFormat::kTagged;
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  while (trace.attacked_indices.size() < trace.target_count &&
         !remaining.empty()) {
    const auto j = static_cast<std::size_t>(stream.NextBelow(remaining.size()));
    const std::size_t index = remaining[j];
    remaining[j] = remaining.back();
    remaining.pop_back();
    trace.drawn_indices.push_back(index);
    if (!stream.Bernoulli(p)) continue;
    Token& token = *flat[index];
    if (!attacker.IsEligible(DecodeUtf8(token.text))) continue;
    std::string perturbed = attacker.Perturb(token.text, stream, context);
    if (perturbed != token.text) ++result.tokens_modified;
    token.text = std::move(perturbed);
    trace.attacked_indices.push_back(index);
  }
  result.missing_glyphs = context.missing_glyphs;
  return result;
}

ProtocolResult PerturbSample(const Sample& sample, std::uint64_t sample_index,
                             const PerturbationConfig& config,
                             const Attacker& attacker) {
  RandomStream stream = RandomStream::Derive(config.seed, sample_index);
  return RunProtocol(sample, config.p, attacker, stream);
}

}  // namespace zeroe
