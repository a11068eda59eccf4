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

// Score arithmetic, edit-distance magnitudes and adversarial-training
// mixtures.

#ifndef ZEROE_METRICS_H_
#define ZEROE_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zeroe/types.h"

namespace zeroe {

struct ScoreRecord {
  double clean = 0.0;     // s(0)
  double attacked = 0.0;  // s(p)
  std::optional<double> shielded;
  double level = 0.0;
};

// attacked / clean. Throws kZeroCleanScore when clean <= 0.
double RelativeScore(const ScoreRecord& record);

// shielded / clean - attacked / clean. Throws kMissingShieldedScore or
// kZeroCleanScore.
double DefenseDelta(const ScoreRecord& record);

// Unit-cost edit distance over Unicode scalar values of two UTF-8 strings.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// levenshtein(clean, perturbed) / max(1, |clean|) over space-joined text.
double SampleMagnitude(const Sample& clean, const Sample& perturbed);

// Mean SampleMagnitude. Throws kLengthMismatch on unequal sample counts.
double CorpusMagnitude(std::span<const Sample> clean,
                       std::span<const Sample> perturbed);

// Edit distance over token strings (all texts flattened).
std::size_t TokenEditDistance(const Sample& clean, const Sample& perturbed);

class ReportBuilder {
 public:
  void Add(const Sample& clean, const Sample& perturbed,
           std::size_t tokens_attacked, std::size_t tokens_modified);
  // Same, with the sample's SampleMagnitude already computed.
  void Add(std::size_t tokens_total, std::size_t tokens_attacked,
           std::size_t tokens_modified, double magnitude);
  AttackReport Build() const;

 private:
  AttackReport report_;
  double magnitude_sum_ = 0.0;
};

enum class MixtureMode { kLevels, kLeaveOneOut };

struct MixtureSource {
  AttackId attack = AttackId::kInnerShuffle;
  double level = 0.0;
};

// Chooses, per sample index, which source version enters the mixture.
// Levels mode draws uniformly over all sources, which must share one
// attacker. Leave-one-out mode draws uniformly over the sources whose
// attacker differs from `excluded`.
class MixturePicker {
 public:
  // Throws kExcludedAttackerAbsent when `excluded` is missing or names no
  // source, kInvalidArgument when levels-mode sources mix attackers or
  // nothing is left to draw from.
  MixturePicker(std::vector<MixtureSource> sources, MixtureMode mode,
                std::optional<AttackId> excluded, std::uint64_t seed);

  // Index into the constructor's source list. Pure in (seed, sample_index).
  std::size_t Pick(std::uint64_t sample_index) const;

  const std::vector<std::size_t>& eligible() const { return eligible_; }

 private:
  std::vector<MixtureSource> sources_;
  std::vector<std::size_t> eligible_;
  std::uint64_t seed_;
};

struct MixtureResult {
  std::vector<Sample> samples;
  std::vector<std::size_t> picks;  // source index per sample
};

// Throws kMisalignment when corpora differ in length or sample kind, plus
// the MixturePicker errors.
MixtureResult BuildMixture(std::span<const MixtureSource> sources,
                           std::span<const std::vector<Sample>> corpora,
                           MixtureMode mode, std::optional<AttackId> excluded,
                           std::uint64_t seed);

}  // namespace zeroe

#endif  // ZEROE_METRICS_H_
