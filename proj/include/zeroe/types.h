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

// Domain types shared across the attack pipeline.

#ifndef ZEROE_TYPES_H_
#define ZEROE_TYPES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zeroe {

enum class CorpusFormat { kPlain, kTagged, kPair, kMultilabel };

std::string_view FormatName(CorpusFormat format);
std::optional<CorpusFormat> ParseFormat(std::string_view name);

enum class AttackId {
  kInnerShuffle,
  kFullShuffle,
  kIntrude,
  kDisemvowel,
  kTruncate,
  kSegment,
  kKeyboardTypo,
  kNaturalTypo,
  kPhonetic,
  kVisual,
};

inline constexpr std::array<AttackId, 10> kAllAttacks = {
    AttackId::kInnerShuffle, AttackId::kFullShuffle, AttackId::kIntrude,
    AttackId::kDisemvowel,   AttackId::kTruncate,    AttackId::kSegment,
    AttackId::kKeyboardTypo, AttackId::kNaturalTypo, AttackId::kPhonetic,
    AttackId::kVisual,
};

// Canonical hyphenated CLI name, e.g. "inner-shuffle".
std::string_view AttackName(AttackId id);

// Accepts canonical names plus underscore spellings and the aliases
// "typo" (keyboard-typo) and "natural-noise" (natural-typo).
std::optional<AttackId> ParseAttack(std::string_view name);

struct Token {
  std::string text;  // UTF-8, never empty after parsing
  std::size_t original_index = 0;

  bool operator==(const Token&) const = default;
};

// One whitespace-tokenized text. `gaps` holds the whitespace found before,
// between and after tokens (size tokens+1) so untouched text is written
// back byte for byte; an empty `gaps` means single spaces.
struct Text {
  std::vector<Token> tokens;
  std::vector<std::string> gaps;

  bool operator==(const Text&) const = default;
};

// One attackable unit. Plain, tagged and multilabel samples hold a single
// text; pair samples hold premise and hypothesis. `labels` carries the
// multilabel label set, or the single relation label of a pair.
struct Sample {
  CorpusFormat kind = CorpusFormat::kPlain;
  std::vector<Text> texts;
  std::vector<std::string> tags;
  std::vector<std::string> labels;

  std::size_t TokenCount() const;
  // All tokens, space-joined, texts concatenated in order.
  std::string JoinedText() const;

  bool operator==(const Sample&) const = default;
};

Sample MakePlainSample(const std::vector<std::string>& tokens);

struct PerturbationConfig {
  AttackId attack = AttackId::kInnerShuffle;
  double p = 0.0;
  std::optional<double> phi;  // unset means phi = p
  std::uint64_t seed = 0;
  std::map<std::string, std::string> resources;

  double EffectivePhi() const { return phi.value_or(p); }
  // Throws Error(kInvalidArgument) unless 0 <= p, phi <= 1.
  void Validate() const;
};

struct AttackReport {
  std::uint64_t samples_total = 0;
  std::uint64_t tokens_total = 0;
  std::uint64_t tokens_attacked = 0;
  std::uint64_t tokens_modified = 0;
  double mean_norm_edit_distance = 0.0;
};

}  // namespace zeroe

#endif  // ZEROE_TYPES_H_
