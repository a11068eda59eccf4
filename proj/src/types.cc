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

#include "zeroe/types.h"

#include <algorithm>
#include <cmath>

#include "zeroe/error.h"

namespace zeroe {

std::string_view FormatName(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kPlain:
      return "plain";
    case CorpusFormat::kTagged:
      return "tagged";
    case CorpusFormat::kPair:
      return "pair";
    case CorpusFormat::kMultilabel:
      return "multilabel";
  }
  return "plain";
}

std::optional<CorpusFormat> ParseFormat(std::string_view name) {
  for (auto format : {CorpusFormat::kPlain, CorpusFormat::kTagged,
                      CorpusFormat::kPair, CorpusFormat::kMultilabel}) {
    if (FormatName(format) == name) return format;
  }
  return std::nullopt;
}

std::string_view AttackName(AttackId id) {
  switch (id) {
    case AttackId::kInnerShuffle:
      return "inner-shuffle";
    case AttackId::kFullShuffle:
      return "full-shuffle";
    case AttackId::kIntrude:
      return "intrude";
    case AttackId::kDisemvowel:
      return "disemvowel";
    case AttackId::kTruncate:
      return "truncate";
    case AttackId::kSegment:
      return "segment";
    case AttackId::kKeyboardTypo:
      return "keyboard-typo";
    case AttackId::kNaturalTypo:
      return "natural-typo";
    case AttackId::kPhonetic:
      return "phonetic";
    case AttackId::kVisual:
      return "visual";
  }
  return "";
}

std::optional<AttackId> ParseAttack(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '_', '-');
  if (normalized == "typo") return AttackId::kKeyboardTypo;
  if (normalized == "natural-noise") return AttackId::kNaturalTypo;
  for (AttackId id : kAllAttacks) {
    if (AttackName(id) == normalized) return id;
  }
  return std::nullopt;
}

std::size_t Sample::TokenCount() const {
  std::size_t n = 0;
  for (const Text& text : texts) n += text.tokens.size();
  return n;
}

std::string Sample::JoinedText() const {
  std::string out;
  for (const Text& text : texts) {
    for (const Token& token : text.tokens) {
      if (!out.empty()) out.push_back(' ');
      out += token.text;
    }
  }
  return out;
}

Sample MakePlainSample(const std::vector<std::string>& tokens) {
  Sample sample;
  sample.kind = CorpusFormat::kPlain;
  Text text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    text.tokens.push_back({tokens[i], i});
  }
  sample.texts.push_back(std::move(text));
  return sample;
}

void PerturbationConfig::Validate() const {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(p)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  }
  if (phi && !in_unit(*phi)) {
    throw Error(ErrorCode::kInvalidArgument, "phi must lie in [0, 1]");
  }
}

}  // namespace zeroe
