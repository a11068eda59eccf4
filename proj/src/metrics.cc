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

#include "zeroe/metrics.h"

#include <algorithm>
#include <string>

#include "zeroe/edit_distance.h"
#include "zeroe/error.h"
#include "zeroe/random.h"
#include "zeroe/unicode.h"

namespace zeroe {

double RelativeScore(const ScoreRecord& record) {
  if (!(record.clean > 0.0)) {
    throw Error(ErrorCode::kZeroCleanScore, "clean score must be positive");
  }
  return record.attacked / record.clean;
}

double DefenseDelta(const ScoreRecord& record) {
  if (!record.shielded) {
    throw Error(ErrorCode::kMissingShieldedScore, "shielded score missing");
  }
  if (!(record.clean > 0.0)) {
    throw Error(ErrorCode::kZeroCleanScore, "clean score must be positive");
  }
  return *record.shielded / record.clean - record.attacked / record.clean;
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  const std::u32string x = DecodeUtf8(a);
  const std::u32string y = DecodeUtf8(b);
  return EditDistance<char32_t>(x, y);
}

double SampleMagnitude(const Sample& clean, const Sample& perturbed) {
  const std::string before = clean.JoinedText();
  const std::string after = perturbed.JoinedText();
  const std::size_t length = ScalarCount(before);
  return static_cast<double>(Levenshtein(before, after)) /
         static_cast<double>(std::max<std::size_t>(1, length));
}

double CorpusMagnitude(std::span<const Sample> clean,
                       std::span<const Sample> perturbed) {
  if (clean.size() != perturbed.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "corpora have " + std::to_string(clean.size()) + " and " +
                    std::to_string(perturbed.size()) + " samples");
  }
  if (clean.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    sum += SampleMagnitude(clean[i], perturbed[i]);
  }
  return sum / static_cast<double>(clean.size());
}

std::size_t TokenEditDistance(const Sample& clean, const Sample& perturbed) {
  auto flatten = [](const Sample& sample) {
    std::vector<std::string_view> out;
    for (const Text& text : sample.texts) {
      for (const Token& token : text.tokens) out.push_back(token.text);
    }
    return out;
  };
  const auto a = flatten(clean);
  const auto b = flatten(perturbed);
  return EditDistance<std::string_view>(a, b);
}

void ReportBuilder::Add(const Sample& clean, const Sample& perturbed,
                        std::size_t tokens_attacked,
                        std::size_t tokens_modified) {
  Add(clean.TokenCount(), tokens_attacked, tokens_modified,
      tokens_modified > 0 ? SampleMagnitude(clean, perturbed) : 0.0);
}

void ReportBuilder::Add(std::size_t tokens_total, std::size_t tokens_attacked,
                        std::size_t tokens_modified, double magnitude) {
  ++report_.samples_total;
  report_.tokens_total += tokens_total;
  report_.tokens_attacked += tokens_attacked;
  report_.tokens_modified += tokens_modified;
  magnitude_sum_ += magnitude;
}

AttackReport ReportBuilder::Build() const {
  AttackReport out = report_;
  out.mean_norm_edit_distance =
      out.samples_total == 0
          ? 0.0
          : magnitude_sum_ / static_cast<double>(out.samples_total);
  return out;
}

MixturePicker::MixturePicker(std::vector<MixtureSource> sources,
                             MixtureMode mode, std::optional<AttackId> excluded,
                             std::uint64_t seed)
    : sources_(std::move(sources)), seed_(seed) {
  if (mode == MixtureMode::kLevels) {
    for (const auto& source : sources_) {
      if (source.attack != sources_.front().attack) {
        throw Error(ErrorCode::kInvalidArgument,
                    "levels mixtures take the levels of a single attacker");
      }
    }
    for (std::size_t i = 0; i < sources_.size(); ++i) eligible_.push_back(i);
  } else {
    if (!excluded) {
      throw Error(ErrorCode::kExcludedAttackerAbsent,
                  "leave-one-out mixtures need an excluded attacker");
    }
    const bool present =
        std::any_of(sources_.begin(), sources_.end(),
                    [&](const MixtureSource& s) { return s.attack == *excluded; });
    if (!present) {
      throw Error(ErrorCode::kExcludedAttackerAbsent,
                  "excluded attacker " + std::string(AttackName(*excluded)) +
                      " is not among the sources");
    }
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      if (sources_[i].attack != *excluded) eligible_.push_back(i);
    }
  }
  if (eligible_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no sources to mix");
  }
}

std::size_t MixturePicker::Pick(std::uint64_t sample_index) const {
  RandomStream stream = RandomStream::Derive(seed_, sample_index);
  return eligible_[stream.NextBelow(eligible_.size())];
}

MixtureResult BuildMixture(std::span<const MixtureSource> sources,
                           std::span<const std::vector<Sample>> corpora,
                           MixtureMode mode, std::optional<AttackId> excluded,
                           std::uint64_t seed) {
  if (sources.size() != corpora.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one corpus is needed per mixture source");
  }
  MixturePicker picker({sources.begin(), sources.end()}, mode, excluded, seed);
  const std::size_t n = corpora.empty() ? 0 : corpora.front().size();
  for (const auto& corpus : corpora) {
    if (corpus.size() != n) {
      throw Error(ErrorCode::kMisalignment,
                  "mixture corpora differ in sample count");
    }
  }
  MixtureResult result;
  result.samples.reserve(n);
  result.picks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& corpus : corpora) {
      if (corpus[i].kind != corpora.front()[i].kind) {
        throw Error::AtSample(ErrorCode::kMisalignment, i,
                              "mixture corpora differ in sample kind");
      }
    }
    const std::size_t pick = picker.Pick(i);
    result.samples.push_back(corpora[pick][i]);
    result.picks.push_back(pick);
  }
  return result;
}

}  // namespace zeroe
