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

#include "zeroe/attacks.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "zeroe/error.h"
#include "zeroe/unicode.h"

namespace zeroe {
namespace {

constexpr int kMaxShuffleRedraws = 16;

// Uniform permutation of word[begin, end), Fisher-Yates from the top index
// down.
void FisherYates(std::u32string& word, std::size_t begin, std::size_t end,
                 RandomStream& stream) {
  for (std::size_t i = end - begin; i-- > 1;) {
    const auto j = static_cast<std::size_t>(stream.NextBelow(i + 1));
    std::swap(word[begin + i], word[begin + j]);
  }
}

std::u32string ShuffleRange(std::u32string_view word, std::size_t begin,
                            std::size_t end, RandomStream& stream,
                            bool allow_identity) {
  std::u32string out(word);
  if (end <= begin + 1) return out;
  FisherYates(out, begin, end, stream);
  const auto range = word.substr(begin, end - begin);
  const bool distinct =
      std::any_of(range.begin(), range.end(),
                  [&](char32_t c) { return c != range.front(); });
  if (allow_identity || !distinct) return out;
  for (int redraw = 0; redraw < kMaxShuffleRedraws && out == word; ++redraw) {
    out.assign(word);
    FisherYates(out, begin, end, stream);
  }
  return out;
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

// Re-applies the casing pattern of `original` to a lowercase respelling.
std::string MatchCase(std::string_view original, std::string candidate) {
  const bool first_upper = !original.empty() && original[0] >= 'A' && original[0] <= 'Z';
  std::size_t letters = 0;
  std::size_t uppers = 0;
  for (char c : original) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) ++letters;
    if (c >= 'A' && c <= 'Z') ++uppers;
  }
  if (letters >= 2 && uppers == letters) {
    for (char& c : candidate) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
  } else if (first_upper && !candidate.empty() && candidate[0] >= 'a' &&
             candidate[0] <= 'z') {
    candidate[0] = static_cast<char>(candidate[0] - 'a' + 'A');
  }
  return candidate;
}

}  // namespace

const std::vector<char32_t>& KeyboardLayout::Neighbors(char32_t letter) {
  static const std::array<std::vector<char32_t>, 26> table = [] {
    std::array<std::vector<char32_t>, 26> out;
    for (int r = 0; r < static_cast<int>(kRows.size()); ++r) {
      for (int c = 0; c < static_cast<int>(kRows[r].size()); ++c) {
        auto& list = out[kRows[r][c] - 'a'];
        for (int rr = r - 1; rr <= r + 1; ++rr) {
          if (rr < 0 || rr >= static_cast<int>(kRows.size())) continue;
          for (int cc = c - 1; cc <= c + 1; ++cc) {
            if (cc < 0 || cc >= static_cast<int>(kRows[rr].size())) continue;
            if (rr == r && cc == c) continue;
            list.push_back(static_cast<char32_t>(kRows[rr][cc]));
          }
        }
      }
    }
    return out;
  }();
  static const std::vector<char32_t> kNone;
  const char32_t lower = AsciiToLower(letter);
  return IsAsciiLower(lower) ? table[lower - U'a'] : kNone;
}

TypoDictionary TypoDictionary::Parse(std::istream& in) {
  TypoDictionary dict;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw.front() == '#') continue;
    const auto tab = raw.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == raw.size() ||
        raw.find('\t', tab + 1) != std::string::npos) {
      throw Error::Parse(line_no, "expected word<TAB>variant");
    }
    if (!TryDecodeUtf8(raw)) throw Error::Parse(line_no, "invalid UTF-8");
    dict.Add(std::string_view(raw).substr(0, tab),
             std::string_view(raw).substr(tab + 1));
  }
  return dict;
}

void TypoDictionary::Add(std::string_view word, std::string_view variant) {
  const std::string key = AsciiLower(word);
  if (variant == key || variant == word) return;
  auto& list = variants_[key];
  if (std::find(list.begin(), list.end(), variant) == list.end()) {
    list.emplace_back(variant);
  }
}

const std::vector<std::string>* TypoDictionary::Find(std::string_view word) const {
  auto it = variants_.find(AsciiLower(word));
  return it == variants_.end() ? nullptr : &it->second;
}

bool IsVowel(char32_t c) {
  switch (AsciiToLower(c)) {
    case U'a':
    case U'e':
    case U'i':
    case U'o':
    case U'u':
      return true;
    default:
      return false;
  }
}

bool IsEligible(AttackId id, std::u32string_view word) {
  const std::size_t n = word.size();
  switch (id) {
    case AttackId::kInnerShuffle:
    case AttackId::kIntrude:
    case AttackId::kTruncate:
      return n >= 3;
    case AttackId::kFullShuffle:
      return n >= 2;
    case AttackId::kDisemvowel:
      return n > 3 && !std::all_of(word.begin(), word.end(), IsVowel);
    case AttackId::kSegment:
    case AttackId::kKeyboardTypo:
    case AttackId::kNaturalTypo:
    case AttackId::kPhonetic:
    case AttackId::kVisual:
      return n >= 1;
  }
  return false;
}

std::u32string InnerShuffle(std::u32string_view word, RandomStream& stream,
                            bool allow_identity) {
  if (word.size() < 3) return std::u32string(word);
  return ShuffleRange(word, 1, word.size() - 1, stream, allow_identity);
}

std::u32string FullShuffle(std::u32string_view word, RandomStream& stream,
                           bool allow_identity) {
  return ShuffleRange(word, 0, word.size(), stream, allow_identity);
}

std::u32string Intrude(std::u32string_view word, double phi,
                       RandomStream& stream, bool allow_space) {
  if (word.size() < 2) return std::u32string(word);
  std::vector<char32_t> alphabet(kIntruderAlphabet.begin(), kIntruderAlphabet.end());
  if (!allow_space) std::erase(alphabet, U' ');
  std::vector<char32_t> unused;
  for (char32_t symbol : alphabet) {
    if (word.find(symbol) == std::u32string_view::npos) unused.push_back(symbol);
  }
  const auto& pool = unused.empty() ? alphabet : unused;
  const char32_t symbol = pool[stream.NextBelow(pool.size())];

  const std::size_t gaps = word.size() - 1;
  std::vector<bool> fire(gaps, false);
  bool any = false;
  for (std::size_t g = 0; g < gaps; ++g) {
    fire[g] = stream.Bernoulli(phi);
    any = any || fire[g];
  }
  if (!any) fire[stream.NextBelow(gaps)] = true;

  std::u32string out;
  out.reserve(word.size() * 2);
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.push_back(word[i]);
    if (i < gaps && fire[i]) out.push_back(symbol);
  }
  return out;
}

std::u32string Disemvowel(std::u32string_view word) {
  if (!IsEligible(AttackId::kDisemvowel, word)) return std::u32string(word);
  std::u32string out;
  for (char32_t c : word) {
    if (!IsVowel(c)) out.push_back(c);
  }
  return out;
}

std::u32string Truncate(std::u32string_view word) {
  if (word.size() < 3) return std::u32string(word);
  return std::u32string(word.substr(0, word.size() - 1));
}

std::u32string KeyboardTypo(std::u32string_view word, double phi,
                            RandomStream& stream) {
  std::u32string out(word);
  for (char32_t& c : out) {
    if (!IsAsciiAlpha(c) || !stream.Bernoulli(phi)) continue;
    const auto& neighbors = KeyboardLayout::Neighbors(c);
    const char32_t pick = neighbors[stream.NextBelow(neighbors.size())];
    c = IsAsciiUpper(c) ? AsciiToUpper(pick) : pick;
  }
  return out;
}

std::string NaturalTypo(std::string_view word, const TypoDictionary& dict,
                        RandomStream& stream) {
  const auto* variants = dict.Find(word);
  if (variants == nullptr || variants->empty()) return std::string(word);
  return (*variants)[stream.NextBelow(variants->size())];
}

std::string PhoneticAttack(std::string_view word,
                           const PhoneticDictionary& dict,
                           RandomStream& stream) {
  const auto candidates = dict.Candidates(word);
  if (candidates.empty()) return std::string(word);
  const PhonemeSequence original = dict.G2p(word);
  std::vector<std::string> survivors;
  for (const auto& candidate : candidates) {
    const auto distance = ComputePhonemeDistance(original, dict.G2p(candidate));
    if (Classify(distance.delta) > SimilarityClass::kVerySimilar) continue;
    std::string cased = MatchCase(word, candidate);
    if (cased != word) survivors.push_back(std::move(cased));
  }
  if (survivors.empty()) return std::string(word);
  return survivors[stream.NextBelow(survivors.size())];
}

std::u32string VisualAttack(std::u32string_view word, double phi,
                            const NeighborTable& table, RandomStream& stream,
                            std::size_t* missing) {
  std::u32string out(word);
  for (char32_t& c : out) {
    const auto* neighbors = table.Find(c);
    if (neighbors == nullptr || neighbors->empty()) {
      if (missing != nullptr && !IsSpace(c)) ++*missing;
      continue;
    }
    if (stream.Bernoulli(phi)) c = (*neighbors)[stream.NextBelow(neighbors->size())];
  }
  return out;
}

SegmentResult Segment(const Sample& sample, double phi, RandomStream& stream) {
  if (sample.kind == CorpusFormat::kTagged) {
    throw Error(ErrorCode::kSegmentOnTagged,
                "segment cannot be applied to tagged corpora");
  }
  SegmentResult result;
  result.sample = sample;
  std::size_t flat_offset = 0;
  for (std::size_t t = 0; t < sample.texts.size(); ++t) {
    const Text& in = sample.texts[t];
    Text& out = result.sample.texts[t];
    const std::size_t n = in.tokens.size();
    const bool keep_gaps = in.gaps.size() == n + 1;
    out.tokens.clear();
    out.gaps.clear();
    if (n == 0) {
      out = in;
      continue;
    }
    out.tokens.push_back(in.tokens[0]);
    if (keep_gaps) out.gaps.push_back(in.gaps[0]);
    int run = 1;
    for (std::size_t i = 1; i < n; ++i) {
      ++result.boundaries;
      if (stream.Bernoulli(std::pow(phi, run))) {
        out.tokens.back().text += in.tokens[i].text;
        result.merged.push_back(flat_offset + i);
        ++run;
      } else {
        if (keep_gaps) out.gaps.push_back(in.gaps[i]);
        out.tokens.push_back(in.tokens[i]);
        run = 1;
      }
    }
    if (keep_gaps) out.gaps.push_back(in.gaps[n]);
    flat_offset += n;
  }
  return result;
}

Attacker::Attacker(AttackId id, double phi, AttackResources resources,
                   AttackOptions options)
    : id_(id), phi_(phi), resources_(resources), options_(options) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "phi must lie in [0, 1]");
  }
  if (id == AttackId::kNaturalTypo && resources.typos == nullptr) {
    throw Error(ErrorCode::kMissingResource,
                "natural-typo needs a typo dictionary");
  }
  if (id == AttackId::kPhonetic && resources.phonetics == nullptr) {
    throw Error(ErrorCode::kMissingResource,
                "phonetic needs a pronunciation dictionary");
  }
  if (id == AttackId::kVisual && resources.visual == nullptr) {
    throw Error(ErrorCode::kMissingResource, "visual needs a neighbor table");
  }
}

std::string Attacker::Perturb(std::string_view word, RandomStream& stream,
                              PerturbContext& context) const {
  switch (id_) {
    case AttackId::kNaturalTypo:
      return NaturalTypo(word, *resources_.typos, stream);
    case AttackId::kPhonetic:
      return PhoneticAttack(word, *resources_.phonetics, stream);
    case AttackId::kSegment:
      throw Error(ErrorCode::kInvalidArgument,
                  "segment is a sample-level attack");
    default:
      break;
  }
  const std::u32string scalars = DecodeUtf8(word);
  std::u32string out;
  switch (id_) {
    case AttackId::kInnerShuffle:
      out = InnerShuffle(scalars, stream, options_.allow_identity_shuffle);
      break;
    case AttackId::kFullShuffle:
      out = FullShuffle(scalars, stream, options_.allow_identity_shuffle);
      break;
    case AttackId::kIntrude:
      out = Intrude(scalars, phi_, stream, /*allow_space=*/!context.tagged);
      break;
    case AttackId::kDisemvowel:
      out = Disemvowel(scalars);
      break;
    case AttackId::kTruncate:
      out = Truncate(scalars);
      break;
    case AttackId::kKeyboardTypo:
      out = KeyboardTypo(scalars, phi_, stream);
      break;
    case AttackId::kVisual:
      out = VisualAttack(scalars, phi_, *resources_.visual, stream,
                         &context.missing_glyphs);
      break;
    default:
      std::abort();
  }
  return EncodeUtf8(out);
}

}  // namespace zeroe
