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

// Checkers for the per-attack output properties, shared by the unit and
// acceptance suites. Each returns a description of the first violation, or
// nullopt when the output is consistent with the input.

#ifndef ZEROE_TESTS_ATTACK_INVARIANTS_H_
#define ZEROE_TESTS_ATTACK_INVARIANTS_H_

#include <algorithm>
#include <optional>
#include <string>

#include "zeroe/attacks.h"
#include "zeroe/phonetics.h"
#include "zeroe/random.h"
#include "zeroe/types.h"
#include "zeroe/unicode.h"
#include "zeroe/visual.h"

namespace zeroe::test_util {

using Violation = std::optional<std::string>;

inline std::u32string RandomWord(RandomStream& stream, std::size_t min_len,
                                 std::size_t max_len,
                                 std::u32string_view alphabet) {
  const std::size_t len = min_len + stream.NextBelow(max_len - min_len + 1);
  std::u32string word;
  for (std::size_t i = 0; i < len; ++i) {
    word.push_back(alphabet[stream.NextBelow(alphabet.size())]);
  }
  return word;
}

inline std::string Show(std::u32string_view in, std::u32string_view out) {
  return "'" + EncodeUtf8(in) + "' -> '" + EncodeUtf8(out) + "'";
}

inline Violation CheckShuffle(std::u32string_view in, std::u32string_view out,
                              bool inner) {
  std::u32string a(in);
  std::u32string b(out);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return "multiset changed: " + Show(in, out);
  if (inner && !in.empty() &&
      (in.front() != out.front() || in.back() != out.back())) {
    return "endpoint moved: " + Show(in, out);
  }
  return std::nullopt;
}

inline Violation CheckTruncate(std::u32string_view in, std::u32string_view out) {
  if (out.size() + 1 != in.size() || in.substr(0, out.size()) != out) {
    return "not the one-shorter prefix: " + Show(in, out);
  }
  return std::nullopt;
}

inline Violation CheckDisemvowel(std::u32string_view in,
                                 std::u32string_view out) {
  std::u32string consonants;
  for (char32_t c : in) {
    if (!IsVowel(c)) consonants.push_back(c);
  }
  if (std::any_of(out.begin(), out.end(), IsVowel)) {
    return "vowel survived: " + Show(in, out);
  }
  if (consonants != out) return "consonants disturbed: " + Show(in, out);
  return std::nullopt;
}

inline Violation CheckIntrude(std::u32string_view in, std::u32string_view out,
                              bool allow_space) {
  if (out.size() <= in.size()) return "nothing inserted: " + Show(in, out);
  for (char32_t symbol : kIntruderAlphabet) {
    if (in.find(symbol) != std::u32string_view::npos) continue;
    std::u32string stripped(out);
    std::erase(stripped, symbol);
    if (stripped == in) {
      if (!allow_space && symbol == U' ') return "space intruder: " + Show(in, out);
      return std::nullopt;
    }
  }
  return "no single symbol strips back to the input: " + Show(in, out);
}

inline Violation CheckKeyboard(std::u32string_view in, std::u32string_view out) {
  if (in.size() != out.size()) return "length changed: " + Show(in, out);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == out[i]) continue;
    if (!IsAsciiAlpha(in[i])) return "non-letter changed: " + Show(in, out);
    const auto& neighbors = KeyboardLayout::Neighbors(in[i]);
    const char32_t lower = AsciiToLower(out[i]);
    if (std::find(neighbors.begin(), neighbors.end(), lower) == neighbors.end()) {
      return "not a keyboard neighbor: " + Show(in, out);
    }
    if (IsAsciiUpper(in[i]) != IsAsciiUpper(out[i])) {
      return "case not preserved: " + Show(in, out);
    }
  }
  return std::nullopt;
}

inline Violation CheckVisual(std::u32string_view in, std::u32string_view out,
                             const NeighborTable& table) {
  if (in.size() != out.size()) return "length changed: " + Show(in, out);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == out[i]) continue;
    const auto* neighbors = table.Find(in[i]);
    if (neighbors == nullptr ||
        std::find(neighbors->begin(), neighbors->end(), out[i]) ==
            neighbors->end()) {
      return "not a listed neighbor: " + Show(in, out);
    }
  }
  return std::nullopt;
}

inline Violation CheckNatural(std::string_view in, std::string_view out,
                              const TypoDictionary& dict) {
  if (in == out) return std::nullopt;
  const auto* variants = dict.Find(in);
  if (variants == nullptr ||
      std::find(variants->begin(), variants->end(), out) == variants->end()) {
    return "'" + std::string(out) + "' is not a variant of '" +
           std::string(in) + "'";
  }
  return std::nullopt;
}

inline Violation CheckPhonetic(std::string_view in, std::string_view out,
                               const PhoneticDictionary& dict) {
  if (in == out) return std::nullopt;
  const auto distance = ComputePhonemeDistance(dict.G2p(in), dict.G2p(out));
  if (Classify(distance.delta) > SimilarityClass::kVerySimilar) {
    return "'" + std::string(in) + "' -> '" + std::string(out) + "' is " +
           std::string(SimilarityClassName(Classify(distance.delta)));
  }
  return std::nullopt;
}

inline std::string Concatenated(const Sample& sample) {
  std::string out;
  for (const Text& text : sample.texts) {
    for (const Token& token : text.tokens) out += token.text;
  }
  return out;
}

inline Violation CheckSegment(const Sample& in, const Sample& out) {
  if (in.texts.size() != out.texts.size()) return "text count changed";
  for (std::size_t t = 0; t < in.texts.size(); ++t) {
    Sample a;
    a.texts = {in.texts[t]};
    Sample b;
    b.texts = {out.texts[t]};
    if (Concatenated(a) != Concatenated(b)) {
      return "concatenation changed: '" + in.JoinedText() + "' -> '" +
             out.JoinedText() + "'";
    }
    if (out.texts[t].tokens.size() > in.texts[t].tokens.size()) {
      return "segment split a token";
    }
  }
  return std::nullopt;
}

}  // namespace zeroe::test_util

#endif  // ZEROE_TESTS_ATTACK_INVARIANTS_H_
