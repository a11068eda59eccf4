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

// Pronunciation lookup, phoneme-level edit distance and the four-way
// similarity binning used to filter phonetic respellings.

#ifndef ZEROE_PHONETICS_H_
#define ZEROE_PHONETICS_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zeroe {

// ARPAbet-style symbols, uppercase, stress digits stripped.
struct PhonemeSequence {
  std::vector<std::string> phonemes;

  std::size_t size() const { return phonemes.size(); }
  bool empty() const { return phonemes.empty(); }
  std::string ToString() const;

  bool operator==(const PhonemeSequence&) const = default;
};

enum class SimilarityClass { kIdentical, kVerySimilar, kSimilar, kDifferent };

std::string_view SimilarityClassName(SimilarityClass c);

struct PhonemeDistance {
  std::size_t edits = 0;  // Levenshtein distance over phoneme symbols
  double delta = 0.0;     // edits / min(|p1|, |p2|); may exceed 1
  double similarity() const { return 1.0 - delta; }
};

// Throws Error(kEmptySequence) if either side is empty.
PhonemeDistance ComputePhonemeDistance(const PhonemeSequence& p1,
                                       const PhonemeSequence& p2);

// Half-open bins over normalized distance: identical at 0, very similar
// below 0.1, similar below 0.3, different from 0.3 on.
SimilarityClass Classify(double delta);

// One letter-to-sound rule. `pattern` is lowercase letters, optionally
// anchored with a leading '^' or trailing '$'.
struct G2pRule {
  std::string pattern;
  std::vector<std::string> phonemes;  // empty: silent
};

// One respelling rule. Uppercase 'C' / 'V' in the pattern match any
// consonant / vowel letter; the same placeholders in the replacement copy
// the matched letters back in order.
struct RespellRule {
  std::string pattern;
  std::string replacement;
};

std::vector<G2pRule> ParseG2pRules(std::istream& in);
std::vector<RespellRule> ParseRespellRules(std::istream& in);

// Pronunciations, homophone groups and the two rule tables. Immutable
// after loading; safe to share across threads.
class PhoneticDictionary {
 public:
  PhoneticDictionary() = default;

  // Builtin pronunciations, homophones and rule tables.
  static PhoneticDictionary Builtin();

  // `WORD  PH1 PH2 ...` lines; ";;;" comments. Alternate pronunciations
  // ("WORD(2)") are ignored; the first one wins.
  void LoadPronunciations(std::istream& in);
  // Comma-separated groups, one per line.
  void LoadHomophones(std::istream& in);
  void SetG2pRules(std::vector<G2pRule> rules);
  void SetRespellRules(std::vector<RespellRule> rules);

  void AddPronunciation(std::string_view word, PhonemeSequence phonemes);
  void AddHomophoneGroup(std::vector<std::string> group);

  // Dictionary lookup (ASCII-case-insensitive), else the rule pass.
  // Throws Error(kEmptyWord) on "".
  PhonemeSequence G2p(std::string_view word) const;
  PhonemeSequence RulePronunciation(std::string_view word) const;

  // Homophone co-members plus single-site rule respellings, lowercase,
  // deduplicated, without the word itself, sorted.
  std::vector<std::string> Candidates(std::string_view word) const;

  const std::vector<std::vector<std::string>>& homophone_groups() const {
    return groups_;
  }
  bool Contains(std::string_view word) const;
  std::size_t size() const { return pronunciations_.size(); }

 private:
  std::unordered_map<std::string, PhonemeSequence> pronunciations_;
  std::vector<std::vector<std::string>> groups_;
  std::unordered_map<std::string, std::vector<std::size_t>> group_index_;
  std::vector<G2pRule> g2p_rules_;
  std::vector<RespellRule> respell_rules_;
};

}  // namespace zeroe

#endif  // ZEROE_PHONETICS_H_
