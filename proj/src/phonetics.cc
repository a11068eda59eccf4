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

#include "zeroe/phonetics.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "zeroe/edit_distance.h"
#include "zeroe/error.h"
#include "zeroe/resources.h"
#include "zeroe/unicode.h"

namespace zeroe {
namespace {

bool IsVowelLetter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsConsonantLetter(char c) {
  return c >= 'a' && c <= 'z' && !IsVowelLetter(c);
}

std::string_view TrimCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

// Splits `pattern<TAB>replacement`; the replacement may be empty.
template <typename Fn>
void ForEachRuleLine(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = TrimCr(raw);
    if (Trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error::Parse(line_no, "expected pattern<TAB>replacement");
    }
    std::string_view pattern = Trim(line.substr(0, tab));
    if (pattern.empty() || pattern == "^" || pattern == "$") {
      throw Error::Parse(line_no, "empty rule pattern");
    }
    fn(line_no, pattern, Trim(line.substr(tab + 1)));
  }
}

struct AnchoredPattern {
  bool at_start = false;
  bool at_end = false;
  std::string_view body;
};

AnchoredPattern SplitAnchors(std::string_view pattern) {
  AnchoredPattern out;
  if (!pattern.empty() && pattern.front() == '^') {
    out.at_start = true;
    pattern.remove_prefix(1);
  }
  if (!pattern.empty() && pattern.back() == '$') {
    out.at_end = true;
    pattern.remove_suffix(1);
  }
  out.body = pattern;
  return out;
}

// Matches a respelling pattern body at `pos`; appends class captures.
bool MatchRespell(std::string_view word, std::size_t pos,
                  const AnchoredPattern& p, std::string& captures) {
  if (p.at_start && pos != 0) return false;
  if (pos + p.body.size() > word.size()) return false;
  if (p.at_end && pos + p.body.size() != word.size()) return false;
  captures.clear();
  for (std::size_t k = 0; k < p.body.size(); ++k) {
    const char want = p.body[k];
    const char got = word[pos + k];
    if (want == 'C') {
      if (!IsConsonantLetter(got)) return false;
      captures.push_back(got);
    } else if (want == 'V') {
      if (!IsVowelLetter(got)) return false;
      captures.push_back(got);
    } else if (want != got) {
      return false;
    }
  }
  return true;
}

PhonemeSequence ParsePhonemes(const std::vector<std::string>& fields,
                              std::size_t first, std::size_t line_no) {
  PhonemeSequence seq;
  for (std::size_t i = first; i < fields.size(); ++i) {
    std::string symbol;
    for (char c : fields[i]) {
      if (std::isdigit(static_cast<unsigned char>(c))) continue;
      symbol.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (symbol.empty()) throw Error::Parse(line_no, "empty phoneme symbol");
    seq.phonemes.push_back(std::move(symbol));
  }
  return seq;
}

}  // namespace

std::string PhonemeSequence::ToString() const {
  std::string out;
  for (const auto& p : phonemes) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

std::string_view SimilarityClassName(SimilarityClass c) {
  switch (c) {
    case SimilarityClass::kIdentical:
      return "identical";
    case SimilarityClass::kVerySimilar:
      return "very_similar";
    case SimilarityClass::kSimilar:
      return "similar";
    case SimilarityClass::kDifferent:
      return "different";
  }
  return "different";
}

PhonemeDistance ComputePhonemeDistance(const PhonemeSequence& p1,
                                       const PhonemeSequence& p2) {
  if (p1.empty() || p2.empty()) {
    throw Error(ErrorCode::kEmptySequence, "phoneme sequence is empty");
  }
  PhonemeDistance out;
  out.edits = EditDistance<std::string>(p1.phonemes, p2.phonemes);
  out.delta = static_cast<double>(out.edits) /
              static_cast<double>(std::min(p1.size(), p2.size()));
  return out;
}

SimilarityClass Classify(double delta) {
  if (delta <= 0.0) return SimilarityClass::kIdentical;
  if (delta < 0.1) return SimilarityClass::kVerySimilar;
  if (delta < 0.3) return SimilarityClass::kSimilar;
  return SimilarityClass::kDifferent;
}

std::vector<G2pRule> ParseG2pRules(std::istream& in) {
  std::vector<G2pRule> rules;
  ForEachRuleLine(in, [&](std::size_t line_no, std::string_view pattern,
                          std::string_view replacement) {
    rules.push_back({std::string(pattern),
                     ParsePhonemes(SplitWhitespace(replacement), 0, line_no)
                         .phonemes});
  });
  return rules;
}

std::vector<RespellRule> ParseRespellRules(std::istream& in) {
  std::vector<RespellRule> rules;
  ForEachRuleLine(in, [&](std::size_t line_no, std::string_view pattern,
                          std::string_view replacement) {
    const auto body = SplitAnchors(pattern).body;
    const auto classes = [](std::string_view s) {
      return std::count_if(s.begin(), s.end(),
                           [](char c) { return c == 'C' || c == 'V'; });
    };
    if (classes(replacement) > classes(body)) {
      throw Error::Parse(line_no, "replacement uses more placeholders than the pattern");
    }
    rules.push_back({std::string(pattern), std::string(replacement)});
  });
  return rules;
}

PhoneticDictionary PhoneticDictionary::Builtin() {
  PhoneticDictionary dict;
  std::istringstream pron{std::string(builtin::Pronunciations())};
  dict.LoadPronunciations(pron);
  std::istringstream homophones{std::string(builtin::Homophones())};
  dict.LoadHomophones(homophones);
  std::istringstream g2p{std::string(builtin::G2pRules())};
  dict.SetG2pRules(ParseG2pRules(g2p));
  std::istringstream respell{std::string(builtin::RespellRules())};
  dict.SetRespellRules(ParseRespellRules(respell));
  return dict;
}

void PhoneticDictionary::LoadPronunciations(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = TrimCr(raw);
    if (Trim(line).empty() || line.starts_with(";;;") || line.front() == '#') {
      continue;
    }
    auto fields = SplitWhitespace(line);
    if (fields.size() < 2) {
      throw Error::Parse(line_no, "expected WORD followed by phonemes");
    }
    std::string word = AsciiLower(fields[0]);
    const bool alternate = word.size() > 3 && word.back() == ')' &&
                           word.find('(') != std::string::npos;
    if (alternate) word.erase(word.rfind('('));
    PhonemeSequence seq = ParsePhonemes(fields, 1, line_no);
    if (alternate && pronunciations_.contains(word)) continue;
    pronunciations_.insert_or_assign(std::move(word), std::move(seq));
  }
}

void PhoneticDictionary::LoadHomophones(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = TrimCr(raw);
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> group;
    std::size_t start = 0;
    while (start <= line.size()) {
      auto comma = line.find(',', start);
      if (comma == std::string_view::npos) comma = line.size();
      auto member = Trim(line.substr(start, comma - start));
      if (!member.empty()) group.push_back(AsciiLower(member));
      start = comma + 1;
    }
    if (group.size() < 2) {
      throw Error::Parse(line_no, "homophone group needs at least two words");
    }
    AddHomophoneGroup(std::move(group));
  }
}

void PhoneticDictionary::SetG2pRules(std::vector<G2pRule> rules) {
  // Longest letter body first, anchored before unanchored; stable keeps
  // file order among equals.
  std::stable_sort(rules.begin(), rules.end(),
                   [](const G2pRule& a, const G2pRule& b) {
                     const auto pa = SplitAnchors(a.pattern);
                     const auto pb = SplitAnchors(b.pattern);
                     if (pa.body.size() != pb.body.size()) {
                       return pa.body.size() > pb.body.size();
                     }
                     return (pa.at_start + pa.at_end) > (pb.at_start + pb.at_end);
                   });
  g2p_rules_ = std::move(rules);
}

void PhoneticDictionary::SetRespellRules(std::vector<RespellRule> rules) {
  respell_rules_ = std::move(rules);
}

void PhoneticDictionary::AddPronunciation(std::string_view word,
                                          PhonemeSequence phonemes) {
  if (word.empty()) throw Error(ErrorCode::kEmptyWord, "empty word");
  if (phonemes.empty()) {
    throw Error(ErrorCode::kEmptySequence, "empty pronunciation");
  }
  pronunciations_.insert_or_assign(AsciiLower(word), std::move(phonemes));
}

void PhoneticDictionary::AddHomophoneGroup(std::vector<std::string> group) {
  const std::size_t id = groups_.size();
  for (auto& member : group) {
    member = AsciiLower(member);
    auto& ids = group_index_[member];
    if (ids.empty() || ids.back() != id) ids.push_back(id);
  }
  groups_.push_back(std::move(group));
}

bool PhoneticDictionary::Contains(std::string_view word) const {
  return pronunciations_.contains(AsciiLower(word));
}

PhonemeSequence PhoneticDictionary::G2p(std::string_view word) const {
  if (word.empty()) throw Error(ErrorCode::kEmptyWord, "empty word");
  const auto it = pronunciations_.find(AsciiLower(word));
  if (it != pronunciations_.end()) return it->second;
  return RulePronunciation(word);
}

PhonemeSequence PhoneticDictionary::RulePronunciation(
    std::string_view word) const {
  if (word.empty()) throw Error(ErrorCode::kEmptyWord, "empty word");
  const std::string lower = AsciiLower(word);
  const std::u32string scalars = DecodeUtf8(lower);
  PhonemeSequence out;

  auto matches = [&](const AnchoredPattern& p, std::size_t pos) {
    if (p.at_start && pos != 0) return false;
    if (pos + p.body.size() > scalars.size()) return false;
    if (p.at_end && pos + p.body.size() != scalars.size()) return false;
    for (std::size_t k = 0; k < p.body.size(); ++k) {
      if (static_cast<char32_t>(static_cast<unsigned char>(p.body[k])) !=
          scalars[pos + k]) {
        return false;
      }
    }
    return true;
  };

  auto run = [&](bool allow_silent) {
    out.phonemes.clear();
    std::size_t pos = 0;
    while (pos < scalars.size()) {
      const G2pRule* best = nullptr;
      std::size_t advance = 0;
      for (const auto& rule : g2p_rules_) {
        if (!allow_silent && rule.phonemes.empty()) continue;
        const auto p = SplitAnchors(rule.pattern);
        if (matches(p, pos)) {
          best = &rule;
          advance = p.body.size();
          break;  // rules are pre-sorted longest first
        }
      }
      if (best != nullptr) {
        out.phonemes.insert(out.phonemes.end(), best->phonemes.begin(),
                            best->phonemes.end());
        pos += advance;
        continue;
      }
      // No rule: the character stands for itself, whitespace is dropped.
      const char32_t c = scalars[pos++];
      if (c == U' ' || c == U'\t') continue;
      out.phonemes.push_back(EncodeUtf8(std::u32string(1, AsciiToUpper(c))));
    }
  };

  run(/*allow_silent=*/true);
  if (out.empty()) run(/*allow_silent=*/false);
  return out;
}

std::vector<std::string> PhoneticDictionary::Candidates(
    std::string_view word) const {
  const std::string lower = AsciiLower(word);
  std::set<std::string> found;

  if (auto it = group_index_.find(lower); it != group_index_.end()) {
    for (std::size_t id : it->second) {
      found.insert(groups_[id].begin(), groups_[id].end());
    }
  }

  std::string captures;
  for (const auto& rule : respell_rules_) {
    const auto p = SplitAnchors(rule.pattern);
    for (std::size_t pos = 0; pos + p.body.size() <= lower.size(); ++pos) {
      if (!MatchRespell(lower, pos, p, captures)) continue;
      std::string replaced;
      std::size_t next_capture = 0;
      for (char c : rule.replacement) {
        if ((c == 'C' || c == 'V') && next_capture < captures.size()) {
          replaced.push_back(captures[next_capture++]);
        } else {
          replaced.push_back(c);
        }
      }
      std::string candidate = lower.substr(0, pos) + replaced +
                              lower.substr(pos + p.body.size());
      if (!candidate.empty()) found.insert(std::move(candidate));
    }
  }

  found.erase(lower);
  return {found.begin(), found.end()};
}

}  // namespace zeroe
