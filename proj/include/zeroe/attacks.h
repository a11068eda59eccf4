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

// The ten character-level attacks. Word transforms operate on scalar
// values and draw all randomness from the caller's RandomStream, so a
// fixed stream state gives a fixed output.

#ifndef ZEROE_ATTACKS_H_
#define ZEROE_ATTACKS_H_

#include <array>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zeroe/phonetics.h"
#include "zeroe/random.h"
#include "zeroe/types.h"
#include "zeroe/visual.h"

namespace zeroe {

// Symbols an intruder may insert; order matters for draws. The trailing
// space is dropped for tagged corpora.
inline constexpr std::array<char32_t, 33> kIntruderAlphabet = {
    U'!', U'"', U'#', U'$', U'%', U'&', U'\'', U'(', U')', U'*', U'+',
    U',', U'-', U'.', U'/', U':', U';', U'<',  U'=', U'>', U'?', U'@',
    U'[', U'\\', U']', U'^', U'_', U'`', U'{', U'|', U'}', U'~', U' ',
};

// QWERTY letter grid; keys are adjacent when row and column each differ by
// at most one.
class KeyboardLayout {
 public:
  static constexpr std::array<std::string_view, 3> kRows = {
      "qwertyuiop", "asdfghjkl", "zxcvbnm"};

  // Lowercase neighbors of an ASCII letter in row-major order; empty for
  // anything else. Case of the input is ignored.
  static const std::vector<char32_t>& Neighbors(char32_t letter);
};

class TypoDictionary {
 public:
  // `word<TAB>variant` lines; '#' comments. Variants equal to their word
  // are dropped; repeated variants kept once.
  static TypoDictionary Parse(std::istream& in);

  void Add(std::string_view word, std::string_view variant);

  // Lookup by ASCII-lowercased word; nullptr when absent.
  const std::vector<std::string>* Find(std::string_view word) const;

  std::size_t size() const { return variants_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> variants_;
};

bool IsVowel(char32_t c);

// Length and content constraints a token must meet to be attacked.
bool IsEligible(AttackId id, std::u32string_view word);

std::u32string InnerShuffle(std::u32string_view word, RandomStream& stream,
                            bool allow_identity = false);
std::u32string FullShuffle(std::u32string_view word, RandomStream& stream,
                           bool allow_identity = false);
std::u32string Intrude(std::u32string_view word, double phi,
                       RandomStream& stream, bool allow_space = true);
std::u32string Disemvowel(std::u32string_view word);
std::u32string Truncate(std::u32string_view word);
std::u32string KeyboardTypo(std::u32string_view word, double phi,
                            RandomStream& stream);
std::string NaturalTypo(std::string_view word, const TypoDictionary& dict,
                        RandomStream& stream);
std::string PhoneticAttack(std::string_view word,
                           const PhoneticDictionary& dict,
                           RandomStream& stream);
// `missing` counts non-space characters that have no table entry.
std::u32string VisualAttack(std::u32string_view word, double phi,
                            const NeighborTable& table, RandomStream& stream,
                            std::size_t* missing = nullptr);

struct SegmentResult {
  Sample sample;
  // Flattened positions (in the input) of tokens merged into a predecessor.
  std::vector<std::size_t> merged;
  std::size_t boundaries = 0;
};

// Merges neighbouring tokens: a run starts with probability phi and its
// k-th extra merge succeeds with phi^k; a failed boundary restarts at phi.
// Pair samples are segmented per side. Throws kSegmentOnTagged.
SegmentResult Segment(const Sample& sample, double phi, RandomStream& stream);

struct AttackResources {
  const TypoDictionary* typos = nullptr;
  const PhoneticDictionary* phonetics = nullptr;
  const NeighborTable* visual = nullptr;
};

struct AttackOptions {
  bool allow_identity_shuffle = false;
};

struct PerturbContext {
  bool tagged = false;
  std::size_t missing_glyphs = 0;
};

// One attack bound to its character-level probability and resources.
class Attacker {
 public:
  // Throws kMissingResource when the attack needs a table it was not given.
  Attacker(AttackId id, double phi, AttackResources resources = {},
           AttackOptions options = {});

  AttackId id() const { return id_; }
  double phi() const { return phi_; }

  bool IsEligible(std::u32string_view word) const {
    return zeroe::IsEligible(id_, word);
  }

  // Word-level transform of an eligible token. Not valid for segment.
  std::string Perturb(std::string_view word, RandomStream& stream,
                      PerturbContext& context) const;

 private:
  AttackId id_;
  double phi_;
  AttackResources resources_;
  AttackOptions options_;
};

}  // namespace zeroe

#endif  // ZEROE_ATTACKS_H_
