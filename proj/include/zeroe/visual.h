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

// Visually-confusable character neighbors: table I/O, the builtin
// homoglyph table, and a brute-force kNN builder over glyph bitmaps.

#ifndef ZEROE_VISUAL_H_
#define ZEROE_VISUAL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <vector>

namespace zeroe {

inline constexpr std::size_t kGlyphSide = 24;
inline constexpr std::size_t kGlyphPixels = kGlyphSide * kGlyphSide;
inline constexpr std::size_t kDefaultNeighbors = 20;

struct GlyphBitmap {
  char32_t codepoint = 0;
  std::array<std::uint8_t, kGlyphPixels> pixels{};
};

// Squared Euclidean distance over the 576 intensities.
std::uint64_t SquaredDistance(const GlyphBitmap& a, const GlyphBitmap& b);

class NeighborTable {
 public:
  using Map = std::map<char32_t, std::vector<char32_t>>;

  NeighborTable() = default;
  explicit NeighborTable(Map entries) : entries_(std::move(entries)) {}

  // Compiled-in table covering [0-9A-Za-z].
  static const NeighborTable& Builtin();

  // nullptr when `c` has no entry.
  const std::vector<char32_t>* Find(char32_t c) const;

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const NeighborTable&) const = default;

 private:
  Map entries_;
};

// `U+XXXX<TAB>U+XXXX U+XXXX ...` lines; blank and '#' lines skipped.
// Throws Error(kParseError) with the offending line number.
NeighborTable ParseNeighborTable(std::istream& in);
NeighborTable LoadNeighborTable(const std::filesystem::path& path);
void WriteNeighborTable(const NeighborTable& table, std::ostream& out);

// Records of a `U+XXXX` header plus 24 rows of 24 integers in 0..255,
// separated by blank lines.
std::vector<GlyphBitmap> ParseBitmaps(std::istream& in);

// k nearest other glyphs per glyph by Euclidean pixel distance, ties broken
// by ascending codepoint. Lists are shorter than k when fewer glyphs exist.
// Throws kInvalidArgument (k == 0), kTooFewGlyphs, kDuplicateCodepoint.
NeighborTable BuildNeighbors(std::span<const GlyphBitmap> bitmaps,
                             std::size_t k, unsigned threads = 1);

}  // namespace zeroe

#endif  // ZEROE_VISUAL_H_
