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

#include "zeroe/visual.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "zeroe/error.h"
#include "zeroe/resources.h"
#include "zeroe/unicode.h"

namespace zeroe {
namespace {

std::string_view StripCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::uint64_t SquaredDistance(const GlyphBitmap& a, const GlyphBitmap& b) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < kGlyphPixels; ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a.pixels[i]) - b.pixels[i];
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

const NeighborTable& NeighborTable::Builtin() {
  static const NeighborTable table = [] {
    std::istringstream in{std::string(builtin::VisualTable())};
    return ParseNeighborTable(in);
  }();
  return table;
}

const std::vector<char32_t>* NeighborTable::Find(char32_t c) const {
  auto it = entries_.find(c);
  return it == entries_.end() ? nullptr : &it->second;
}

NeighborTable ParseNeighborTable(std::istream& in) {
  NeighborTable::Map entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripCr(raw);
    if (IsBlank(line) || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error::Parse(line_no, "expected U+XXXX<TAB>neighbors");
    }
    const auto key = ParseCodepoint(line.substr(0, tab));
    if (!key) throw Error::Parse(line_no, "bad codepoint before tab");
    if (entries.contains(*key)) {
      throw Error::Parse(line_no, "duplicate entry for " + FormatCodepoint(*key));
    }
    std::vector<char32_t> neighbors;
    std::istringstream fields{std::string(line.substr(tab + 1))};
    std::string field;
    while (fields >> field) {
      const auto cp = ParseCodepoint(field);
      if (!cp) throw Error::Parse(line_no, "bad neighbor codepoint '" + field + "'");
      if (*cp == *key) throw Error::Parse(line_no, "character lists itself");
      if (std::find(neighbors.begin(), neighbors.end(), *cp) != neighbors.end()) {
        throw Error::Parse(line_no, "repeated neighbor " + field);
      }
      neighbors.push_back(*cp);
    }
    if (neighbors.empty()) throw Error::Parse(line_no, "no neighbors listed");
    entries.emplace(*key, std::move(neighbors));
  }
  return NeighborTable(std::move(entries));
}

NeighborTable LoadNeighborTable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open neighbor table " + path.string());
  }
  return ParseNeighborTable(in);
}

void WriteNeighborTable(const NeighborTable& table, std::ostream& out) {
  for (const auto& [c, neighbors] : table.entries()) {
    out << FormatCodepoint(c) << '\t';
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (i > 0) out << ' ';
      out << FormatCodepoint(neighbors[i]);
    }
    out << '\n';
  }
}

std::vector<GlyphBitmap> ParseBitmaps(std::istream& in) {
  std::vector<GlyphBitmap> out;
  std::set<char32_t> seen;
  std::string raw;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (!std::getline(in, raw)) return false;
    ++line_no;
    line = StripCr(raw);
    return true;
  };

  std::string_view line;
  while (next_line(line)) {
    if (IsBlank(line)) continue;
    GlyphBitmap glyph;
    const auto cp = ParseCodepoint(line.substr(0, line.find_last_not_of(" \t") + 1));
    if (!cp) throw Error::Parse(line_no, "expected U+XXXX record header");
    if (!seen.insert(*cp).second) {
      throw Error::Parse(line_no, "duplicate codepoint " + FormatCodepoint(*cp));
    }
    glyph.codepoint = *cp;
    for (std::size_t row = 0; row < kGlyphSide; ++row) {
      if (!next_line(line)) {
        throw Error::Parse(line_no, "record ends before 24 pixel rows");
      }
      std::size_t col = 0;
      std::size_t pos = 0;
      while (pos < line.size()) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        const auto end = std::min(line.find_first_of(" \t", pos), line.size());
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc() || ptr != line.data() + end || value > 255) {
          throw Error::Parse(line_no, "pixel values must be integers in 0..255");
        }
        if (col >= kGlyphSide) throw Error::Parse(line_no, "more than 24 pixels in row");
        glyph.pixels[row * kGlyphSide + col++] = static_cast<std::uint8_t>(value);
        pos = end;
      }
      if (col != kGlyphSide) throw Error::Parse(line_no, "expected 24 pixels in row");
    }
    out.push_back(glyph);
  }
  return out;
}

NeighborTable BuildNeighbors(std::span<const GlyphBitmap> bitmaps,
                             std::size_t k, unsigned threads) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (bitmaps.size() < 2) {
    throw Error(ErrorCode::kTooFewGlyphs, "need at least two glyph bitmaps");
  }
  std::set<char32_t> seen;
  for (const auto& glyph : bitmaps) {
    if (!seen.insert(glyph.codepoint).second) {
      throw Error(ErrorCode::kDuplicateCodepoint,
                  "duplicate codepoint " + FormatCodepoint(glyph.codepoint));
    }
  }

  const std::size_t n = bitmaps.size();
  const std::size_t keep = std::min(k, n - 1);
  std::vector<std::vector<char32_t>> rows(n);

  auto build_row = [&](std::size_t i) {
    std::vector<std::pair<std::uint64_t, char32_t>> ranked;
    ranked.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ranked.emplace_back(SquaredDistance(bitmaps[i], bitmaps[j]),
                          bitmaps[j].codepoint);
    }
    std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end());
    rows[i].reserve(keep);
    for (std::size_t r = 0; r < keep; ++r) rows[i].push_back(ranked[r].second);
  };

  threads = std::max(1u, threads);
  if (threads == 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) build_row(i);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += threads) build_row(i);
      });
    }
  }

  NeighborTable::Map entries;
  for (std::size_t i = 0; i < n; ++i) {
    entries.emplace(bitmaps[i].codepoint, std::move(rows[i]));
  }
  return NeighborTable(std::move(entries));
}

}  // namespace zeroe
