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

// UTF-8 <-> Unicode scalar value conversion. All character positions and
// lengths in this project are counted in scalar values.

#ifndef ZEROE_UNICODE_H_
#define ZEROE_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace zeroe {

inline bool IsScalarValue(char32_t c) {
  return c <= 0x10FFFF && (c < 0xD800 || c > 0xDFFF);
}

// Returns std::nullopt on malformed, overlong or surrogate encodings.
std::optional<std::u32string> TryDecodeUtf8(std::string_view text);

// Throws Error(kInvalidArgument) on malformed input.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string& out);

std::size_t ScalarCount(std::string_view utf8);

inline bool IsAsciiLower(char32_t c) { return c >= U'a' && c <= U'z'; }
inline bool IsAsciiUpper(char32_t c) { return c >= U'A' && c <= U'Z'; }
inline bool IsAsciiAlpha(char32_t c) {
  return IsAsciiLower(c) || IsAsciiUpper(c);
}
inline char32_t AsciiToLower(char32_t c) {
  return IsAsciiUpper(c) ? c + (U'a' - U'A') : c;
}
inline char32_t AsciiToUpper(char32_t c) {
  return IsAsciiLower(c) ? c - (U'a' - U'A') : c;
}

// Lowercases ASCII letters only; other bytes pass through untouched.
std::string AsciiLower(std::string_view text);

// Formats as U+XXXX (at least four hex digits) and parses the same form.
std::string FormatCodepoint(char32_t c);
std::optional<char32_t> ParseCodepoint(std::string_view text);

}  // namespace zeroe

#endif  // ZEROE_UNICODE_H_
