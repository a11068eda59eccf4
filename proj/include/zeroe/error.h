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

#ifndef ZEROE_ERROR_H_
#define ZEROE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zeroe {

enum class ErrorCode {
  kInvalidArgument,
  kSegmentOnTagged,
  kMissingResource,
  kEmptyWord,
  kEmptySequence,
  kParseError,
  kDelimiterCollision,
  kZeroCleanScore,
  kMissingShieldedScore,
  kLengthMismatch,
  kExcludedAttackerAbsent,
  kMisalignment,
  kDuplicateCodepoint,
  kTooFewGlyphs,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library. `line()` is 1-based and only
// meaningful for kParseError; `index()` carries a sample index for
// kDelimiterCollision.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  static Error Parse(std::size_t line, const std::string& message);
  static Error AtSample(ErrorCode code, std::size_t index,
                        const std::string& message);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::size_t line_ = 0;
  std::size_t index_ = 0;
};

}  // namespace zeroe

#endif  // ZEROE_ERROR_H_
