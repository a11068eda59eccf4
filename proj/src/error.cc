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

#include "zeroe/error.h"

namespace zeroe {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kSegmentOnTagged:
      return "SegmentOnTagged";
    case ErrorCode::kMissingResource:
      return "MissingResource";
    case ErrorCode::kEmptyWord:
      return "EmptyWord";
    case ErrorCode::kEmptySequence:
      return "EmptySequence";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kDelimiterCollision:
      return "DelimiterCollision";
    case ErrorCode::kZeroCleanScore:
      return "ZeroCleanScore";
    case ErrorCode::kMissingShieldedScore:
      return "MissingShieldedScore";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kExcludedAttackerAbsent:
      return "ExcludedAttackerAbsent";
    case ErrorCode::kMisalignment:
      return "Misalignment";
    case ErrorCode::kDuplicateCodepoint:
      return "DuplicateCodepoint";
    case ErrorCode::kTooFewGlyphs:
      return "TooFewGlyphs";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Error Error::Parse(std::size_t line, const std::string& message) {
  Error error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message);
  error.line_ = line;
  return error;
}

Error Error::AtSample(ErrorCode code, std::size_t index,
                      const std::string& message) {
  Error error(code, "sample " + std::to_string(index) + ": " + message);
  error.index_ = index;
  return error;
}

}  // namespace zeroe
