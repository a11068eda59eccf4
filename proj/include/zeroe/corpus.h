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

// Streaming readers and atomic writers for the four corpus formats, and
// the JSON attack report.
//
//   plain       one sample per line, whitespace-tokenized
//   tagged      token<TAB>tag lines, a blank line ends a sample
//   pair        premise<TAB>hypothesis<TAB>label
//   multilabel  text<TAB>label1,label2,...

#ifndef ZEROE_CORPUS_H_
#define ZEROE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zeroe/types.h"

namespace zeroe {

// Splits on runs of ASCII whitespace, keeping the separators in `gaps` so
// the text can be written back unchanged.
Text TokenizeText(std::string_view line);

class CorpusReader {
 public:
  CorpusReader(std::istream& in, CorpusFormat format);
  // Throws kIo when the file cannot be opened.
  CorpusReader(const std::filesystem::path& path, CorpusFormat format);

  // Next sample, or nullopt at end of input. Throws Error(kParseError)
  // carrying the offending line number.
  std::optional<Sample> Next();

  CorpusFormat format() const { return format_; }
  std::size_t line() const { return line_; }

 private:
  bool ReadLine(std::string& line);
  Sample ParseTagged(std::string& first);

  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  CorpusFormat format_;
  std::size_t line_ = 0;
};

std::vector<Sample> ReadCorpus(const std::filesystem::path& path,
                               CorpusFormat format);
std::vector<Sample> ParseCorpus(std::string_view text, CorpusFormat format);

// Serializes one sample including its trailing newline(s). Throws
// kDelimiterCollision (with `index`) when a token or tag contains a
// character the format uses as a separator.
void WriteSample(std::ostream& out, const Sample& sample, CorpusFormat format,
                 std::size_t index);
std::string FormatCorpus(const std::vector<Sample>& samples,
                         CorpusFormat format);

// Writes to a temporary sibling and renames it over `path` on Commit().
// Destroying an uncommitted file removes the temporary.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path path);
  ~AtomicFile();
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  std::ostream& stream() { return out_; }
  void Commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

class CorpusWriter {
 public:
  CorpusWriter(const std::filesystem::path& path, CorpusFormat format);

  void Write(const Sample& sample);
  void Commit() { file_.Commit(); }
  std::size_t count() const { return count_; }

 private:
  AtomicFile file_;
  CorpusFormat format_;
  std::size_t count_ = 0;
};

void WriteCorpus(const std::vector<Sample>& samples,
                 const std::filesystem::path& path, CorpusFormat format);

// Fixed key order: samples_total, tokens_total, tokens_attacked,
// tokens_modified, mean_norm_edit_distance, attack_id, p, phi, seed.
std::string ReportJson(const AttackReport& report,
                       const PerturbationConfig& config);
void WriteReport(const AttackReport& report, const PerturbationConfig& config,
                 const std::filesystem::path& path);

// Atomically replaces `path` with `contents`.
void WriteTextFile(const std::filesystem::path& path,
                   std::string_view contents);

}  // namespace zeroe

#endif  // ZEROE_CORPUS_H_
