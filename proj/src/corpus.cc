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

#include "zeroe/corpus.h"

#include <unistd.h>

#include <atomic>
#include <sstream>
#include <system_error>
#include <utility>

#include "json.hpp"
#include "zeroe/error.h"
#include "zeroe/unicode.h"

namespace zeroe {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void WriteText(std::ostream& out, const Text& text) {
  const bool keep_gaps = text.gaps.size() == text.tokens.size() + 1;
  if (keep_gaps) out << text.gaps[0];
  for (std::size_t i = 0; i < text.tokens.size(); ++i) {
    if (!keep_gaps && i > 0) out << ' ';
    out << text.tokens[i].text;
    if (keep_gaps) out << text.gaps[i + 1];
  }
}

void CheckField(std::string_view field, std::string_view forbidden,
                std::size_t index, std::string_view what) {
  const auto pos = field.find_first_of(forbidden);
  if (pos == std::string_view::npos) return;
  const char c = field[pos];
  const std::string name = c == '\t' ? "tab" : c == '\n' ? "newline"
                         : c == '\r' ? "carriage return" : std::string(1, c);
  throw Error::AtSample(ErrorCode::kDelimiterCollision, index,
                        std::string(what) + " '" + std::string(field) +
                            "' contains a " + name);
}

void CheckText(const Text& text, std::string_view forbidden,
               std::size_t index) {
  for (const Token& token : text.tokens) {
    CheckField(token.text, forbidden, index, "token");
  }
}

}  // namespace

Text TokenizeText(std::string_view line) {
  Text text;
  std::size_t pos = 0;
  std::string gap;
  bool canonical = true;
  while (pos < line.size()) {
    const std::size_t start = pos;
    while (pos < line.size() && IsAsciiSpace(line[pos])) ++pos;
    gap.assign(line.substr(start, pos - start));
    if (pos == line.size()) break;
    const std::size_t word_start = pos;
    while (pos < line.size() && !IsAsciiSpace(line[pos])) ++pos;
    canonical = canonical && gap == (text.tokens.empty() ? "" : " ");
    text.gaps.push_back(gap);
    gap.clear();
    text.tokens.push_back(
        Token{std::string(line.substr(word_start, pos - word_start)),
              text.tokens.size()});
  }
  canonical = canonical && gap.empty();
  text.gaps.push_back(gap);
  if (canonical) text.gaps.clear();
  return text;
}

CorpusReader::CorpusReader(std::istream& in, CorpusFormat format)
    : in_(&in), format_(format) {}

CorpusReader::CorpusReader(const std::filesystem::path& path,
                           CorpusFormat format)
    : owned_(std::make_unique<std::ifstream>(path, std::ios::binary)),
      in_(owned_.get()),
      format_(format) {
  if (!*owned_) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
}

bool CorpusReader::ReadLine(std::string& line) {
  if (!std::getline(*in_, line)) return false;
  ++line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!TryDecodeUtf8(line)) throw Error::Parse(line_, "invalid UTF-8");
  return true;
}

std::optional<Sample> CorpusReader::Next() {
  std::string line;
  if (format_ == CorpusFormat::kTagged) {
    do {
      if (!ReadLine(line)) return std::nullopt;
    } while (line.empty());
    return ParseTagged(line);
  }
  if (!ReadLine(line)) return std::nullopt;

  Sample sample;
  sample.kind = format_;
  switch (format_) {
    case CorpusFormat::kPlain:
      sample.texts.push_back(TokenizeText(line));
      break;
    case CorpusFormat::kPair: {
      const auto fields = SplitTabs(line);
      if (fields.size() != 3) {
        throw Error::Parse(line_, "pair lines need 3 tab-separated columns, found " +
                                      std::to_string(fields.size()));
      }
      for (int side = 0; side < 2; ++side) {
        sample.texts.push_back(TokenizeText(fields[side]));
        if (sample.texts.back().tokens.empty()) {
          throw Error::Parse(line_, side == 0 ? "empty premise" : "empty hypothesis");
        }
      }
      sample.labels.emplace_back(fields[2]);
      break;
    }
    case CorpusFormat::kMultilabel: {
      const auto fields = SplitTabs(line);
      if (fields.size() != 2) {
        throw Error::Parse(line_, "multilabel lines need 2 tab-separated columns, found " +
                                      std::to_string(fields.size()));
      }
      sample.texts.push_back(TokenizeText(fields[0]));
      if (!fields[1].empty()) {
        std::size_t start = 0;
        while (true) {
          const auto comma = fields[1].find(',', start);
          sample.labels.emplace_back(fields[1].substr(start, comma - start));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      }
      break;
    }
    case CorpusFormat::kTagged:
      break;
  }
  return sample;
}

Sample CorpusReader::ParseTagged(std::string& line) {
  Sample sample;
  sample.kind = CorpusFormat::kTagged;
  Text& text = sample.texts.emplace_back();
  do {
    if (line.empty()) break;
    if (line.find_first_not_of(" \t\v\f") == std::string::npos) {
      throw Error::Parse(line_, "whitespace-only line; samples are separated by empty lines");
    }
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw Error::Parse(line_, "tagged lines need 2 tab-separated columns, found " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw Error::Parse(line_, "empty token");
    text.tokens.push_back(Token{std::string(fields[0]), text.tokens.size()});
    sample.tags.emplace_back(fields[1]);
  } while (ReadLine(line));
  return sample;
}

std::vector<Sample> ReadCorpus(const std::filesystem::path& path,
                               CorpusFormat format) {
  CorpusReader reader(path, format);
  std::vector<Sample> out;
  while (auto sample = reader.Next()) out.push_back(std::move(*sample));
  return out;
}

std::vector<Sample> ParseCorpus(std::string_view text, CorpusFormat format) {
  std::istringstream in{std::string(text)};
  CorpusReader reader(in, format);
  std::vector<Sample> out;
  while (auto sample = reader.Next()) out.push_back(std::move(*sample));
  return out;
}

void WriteSample(std::ostream& out, const Sample& sample, CorpusFormat format,
                 std::size_t index) {
  switch (format) {
    case CorpusFormat::kPlain:
      for (const Text& text : sample.texts) CheckText(text, "\n\r", index);
      for (std::size_t t = 0; t < sample.texts.size(); ++t) {
        if (t > 0) out << ' ';
        WriteText(out, sample.texts[t]);
      }
      out << '\n';
      break;
    case CorpusFormat::kTagged: {
      const Text empty;
      const Text& text = sample.texts.empty() ? empty : sample.texts[0];
      if (sample.tags.size() != text.tokens.size()) {
        throw Error::AtSample(ErrorCode::kInvalidArgument, index,
                              "tag count differs from token count");
      }
      for (std::size_t i = 0; i < text.tokens.size(); ++i) {
        CheckField(text.tokens[i].text, "\t\n\r", index, "token");
        CheckField(sample.tags[i], "\t\n\r", index, "tag");
        out << text.tokens[i].text << '\t' << sample.tags[i] << '\n';
      }
      out << '\n';
      break;
    }
    case CorpusFormat::kPair: {
      if (sample.texts.size() != 2) {
        throw Error::AtSample(ErrorCode::kInvalidArgument, index,
                              "pair samples need two texts");
      }
      const std::string label = sample.labels.empty() ? "" : sample.labels[0];
      CheckText(sample.texts[0], "\t\n\r", index);
      CheckText(sample.texts[1], "\t\n\r", index);
      CheckField(label, "\t\n\r", index, "label");
      WriteText(out, sample.texts[0]);
      out << '\t';
      WriteText(out, sample.texts[1]);
      out << '\t' << label << '\n';
      break;
    }
    case CorpusFormat::kMultilabel: {
      for (const Text& text : sample.texts) CheckText(text, "\t\n\r", index);
      for (const auto& label : sample.labels) {
        CheckField(label, "\t\n\r,", index, "label");
      }
      for (std::size_t t = 0; t < sample.texts.size(); ++t) {
        if (t > 0) out << ' ';
        WriteText(out, sample.texts[t]);
      }
      out << '\t';
      for (std::size_t i = 0; i < sample.labels.size(); ++i) {
        if (i > 0) out << ',';
        out << sample.labels[i];
      }
      out << '\n';
      break;
    }
  }
}

std::string FormatCorpus(const std::vector<Sample>& samples,
                         CorpusFormat format) {
  std::ostringstream out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    WriteSample(out, samples[i], format, i);
  }
  return out.str();
}

AtomicFile::AtomicFile(std::filesystem::path path) : path_(std::move(path)) {
  static std::atomic<unsigned> counter{0};
  temp_ = path_;
  temp_ += ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(counter.fetch_add(1));
  out_.open(temp_, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::kIo, "cannot write " + path_.string());
}

AtomicFile::~AtomicFile() {
  if (committed_) return;
  out_.close();
  std::error_code ignored;
  std::filesystem::remove(temp_, ignored);
}

void AtomicFile::Commit() {
  out_.flush();
  out_.close();
  if (out_.fail()) throw Error(ErrorCode::kIo, "write failed for " + path_.string());
  std::error_code ec;
  std::filesystem::rename(temp_, path_, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot rename onto " + path_.string() + ": " +
                                    ec.message());
  }
  committed_ = true;
}

CorpusWriter::CorpusWriter(const std::filesystem::path& path,
                           CorpusFormat format)
    : file_(path), format_(format) {}

void CorpusWriter::Write(const Sample& sample) {
  WriteSample(file_.stream(), sample, format_, count_);
  ++count_;
}

void WriteCorpus(const std::vector<Sample>& samples,
                 const std::filesystem::path& path, CorpusFormat format) {
  CorpusWriter writer(path, format);
  for (const Sample& sample : samples) writer.Write(sample);
  writer.Commit();
}

std::string ReportJson(const AttackReport& report,
                       const PerturbationConfig& config) {
  nlohmann::ordered_json json;
  json["samples_total"] = report.samples_total;
  json["tokens_total"] = report.tokens_total;
  json["tokens_attacked"] = report.tokens_attacked;
  json["tokens_modified"] = report.tokens_modified;
  json["mean_norm_edit_distance"] = report.mean_norm_edit_distance;
  json["attack_id"] = AttackName(config.attack);
  json["p"] = config.p;
  json["phi"] = config.EffectivePhi();
  json["seed"] = config.seed;
  return json.dump(2) + "\n";
}

void WriteReport(const AttackReport& report, const PerturbationConfig& config,
                 const std::filesystem::path& path) {
  WriteTextFile(path, ReportJson(report, config));
}

void WriteTextFile(const std::filesystem::path& path,
                   std::string_view contents) {
  AtomicFile file(path);
  file.stream() << contents;
  file.Commit();
}

}  // namespace zeroe
