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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "zeroe/error.h"

namespace zeroe {
namespace {

namespace fs = std::filesystem;
using ::testing::ElementsAre;

std::vector<std::string> TokenTexts(const Text& text) {
  std::vector<std::string> out;
  for (const auto& token : text.tokens) out.push_back(token.text);
  return out;
}

std::size_t ParseErrorLine(const std::string& text, CorpusFormat format) {
  try {
    ParseCorpus(text, format);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    return e.line();
  }
  return 0;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zeroe_corpus_" + std::to_string(::testing::UnitTest::GetInstance()
                                                  ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  fs::path dir_;
};

TEST(PlainFormatTest, SplitsOnWhitespaceRuns) {
  const auto samples = ParseCorpus("a b  c\n", CorpusFormat::kPlain);
  ASSERT_EQ(samples.size(), 1u);
  EXPECT_THAT(TokenTexts(samples[0].texts[0]), ElementsAre("a", "b", "c"));
  EXPECT_EQ(samples[0].texts[0].tokens[2].original_index, 2u);
}

TEST(PlainFormatTest, EmptyInputGivesNoSamples) {
  EXPECT_TRUE(ParseCorpus("", CorpusFormat::kPlain).empty());
  EXPECT_TRUE(ParseCorpus("", CorpusFormat::kTagged).empty());
}

TEST(PlainFormatTest, RoundTripsIrregularSpacingAndCrlf) {
  const std::string text = "  lead\tand  trail  \n\nx\ny z\n";
  EXPECT_EQ(FormatCorpus(ParseCorpus(text, CorpusFormat::kPlain), CorpusFormat::kPlain),
            text);
  EXPECT_EQ(FormatCorpus(ParseCorpus("a b\r\nc\r\n", CorpusFormat::kPlain),
                         CorpusFormat::kPlain),
            "a b\nc\n");
}

TEST(PlainFormatTest, RejectsInvalidUtf8) {
  EXPECT_EQ(ParseErrorLine("ok\nbad \xFF\n", CorpusFormat::kPlain), 2u);
}

TEST(TaggedFormatTest, BlankLinesSeparateSamples) {
  const auto samples =
      ParseCorpus("The\tDET\ncat\tNOUN\n\n\nRuns\tVERB\n", CorpusFormat::kTagged);
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_THAT(TokenTexts(samples[0].texts[0]), ElementsAre("The", "cat"));
  EXPECT_THAT(samples[0].tags, ElementsAre("DET", "NOUN"));
  EXPECT_THAT(samples[1].tags, ElementsAre("VERB"));
  EXPECT_EQ(FormatCorpus(samples, CorpusFormat::kTagged),
            "The\tDET\ncat\tNOUN\n\nRuns\tVERB\n\n");
}

TEST(TaggedFormatTest, StructuralErrors) {
  EXPECT_EQ(ParseErrorLine("a\tX\nb\n", CorpusFormat::kTagged), 2u);
  EXPECT_EQ(ParseErrorLine("a\tX\tY\n", CorpusFormat::kTagged), 1u);
  EXPECT_EQ(ParseErrorLine("a\tX\n  \nb\tY\n", CorpusFormat::kTagged), 2u);
  EXPECT_EQ(ParseErrorLine("\tX\n", CorpusFormat::kTagged), 1u);
}

TEST(PairFormatTest, ThreeColumns) {
  const auto samples =
      ParseCorpus("A man sleeps\tA person rests\tentailment\n", CorpusFormat::kPair);
  ASSERT_EQ(samples.size(), 1u);
  ASSERT_EQ(samples[0].texts.size(), 2u);
  EXPECT_THAT(TokenTexts(samples[0].texts[1]), ElementsAre("A", "person", "rests"));
  EXPECT_THAT(samples[0].labels, ElementsAre("entailment"));
  EXPECT_EQ(samples[0].TokenCount(), 6u);
}

TEST(PairFormatTest, ColumnAndSideErrors) {
  EXPECT_EQ(ParseErrorLine("only\ttwo\n", CorpusFormat::kPair), 1u);
  EXPECT_EQ(ParseErrorLine("a\tb\tc\n \tb\tc\n", CorpusFormat::kPair), 2u);
  EXPECT_EQ(ParseErrorLine("a\tb\tc\td\n", CorpusFormat::kPair), 1u);
}

TEST(MultilabelFormatTest, LabelSets) {
  const auto samples = ParseCorpus("you are awful\ttoxic,insult\nhello there\t\n",
                                   CorpusFormat::kMultilabel);
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_THAT(samples[0].labels, ElementsAre("toxic", "insult"));
  EXPECT_TRUE(samples[1].labels.empty());
  EXPECT_EQ(ParseErrorLine("no label column\n", CorpusFormat::kMultilabel), 1u);
}

TEST(RoundTripTest, EveryFormat) {
  const std::pair<CorpusFormat, std::string> fixtures[] = {
      {CorpusFormat::kPlain, "Adversarial attacks are harmless .\n\nsecond  line\n"},
      {CorpusFormat::kTagged, "I\tPRON\nsee\tVERB\n\nyou\tPRON\n\n"},
      {CorpusFormat::kPair, "a b\tc  d\tneutral\nx\ty\t\n"},
      {CorpusFormat::kMultilabel, "go away\ttoxic,obscene\nfine\t\n"},
  };
  for (const auto& [format, text] : fixtures) {
    const auto samples = ParseCorpus(text, format);
    EXPECT_EQ(FormatCorpus(samples, format), text) << FormatName(format);
    EXPECT_EQ(ParseCorpus(FormatCorpus(samples, format), format), samples);
  }
}

TEST(WriterTest, DelimiterCollisionNamesSample) {
  auto samples = ParseCorpus("a\tX\n\nb\tY\n", CorpusFormat::kTagged);
  samples[1].texts[0].tokens[0].text = "b\tc";
  try {
    FormatCorpus(samples, CorpusFormat::kTagged);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDelimiterCollision);
    EXPECT_EQ(e.index(), 1u);
  }
  auto plain = ParseCorpus("a b\n", CorpusFormat::kPlain);
  plain[0].texts[0].tokens[0].text = "a\nb";
  EXPECT_THROW(FormatCorpus(plain, CorpusFormat::kPlain), Error);
  plain[0].texts[0].tokens[0].text = "a b";  // spaces are fine in plain text
  EXPECT_EQ(FormatCorpus(plain, CorpusFormat::kPlain), "a b b\n");
}

TEST_F(TempDir, StreamingReaderTracksLines) {
  const fs::path path = dir_ / "in.txt";
  std::ofstream(path) << "a\tX\n\nb\tY\nc\tZ\n";
  CorpusReader reader(path, CorpusFormat::kTagged);
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.line(), 2u);
  const auto second = reader.Next();
  ASSERT_TRUE(second);
  EXPECT_EQ(second->tags.size(), 2u);
  EXPECT_FALSE(reader.Next());
}

TEST_F(TempDir, MissingInputIsIoError) {
  try {
    CorpusReader reader(dir_ / "absent.txt", CorpusFormat::kPlain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST_F(TempDir, WriterIsAtomic) {
  const fs::path path = dir_ / "out.txt";
  std::ofstream(path) << "previous\n";
  {
    CorpusWriter writer(path, CorpusFormat::kPlain);
    writer.Write(MakePlainSample({"new"}));
    EXPECT_EQ(Slurp(path), "previous\n");
  }
  EXPECT_EQ(Slurp(path), "previous\n");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_), fs::directory_iterator()), 1);

  CorpusWriter writer(path, CorpusFormat::kPlain);
  writer.Write(MakePlainSample({"new"}));
  writer.Commit();
  EXPECT_EQ(Slurp(path), "new\n");
}

TEST_F(TempDir, ReportKeysInFixedOrder) {
  AttackReport report;
  report.samples_total = 2;
  report.tokens_total = 10;
  PerturbationConfig config;
  config.attack = AttackId::kVisual;
  config.p = 0.2;
  config.seed = 18446744073709551615ULL;
  const fs::path path = dir_ / "report.json";
  WriteReport(report, config, path);
  const auto json = nlohmann::ordered_json::parse(Slurp(path));
  std::vector<std::string> keys;
  for (const auto& item : json.items()) keys.push_back(item.key());
  EXPECT_THAT(keys, ElementsAre("samples_total", "tokens_total", "tokens_attacked",
                                "tokens_modified", "mean_norm_edit_distance",
                                "attack_id", "p", "phi", "seed"));
  EXPECT_EQ(json["attack_id"], "visual");
  EXPECT_DOUBLE_EQ(json["phi"].get<double>(), 0.2);
  EXPECT_EQ(json["seed"].get<std::uint64_t>(), 18446744073709551615ULL);
  EXPECT_EQ(json["tokens_attacked"], 0);
}

}  // namespace
}  // namespace zeroe
