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

#include "zeroe/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace zeroe {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void Spit(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zeroe_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("ZEROE_RESOURCES");
    Spit(Path("plain.txt"),
         "The quick brown fox jumps over the lazy dog .\n"
         "  odd   spacing\tstays put  \n"
         "Their friends would receive the message tomorrow\n");
    Spit(Path("tagged.txt"),
         "The\tDT\nquick\tJJ\nfox\tNN\n\nDogs\tNNS\nbark\tVBP\n\n");
  }
  void TearDown() override {
    ::unsetenv("ZEROE_RESOURCES");
    fs::remove_all(dir_);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, VersionAndUsage) {
  EXPECT_EQ(Cli({"--version"}).out, "0.1.0\n");
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"attack", "--attacker", "intrude"}).code, kExitUsage);
  EXPECT_EQ(Cli({"attack", "--attacker", "bogus", "--level", "low", "--in",
                 Path("plain.txt"), "--out", Path("o.txt")})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"attack", "--attacker", "intrude", "--level", "1.5", "--in",
                 Path("plain.txt"), "--out", Path("o.txt")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, LevelZeroIsByteIdentical) {
  for (const char* attacker : {"inner-shuffle", "intrude", "visual", "segment"}) {
    const auto run = Cli({"attack", "--attacker", attacker, "--level", "0", "--in",
                          Path("plain.txt"), "--out", Path("zero.txt")});
    ASSERT_EQ(run.code, kExitOk) << run.err;
    EXPECT_EQ(Slurp(Path("zero.txt")), Slurp(Path("plain.txt"))) << attacker;
  }
}

TEST_F(CliTest, AttackWritesReportAndManifest) {
  const auto run = Cli({"attack", "--attacker", "intrude", "--level", "high", "--seed",
                        "3", "--in", Path("plain.txt"), "--out", Path("out.txt"),
                        "--report", Path("out.json")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const auto report = nlohmann::json::parse(Slurp(Path("out.json")));
  EXPECT_EQ(report["samples_total"], 3);
  EXPECT_EQ(report["attack_id"], "intrude");
  EXPECT_EQ(report["seed"], 3);
  EXPECT_DOUBLE_EQ(report["p"].get<double>(), 0.8);
  const auto manifest = nlohmann::json::parse(Slurp(Path("out.txt.manifest.json")));
  EXPECT_EQ(manifest["config"]["attack_id"], "intrude");
  EXPECT_EQ(manifest["version"], "0.1.0");
  EXPECT_NE(Slurp(Path("out.txt")), Slurp(Path("plain.txt")));
}

TEST_F(CliTest, AttackIsDeterministicAcrossThreads) {
  auto attack = [&](const std::string& out, const std::string& threads) {
    return Cli({"attack", "--attacker", "visual", "--level", "0.5", "--seed", "11",
                "--threads", threads, "--in", Path("plain.txt"), "--out", Path(out)});
  };
  ASSERT_EQ(attack("a.txt", "1").code, kExitOk);
  ASSERT_EQ(attack("b.txt", "1").code, kExitOk);
  ASSERT_EQ(attack("c.txt", "4").code, kExitOk);
  EXPECT_EQ(Slurp(Path("a.txt")), Slurp(Path("b.txt")));
  EXPECT_EQ(Slurp(Path("a.txt")), Slurp(Path("c.txt")));
}

TEST_F(CliTest, SegmentOnTaggedIsUsageError) {
  const auto run = Cli({"attack", "--attacker", "segment", "--level", "0.5", "--format",
                        "tagged", "--in", Path("tagged.txt"), "--out", Path("o.txt")});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_FALSE(fs::exists(Path("o.txt")));
}

TEST_F(CliTest, MissingInputIsIoError) {
  EXPECT_EQ(Cli({"attack", "--attacker", "intrude", "--level", "0.5", "--in",
                 Path("absent.txt"), "--out", Path("o.txt")})
                .code,
            kExitIo);
}

TEST_F(CliTest, MalformedInputIsParseError) {
  Spit(Path("bad.txt"), "one\tTAG\ntwo\n\n");
  const auto run = Cli({"attack", "--attacker", "intrude", "--level", "0.5", "--format",
                        "tagged", "--in", Path("bad.txt"), "--out", Path("o.txt")});
  EXPECT_EQ(run.code, kExitIo);
  EXPECT_THAT(run.err, HasSubstr("line 2"));
}

TEST_F(CliTest, NaturalTypoNeedsDictionary) {
  EXPECT_EQ(Cli({"attack", "--attacker", "natural-typo", "--level", "0.5", "--in",
                 Path("plain.txt"), "--out", Path("o.txt")})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"attack", "--attacker", "natural-typo", "--level", "0.5", "--in",
                 Path("plain.txt"), "--out", Path("o.txt"), "--typo-dict",
                 std::string(ZEROE_RESOURCE_DIR) + "/typo_dict.tsv"})
                .code,
            kExitOk);
}

std::size_t CountFiles(const fs::path& dir, const std::string& suffix) {
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() >= suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      ++n;
    }
  }
  return n;
}

TEST_F(CliTest, SweepProducesThirtyCorpora) {
  ::setenv("ZEROE_RESOURCES", ZEROE_RESOURCE_DIR, 1);
  const auto run = Cli({"sweep", "--in", Path("plain.txt"), "--out", Path("sweep")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(CountFiles(Path("sweep"), ".plain"), 30u);
  EXPECT_EQ(CountFiles(Path("sweep"), ".report.json"), 30u);
  EXPECT_TRUE(fs::exists(Path("sweep/visual.0.2.plain")));
  EXPECT_THAT(run.out, HasSubstr("wrote 30 corpora"));
}

TEST_F(CliTest, SweepSkipsSegmentForTagged) {
  const auto run = Cli({"sweep", "--format", "tagged", "--in", Path("tagged.txt"),
                        "--out", Path("sweep"), "--typo-dict",
                        std::string(ZEROE_RESOURCE_DIR) + "/typo_dict.tsv"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(CountFiles(Path("sweep"), ".tagged"), 27u);
  EXPECT_FALSE(fs::exists(Path("sweep/segment.0.2.tagged")));
}

TEST_F(CliTest, SweepWithoutTypoDictionaryIsPartial) {
  const auto run = Cli({"sweep", "--in", Path("plain.txt"), "--out", Path("sweep")});
  EXPECT_EQ(run.code, kExitPartial);
  EXPECT_THAT(run.err, HasSubstr("natural-typo"));
  EXPECT_EQ(CountFiles(Path("sweep"), ".plain"), 27u);
}

TEST_F(CliTest, SweepCustomGrid) {
  const auto run = Cli({"sweep", "--levels", "low,0.35", "--attackers",
                        "truncate,visual", "--in", Path("plain.txt"), "--out",
                        Path("sweep")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(CountFiles(Path("sweep"), ".plain"), 4u);
  EXPECT_TRUE(fs::exists(Path("sweep/truncate.0.35.plain")));
}

TEST_F(CliTest, MixLeaveOneOut) {
  ::setenv("ZEROE_RESOURCES", ZEROE_RESOURCE_DIR, 1);
  ASSERT_EQ(Cli({"sweep", "--in", Path("plain.txt"), "--out", Path("sweep")}).code,
            kExitOk);
  const auto run = Cli({"mix", "--mode", "loo", "--exclude", "visual", "--sweep-dir",
                        Path("sweep"), "--out", Path("mix.txt"), "--seed", "4"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const auto manifest = nlohmann::json::parse(Slurp(Path("mix.txt.manifest.json")));
  ASSERT_EQ(manifest["sources"].size(), 27u);
  for (const auto& source : manifest["sources"]) EXPECT_NE(source["attack_id"], "visual");
  std::istringstream lines(Slurp(Path("mix.txt")));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);
}

TEST_F(CliTest, MixLevelsOfOneAttacker) {
  ASSERT_EQ(Cli({"sweep", "--attackers", "truncate", "--in", Path("plain.txt"), "--out",
                 Path("sweep")})
                .code,
            kExitOk);
  const auto run = Cli({"mix", "--mode", "levels", "--sweep-dir", Path("sweep"),
                        "--out", Path("mix.txt")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_THAT(run.out, HasSubstr("from 3 corpora"));
}

TEST_F(CliTest, MixErrors) {
  EXPECT_EQ(Cli({"mix", "--mode", "loo", "--exclude", "visual", "--sweep-dir",
                 Path("nowhere"), "--out", Path("mix.txt")})
                .code,
            kExitIo);
  ASSERT_EQ(Cli({"sweep", "--attackers", "truncate,visual", "--in", Path("plain.txt"),
                 "--out", Path("sweep")})
                .code,
            kExitOk);
  EXPECT_EQ(Cli({"mix", "--mode", "loo", "--sweep-dir", Path("sweep"), "--out",
                 Path("mix.txt")})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"mix", "--mode", "loo", "--exclude", "phonetic", "--sweep-dir",
                 Path("sweep"), "--out", Path("mix.txt")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, Stats) {
  auto run = Cli({"stats", "--clean", Path("plain.txt"), "--perturbed",
                  Path("plain.txt")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  auto json = nlohmann::json::parse(run.out);
  EXPECT_EQ(json["samples"], 3);
  EXPECT_DOUBLE_EQ(json["corpus_magnitude"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(json["token_modification_rate"].get<double>(), 0.0);

  Spit(Path("a.txt"), "abc\n");
  Spit(Path("b.txt"), "abd\n");
  run = Cli({"stats", "--clean", Path("a.txt"), "--perturbed", Path("b.txt")});
  json = nlohmann::json::parse(run.out);
  EXPECT_NEAR(json["corpus_magnitude"].get<double>(), 1.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(json["token_modification_rate"].get<double>(), 1.0);

  Spit(Path("two.txt"), "abc\nabc\n");
  EXPECT_EQ(Cli({"stats", "--clean", Path("a.txt"), "--perturbed", Path("two.txt")})
                .code,
            kExitIo);
}

TEST_F(CliTest, Metrics) {
  auto run = Cli({"metrics", "rel-score", "--clean", "96.65", "--score", "18.15"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "{\"metric\": \"rel-score\", \"value\": 0.187791}\n");
  run = Cli({"metrics", "delta", "--clean", "96.65", "--score", "18.15", "--shielded",
             "19.44"});
  EXPECT_EQ(run.out, "{\"metric\": \"delta\", \"value\": 0.013347}\n");
  EXPECT_EQ(Cli({"metrics", "rel-score", "--clean", "0", "--score", "1"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"metrics", "delta", "--clean", "1", "--score", "1"}).code, kExitUsage);
}

TEST_F(CliTest, PhonSim) {
  auto run = Cli({"phon", "sim", "byte", "bite"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const auto json = nlohmann::json::parse(run.out);
  EXPECT_EQ(json["d"], 0);
  EXPECT_EQ(json["class"], "identical");
  EXPECT_EQ(json["phonemes1"], json["phonemes2"]);
  EXPECT_EQ(Cli({"phon", "sim", "a", "b", "--phon-dict", Path("none.txt")}).code,
            kExitIo);
}


std::string Bitmap(const std::string& cp, int value) {
  std::string text = cp + "\n";
  for (int r = 0; r < 24; ++r) {
    for (int c = 0; c < 24; ++c) {
      text += (c ? " " : "") + std::to_string(r == 0 && c == 0 ? value : 0);
    }
    text += "\n";
  }
  return text + "\n";
}

TEST_F(CliTest, VisualBuildNeighbors) {
  Spit(Path("glyphs.txt"),
       Bitmap("U+0061", 0) + Bitmap("U+0062", 10) + Bitmap("U+0063", 250));
  auto run = Cli({"visual", "build-neighbors", "--bitmaps", Path("glyphs.txt"), "--k",
                  "1", "--out", Path("table.txt")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(Slurp(Path("table.txt")),
            "U+0061\tU+0062\nU+0062\tU+0061\nU+0063\tU+0062\n");

  run = Cli({"visual", "build-neighbors", "--bitmaps", Path("glyphs.txt"), "--k", "5",
             "--out", Path("table.txt")});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_THAT(run.err, HasSubstr("warning"));

  Spit(Path("dup.txt"), Bitmap("U+0061", 0) + Bitmap("U+0061", 3));
  EXPECT_EQ(Cli({"visual", "build-neighbors", "--bitmaps", Path("dup.txt"), "--out",
                 Path("t.txt")})
                .code,
            kExitIo);
}

}  // namespace
}  // namespace zeroe
