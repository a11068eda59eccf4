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

#ifndef ZEROE_CLI_COMMANDS_H_
#define ZEROE_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/resources.h"

namespace zeroe::cli {

struct AttackFlags {
  std::string attacker;
  std::string level;
  std::optional<double> phi;
  std::uint64_t seed = 0;
  std::string format = "plain";
  std::string in;
  std::string out;
  std::string report;
  ResourceFlags resources;
  bool allow_identity_shuffle = false;
  unsigned threads = 1;
};

struct SweepFlags {
  AttackFlags base;  // attacker and level unused; out is a directory
  std::vector<std::string> levels = {"0.2", "0.5", "0.8"};
  std::vector<std::string> attackers;  // empty means all ten
};

struct MixFlags {
  std::string mode;
  std::string exclude;
  std::string attacker;
  std::string sweep_dir;
  std::uint64_t seed = 0;
  std::string out;
};

struct StatsFlags {
  std::string clean;
  std::string perturbed;
  std::string format = "plain";
};

struct MetricFlags {
  double clean = 0.0;
  double score = 0.0;
  std::optional<double> shielded;
};

struct PhonFlags {
  std::string word1;
  std::string word2;
  std::string phon_dict;
};

struct VisualBuildFlags {
  std::string bitmaps;
  std::size_t k = 20;
  std::string out;
  unsigned threads = 1;
};

// Each command reports failures by throwing zeroe::Error; the dispatcher
// maps error codes to exit codes.
int CmdAttack(const AttackFlags& flags, std::ostream& out, std::ostream& err);
int CmdSweep(const SweepFlags& flags, std::ostream& out, std::ostream& err);
int CmdMix(const MixFlags& flags, std::ostream& out, std::ostream& err);
int CmdStats(const StatsFlags& flags, std::ostream& out, std::ostream& err);
int CmdRelScore(const MetricFlags& flags, std::ostream& out);
int CmdDelta(const MetricFlags& flags, std::ostream& out);
int CmdPhonSim(const PhonFlags& flags, std::ostream& out);
int CmdVisualBuild(const VisualBuildFlags& flags, std::ostream& out,
                   std::ostream& err);

// "low", "mid", "high" or a number in [0, 1].
double ParseLevel(const std::string& text);
// Shortest round-tripping decimal, as used in sweep file names.
std::string FormatLevel(double level);

}  // namespace zeroe::cli

#endif  // ZEROE_CLI_COMMANDS_H_
