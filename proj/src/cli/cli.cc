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

#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "zeroe/error.h"

namespace zeroe {
namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSegmentOnTagged:
    case ErrorCode::kMissingResource:
    case ErrorCode::kEmptyWord:
    case ErrorCode::kEmptySequence:
    case ErrorCode::kZeroCleanScore:
    case ErrorCode::kMissingShieldedScore:
    case ErrorCode::kExcludedAttackerAbsent:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

void AddResourceFlags(CLI::App* app, cli::ResourceFlags& flags) {
  app->add_option("--typo-dict", flags.typo_dict, "word<TAB>variant typo dictionary");
  app->add_option("--phon-dict", flags.phon_dict, "pronunciation dictionary");
  app->add_option("--homophones", flags.homophones, "homophone groups");
  app->add_option("--visual-table", flags.visual_table, "visual neighbor table");
}

void AddCorpusFlags(CLI::App* app, cli::AttackFlags& flags, double& phi) {
  app->add_option("--phi", phi, "character-level probability (default: level)")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--seed", flags.seed, "global seed");
  app->add_option("--format", flags.format, "plain, tagged, pair or multilabel")
      ->check(CLI::IsMember({"plain", "tagged", "pair", "multilabel"}));
  app->add_option("--in", flags.in, "input corpus")->required();
  app->add_flag("--allow-identity-shuffle", flags.allow_identity_shuffle,
                "let shuffles return the word unchanged");
  app->add_option("--threads", flags.threads, "worker threads")
      ->check(CLI::Range(1u, 256u));
  AddResourceFlags(app, flags.resources);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Character-level adversarial text attacks"};
  app.name("zeroe");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  cli::AttackFlags attack;
  double attack_phi = kUnset;
  auto* attack_cmd = app.add_subcommand("attack", "perturb one corpus");
  attack_cmd->add_option("--attacker", attack.attacker, "attack name")->required();
  attack_cmd->add_option("--level", attack.level, "p: low, mid, high or a number")
      ->required();
  attack_cmd->add_option("--out", attack.out, "output corpus")->required();
  attack_cmd->add_option("--report", attack.report, "JSON report path");
  AddCorpusFlags(attack_cmd, attack, attack_phi);

  cli::SweepFlags sweep;
  double sweep_phi = kUnset;
  auto* sweep_cmd = app.add_subcommand("sweep", "perturb at every attacker and level");
  sweep_cmd->add_option("--levels", sweep.levels, "comma-separated levels")
      ->delimiter(',');
  sweep_cmd->add_option("--attackers", sweep.attackers, "comma-separated attackers")
      ->delimiter(',');
  sweep_cmd->add_option("--out", sweep.base.out, "output directory")->required();
  AddCorpusFlags(sweep_cmd, sweep.base, sweep_phi);

  cli::MixFlags mix;
  auto* mix_cmd = app.add_subcommand("mix", "build an adversarial-training mixture");
  mix_cmd->add_option("--mode", mix.mode, "levels or loo")->required();
  mix_cmd->add_option("--exclude", mix.exclude, "attacker left out (loo)");
  mix_cmd->add_option("--attacker", mix.attacker, "attacker whose levels to mix");
  mix_cmd->add_option("--sweep-dir", mix.sweep_dir, "sweep output directory")
      ->required();
  mix_cmd->add_option("--seed", mix.seed, "mixture seed");
  mix_cmd->add_option("--out", mix.out, "output corpus")->required();

  cli::StatsFlags stats;
  auto* stats_cmd = app.add_subcommand("stats", "perturbation magnitude of a corpus");
  stats_cmd->add_option("--clean", stats.clean, "clean corpus")->required();
  stats_cmd->add_option("--perturbed", stats.perturbed, "perturbed corpus")->required();
  stats_cmd->add_option("--format", stats.format, "corpus format")
      ->check(CLI::IsMember({"plain", "tagged", "pair", "multilabel"}));

  cli::MetricFlags metric;
  double shielded = kUnset;
  auto* metrics_cmd = app.add_subcommand("metrics", "score arithmetic");
  metrics_cmd->require_subcommand(1);
  auto* rel_cmd = metrics_cmd->add_subcommand("rel-score", "attacked / clean");
  rel_cmd->add_option("--clean", metric.clean, "clean score s(0)")->required();
  rel_cmd->add_option("--score", metric.score, "attacked score s(p)")->required();
  auto* delta_cmd = metrics_cmd->add_subcommand(
      "delta", "shielded / clean - attacked / clean");
  delta_cmd->add_option("--clean", metric.clean, "clean score s(0)")->required();
  delta_cmd->add_option("--score", metric.score, "attacked score s(p)")->required();
  delta_cmd->add_option("--shielded", shielded, "shielded score")->required();

  cli::PhonFlags phon;
  auto* phon_cmd = app.add_subcommand("phon", "phonetic similarity");
  phon_cmd->require_subcommand(1);
  auto* sim_cmd = phon_cmd->add_subcommand("sim", "compare two words");
  sim_cmd->add_option("word1", phon.word1)->required();
  sim_cmd->add_option("word2", phon.word2)->required();
  sim_cmd->add_option("--phon-dict", phon.phon_dict, "pronunciation dictionary");

  cli::VisualBuildFlags visual;
  auto* visual_cmd = app.add_subcommand("visual", "visual neighbor tables");
  visual_cmd->require_subcommand(1);
  auto* build_cmd = visual_cmd->add_subcommand(
      "build-neighbors", "nearest glyphs by pixel distance");
  build_cmd->add_option("--bitmaps", visual.bitmaps, "glyph bitmap file")->required();
  build_cmd->add_option("--k", visual.k, "neighbors per glyph")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--out", visual.out, "neighbor table path")->required();
  build_cmd->add_option("--threads", visual.threads, "worker threads")
      ->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto optional_of = [](double value) {
    return value == value ? std::optional<double>(value) : std::nullopt;
  };
  try {
    if (*attack_cmd) {
      attack.phi = optional_of(attack_phi);
      return cli::CmdAttack(attack, out, err);
    }
    if (*sweep_cmd) {
      sweep.base.phi = optional_of(sweep_phi);
      return cli::CmdSweep(sweep, out, err);
    }
    if (*mix_cmd) return cli::CmdMix(mix, out, err);
    if (*stats_cmd) return cli::CmdStats(stats, out, err);
    if (*rel_cmd) return cli::CmdRelScore(metric, out);
    if (*delta_cmd) {
      metric.shielded = optional_of(shielded);
      return cli::CmdDelta(metric, out);
    }
    if (*sim_cmd) return cli::CmdPhonSim(phon, out);
    if (*build_cmd) return cli::CmdVisualBuild(visual, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

int RunCli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace zeroe
