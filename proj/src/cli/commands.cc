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

#include "cli/commands.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <thread>
#include <utility>

#include "json.hpp"
#include "zeroe/cli.h"
#include "zeroe/corpus.h"
#include "zeroe/error.h"
#include "zeroe/metrics.h"
#include "zeroe/protocol.h"
#include "zeroe/visual.h"

namespace zeroe::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::size_t kBatchSize = 4096;

CorpusFormat RequireFormat(const std::string& name) {
  auto format = ParseFormat(name);
  if (!format) {
    throw Error(ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
  }
  return *format;
}

AttackId RequireAttack(const std::string& name) {
  auto id = ParseAttack(name);
  if (!id) {
    throw Error(ErrorCode::kInvalidArgument, "unknown attacker '" + name + "'");
  }
  return *id;
}

std::string FormatFixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

struct JobResult {
  AttackReport report;
  std::size_t missing_glyphs = 0;
};

struct Processed {
  Sample sample;
  std::size_t tokens_total = 0;
  std::size_t attacked = 0;
  std::size_t modified = 0;
  std::size_t missing = 0;
  double magnitude = 0.0;
};

// Perturbs `batch` in place of `processed`, splitting contiguous ranges
// across threads. Results depend only on each sample's global index.
void ProcessBatch(const std::vector<Sample>& batch, std::uint64_t first_index,
                  const PerturbationConfig& config, const Attacker& attacker,
                  unsigned threads, std::vector<Processed>& processed) {
  processed.resize(batch.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ProtocolResult result =
          PerturbSample(batch[i], first_index + i, config, attacker);
      Processed& slot = processed[i];
      slot.tokens_total = batch[i].TokenCount();
      slot.attacked = result.trace.attacked_indices.size();
      slot.modified = result.tokens_modified;
      slot.missing = result.missing_glyphs;
      slot.magnitude =
          slot.modified > 0 ? SampleMagnitude(batch[i], result.sample) : 0.0;
      slot.sample = std::move(result.sample);
    }
  };
  const std::size_t n = batch.size();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work(0, n);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          work(std::min(n, t * chunk), std::min(n, (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

JobResult RunAttackJob(const PerturbationConfig& config, CorpusFormat format,
                       const Attacker& attacker, const fs::path& in,
                       const fs::path& out, unsigned threads) {
  CorpusReader reader(in, format);
  CorpusWriter writer(out, format);
  ReportBuilder builder;
  JobResult result;
  std::vector<Sample> batch;
  std::vector<Processed> processed;
  std::uint64_t index = 0;
  bool done = false;
  while (!done) {
    batch.clear();
    while (batch.size() < kBatchSize) {
      auto sample = reader.Next();
      if (!sample) {
        done = true;
        break;
      }
      batch.push_back(std::move(*sample));
    }
    ProcessBatch(batch, index, config, attacker, threads, processed);
    for (const Processed& item : processed) {
      writer.Write(item.sample);
      builder.Add(item.tokens_total, item.attacked, item.modified,
                  item.magnitude);
      result.missing_glyphs += item.missing;
    }
    index += batch.size();
  }
  writer.Commit();
  result.report = builder.Build();
  return result;
}

Json ConfigJson(const PerturbationConfig& config, bool allow_identity_shuffle) {
  Json json;
  json["attack_id"] = AttackName(config.attack);
  json["p"] = config.p;
  json["phi"] = config.EffectivePhi();
  json["seed"] = config.seed;
  json["allow_identity_shuffle"] = allow_identity_shuffle;
  json["resources"] = Json::object();
  for (const auto& [name, source] : config.resources) {
    json["resources"][name] = source;
  }
  return json;
}

void WriteManifest(const fs::path& output, Json manifest) {
  fs::path path = output;
  path += ".manifest.json";
  WriteTextFile(path, manifest.dump(2) + "\n");
}

struct AttackRun {
  PerturbationConfig config;
  CorpusFormat format;
  fs::path in;
  fs::path out;
  fs::path report;
  bool allow_identity_shuffle = false;
  unsigned threads = 1;
};

JobResult ExecuteRun(const AttackRun& run, ResourceSet& resources,
                     std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Attacker attacker(run.config.attack, run.config.EffectivePhi(),
                          resources.For(run.config.attack),
                          AttackOptions{run.allow_identity_shuffle});
  PerturbationConfig config = run.config;
  config.resources = resources.SourcesFor(config.attack);
  JobResult result = RunAttackJob(config, run.format, attacker, run.in,
                                  run.out, run.threads);
  if (!run.report.empty()) WriteReport(result.report, config, run.report);
  if (result.missing_glyphs > 0) {
    err << "warning: " << result.missing_glyphs
        << " characters had no visual neighbors and were left unchanged\n";
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  Json manifest;
  manifest["tool"] = "zeroe";
  manifest["version"] = kToolVersion;
  manifest["command"] = "attack";
  manifest["config"] = ConfigJson(config, run.allow_identity_shuffle);
  manifest["format"] = FormatName(run.format);
  manifest["input"] = run.in.string();
  manifest["output"] = run.out.string();
  manifest["report"] = run.report.empty() ? Json(nullptr) : Json(run.report.string());
  manifest["duration_seconds"] = elapsed.count();
  WriteManifest(run.out, std::move(manifest));
  return result;
}

void CheckInputExists(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "--in is required");
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::kIo, "input corpus " + path + " not found");
  }
}

struct SweepFile {
  AttackId attack;
  double level;
  CorpusFormat format;
  fs::path path;
};

// Recognizes `<attacker>.<level>.<format>` file names.
std::optional<SweepFile> ParseSweepName(const fs::path& path) {
  const std::string name = path.filename().string();
  const auto first_dot = name.find('.');
  const auto last_dot = name.rfind('.');
  if (first_dot == std::string::npos || last_dot <= first_dot) {
    return std::nullopt;
  }
  auto attack = ParseAttack(name.substr(0, first_dot));
  auto format = ParseFormat(name.substr(last_dot + 1));
  if (!attack || !format) return std::nullopt;
  const std::string level_text =
      name.substr(first_dot + 1, last_dot - first_dot - 1);
  double level = 0.0;
  auto [ptr, ec] = std::from_chars(level_text.data(),
                                   level_text.data() + level_text.size(), level);
  if (ec != std::errc() || ptr != level_text.data() + level_text.size()) {
    return std::nullopt;
  }
  return SweepFile{*attack, level, *format, path};
}

}  // namespace

double ParseLevel(const std::string& text) {
  if (text == "low") return 0.2;
  if (text == "mid") return 0.5;
  if (text == "high") return 0.8;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "level must be low, mid, high or a number in [0, 1], got '" +
                    text + "'");
  }
  return value;
}

std::string FormatLevel(double level) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), level);
  return std::string(buffer, ptr);
}

int CmdAttack(const AttackFlags& flags, std::ostream& /*out*/,
              std::ostream& err) {
  AttackRun run;
  run.config.attack = RequireAttack(flags.attacker);
  run.config.p = ParseLevel(flags.level);
  run.config.phi = flags.phi;
  run.config.seed = flags.seed;
  run.config.Validate();
  run.format = RequireFormat(flags.format);
  if (run.config.attack == AttackId::kSegment &&
      run.format == CorpusFormat::kTagged) {
    throw Error(ErrorCode::kSegmentOnTagged,
                "SegmentOnTagged: segment cannot be applied to tagged corpora");
  }
  if (flags.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  CheckInputExists(flags.in);
  run.in = flags.in;
  run.out = flags.out;
  run.report = flags.report;
  run.allow_identity_shuffle = flags.allow_identity_shuffle;
  run.threads = std::max(1u, flags.threads);
  ResourceSet resources(flags.resources);
  ExecuteRun(run, resources, err);
  return kExitOk;
}

int CmdSweep(const SweepFlags& flags, std::ostream& out, std::ostream& err) {
  const CorpusFormat format = RequireFormat(flags.base.format);
  std::vector<AttackId> attackers;
  if (flags.attackers.empty()) {
    attackers.assign(kAllAttacks.begin(), kAllAttacks.end());
  } else {
    for (const auto& name : flags.attackers) attackers.push_back(RequireAttack(name));
  }
  std::vector<double> levels;
  for (const auto& text : flags.levels) levels.push_back(ParseLevel(text));
  if (flags.base.phi && !(*flags.base.phi >= 0.0 && *flags.base.phi <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "phi must lie in [0, 1]");
  }
  if (flags.base.out.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--out is required");
  }
  CheckInputExists(flags.base.in);
  const fs::path dir = flags.base.out;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "cannot create output directory " + dir.string());
  }

  ResourceSet resources(flags.base.resources);
  bool skipped = false;
  std::size_t written = 0;
  for (AttackId id : attackers) {
    if (id == AttackId::kSegment && format == CorpusFormat::kTagged) continue;
    try {
      resources.For(id);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMissingResource) throw;
      err << "warning: skipping " << AttackName(id) << ": " << e.what() << "\n";
      skipped = true;
      continue;
    }
    for (double level : levels) {
      const std::string stem =
          std::string(AttackName(id)) + "." + FormatLevel(level);
      AttackRun run;
      run.config.attack = id;
      run.config.p = level;
      run.config.phi = flags.base.phi;
      run.config.seed = flags.base.seed;
      run.format = format;
      run.in = flags.base.in;
      run.out = dir / (stem + "." + std::string(FormatName(format)));
      run.report = dir / (stem + ".report.json");
      run.allow_identity_shuffle = flags.base.allow_identity_shuffle;
      run.threads = std::max(1u, flags.base.threads);
      ExecuteRun(run, resources, err);
      ++written;
    }
  }
  out << "wrote " << written << " corpora to " << dir.string() << "\n";
  return skipped ? kExitPartial : kExitOk;
}

int CmdMix(const MixFlags& flags, std::ostream& out, std::ostream& /*err*/) {
  MixtureMode mode;
  if (flags.mode == "levels") {
    mode = MixtureMode::kLevels;
  } else if (flags.mode == "loo") {
    mode = MixtureMode::kLeaveOneOut;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--mode must be levels or loo");
  }
  std::optional<AttackId> excluded;
  if (mode == MixtureMode::kLeaveOneOut) {
    if (flags.exclude.empty()) {
      throw Error(ErrorCode::kExcludedAttackerAbsent,
                  "--mode loo requires --exclude");
    }
    excluded = RequireAttack(flags.exclude);
  }
  if (flags.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  if (!fs::is_directory(flags.sweep_dir)) {
    throw Error(ErrorCode::kIo, "sweep directory " + flags.sweep_dir + " not found");
  }

  std::vector<SweepFile> files;
  for (const auto& entry : fs::directory_iterator(flags.sweep_dir)) {
    if (!entry.is_regular_file()) continue;
    if (auto file = ParseSweepName(entry.path())) files.push_back(*file);
  }
  std::sort(files.begin(), files.end(), [](const SweepFile& a, const SweepFile& b) {
    if (a.attack != b.attack) return a.attack < b.attack;
    return a.level < b.level;
  });
  if (files.empty()) {
    throw Error(ErrorCode::kIo, "no corpora found in " + flags.sweep_dir);
  }
  const CorpusFormat format = files.front().format;
  for (const auto& file : files) {
    if (file.format != format) {
      throw Error(ErrorCode::kMisalignment,
                  "sweep directory mixes corpus formats");
    }
  }
  if (mode == MixtureMode::kLevels) {
    std::optional<AttackId> only;
    if (!flags.attacker.empty()) {
      only = RequireAttack(flags.attacker);
    } else if (std::all_of(files.begin(), files.end(), [&](const SweepFile& f) {
                 return f.attack == files.front().attack;
               })) {
      only = files.front().attack;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "--mode levels over several attackers needs --attacker");
    }
    std::erase_if(files, [&](const SweepFile& f) { return f.attack != *only; });
    if (files.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no corpora for attacker " + std::string(AttackName(*only)));
    }
  }

  std::vector<MixtureSource> sources;
  for (const auto& file : files) sources.push_back({file.attack, file.level});
  const MixturePicker picker(sources, mode, excluded, flags.seed);

  std::vector<std::unique_ptr<CorpusReader>> readers(files.size());
  for (std::size_t i : picker.eligible()) {
    readers[i] = std::make_unique<CorpusReader>(files[i].path, format);
  }
  std::vector<std::uint64_t> counts(files.size(), 0);
  CorpusWriter writer(flags.out, format);
  std::vector<std::optional<Sample>> row(files.size());
  for (std::uint64_t index = 0;; ++index) {
    std::size_t present = 0;
    for (std::size_t i : picker.eligible()) {
      row[i] = readers[i]->Next();
      if (row[i]) ++present;
    }
    if (present == 0) break;
    if (present != picker.eligible().size()) {
      throw Error::AtSample(ErrorCode::kMisalignment, index,
                            "sweep corpora differ in sample count");
    }
    const std::size_t pick = picker.Pick(index);
    writer.Write(*row[pick]);
    ++counts[pick];
  }
  writer.Commit();

  Json manifest;
  manifest["tool"] = "zeroe";
  manifest["version"] = kToolVersion;
  manifest["command"] = "mix";
  manifest["mode"] = flags.mode;
  manifest["exclude"] = excluded ? Json(AttackName(*excluded)) : Json(nullptr);
  manifest["seed"] = flags.seed;
  manifest["format"] = FormatName(format);
  manifest["sweep_dir"] = flags.sweep_dir;
  manifest["output"] = flags.out;
  manifest["sources"] = Json::array();
  for (std::size_t i : picker.eligible()) {
    Json source;
    source["file"] = files[i].path.filename().string();
    source["attack_id"] = AttackName(files[i].attack);
    source["level"] = files[i].level;
    source["samples"] = counts[i];
    manifest["sources"].push_back(std::move(source));
  }
  WriteManifest(flags.out, std::move(manifest));
  out << "mixed " << writer.count() << " samples from "
      << picker.eligible().size() << " corpora\n";
  return kExitOk;
}

int CmdStats(const StatsFlags& flags, std::ostream& out, std::ostream& /*err*/) {
  const CorpusFormat format = RequireFormat(flags.format);
  CorpusReader clean(fs::path(flags.clean), format);
  CorpusReader perturbed(fs::path(flags.perturbed), format);
  std::uint64_t samples = 0;
  std::uint64_t clean_tokens = 0;
  std::uint64_t token_edits = 0;
  double magnitude_sum = 0.0;
  while (true) {
    auto a = clean.Next();
    auto b = perturbed.Next();
    if (!a && !b) break;
    if (!a || !b) {
      throw Error::AtSample(ErrorCode::kMisalignment, samples,
                            "corpora differ in sample count");
    }
    magnitude_sum += SampleMagnitude(*a, *b);
    token_edits += TokenEditDistance(*a, *b);
    clean_tokens += a->TokenCount();
    ++samples;
  }
  Json json;
  json["samples"] = samples;
  json["corpus_magnitude"] =
      samples == 0 ? 0.0 : magnitude_sum / static_cast<double>(samples);
  json["token_modification_rate"] =
      clean_tokens == 0 ? 0.0
                        : static_cast<double>(token_edits) /
                              static_cast<double>(clean_tokens);
  out << json.dump() << "\n";
  return kExitOk;
}

int CmdRelScore(const MetricFlags& flags, std::ostream& out) {
  const double value = RelativeScore({flags.clean, flags.score, std::nullopt, 0.0});
  out << "{\"metric\": \"rel-score\", \"value\": " << FormatFixed6(value) << "}\n";
  return kExitOk;
}

int CmdDelta(const MetricFlags& flags, std::ostream& out) {
  const double value = DefenseDelta({flags.clean, flags.score, flags.shielded, 0.0});
  out << "{\"metric\": \"delta\", \"value\": " << FormatFixed6(value) << "}\n";
  return kExitOk;
}

int CmdPhonSim(const PhonFlags& flags, std::ostream& out) {
  ResourceFlags resource_flags;
  resource_flags.phon_dict = flags.phon_dict;
  ResourceSet resources(resource_flags);
  const PhoneticDictionary& dict = resources.Phonetics();
  const PhonemeSequence a = dict.G2p(flags.word1);
  const PhonemeSequence b = dict.G2p(flags.word2);
  const PhonemeDistance distance = ComputePhonemeDistance(a, b);
  Json json;
  json["word1"] = flags.word1;
  json["phonemes1"] = a.ToString();
  json["word2"] = flags.word2;
  json["phonemes2"] = b.ToString();
  json["d"] = distance.edits;
  json["delta"] = distance.delta;
  json["class"] = SimilarityClassName(Classify(distance.delta));
  out << json.dump() << "\n";
  return kExitOk;
}

int CmdVisualBuild(const VisualBuildFlags& flags, std::ostream& out,
                   std::ostream& err) {
  std::ifstream in(flags.bitmaps, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open bitmaps " + flags.bitmaps);
  if (flags.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  const std::vector<GlyphBitmap> bitmaps = ParseBitmaps(in);
  if (flags.k + 1 > bitmaps.size() && bitmaps.size() >= 2) {
    err << "warning: k=" << flags.k << " exceeds the " << bitmaps.size() - 1
        << " other glyphs; lists are truncated\n";
  }
  const NeighborTable table =
      BuildNeighbors(bitmaps, flags.k, std::max(1u, flags.threads));
  AtomicFile file(flags.out);
  WriteNeighborTable(table, file.stream());
  file.Commit();
  out << "wrote neighbors for " << table.size() << " glyphs\n";
  return kExitOk;
}

}  // namespace zeroe::cli
