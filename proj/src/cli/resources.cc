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

#include "cli/resources.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zeroe/error.h"
#include "zeroe/resources.h"

namespace zeroe::cli {
namespace {

std::ifstream OpenOrThrow(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, std::string("cannot open ") + what + " " + path);
  }
  return in;
}

}  // namespace

ResourceSet::ResourceSet(ResourceFlags flags) : flags_(std::move(flags)) {}

std::optional<std::string> ResourceSet::Locate(const std::string& flag,
                                               const char* file_name) const {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("ZEROE_RESOURCES");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  const auto candidate = std::filesystem::path(dir) / file_name;
  if (std::filesystem::is_regular_file(candidate)) return candidate.string();
  return std::nullopt;
}

const PhoneticDictionary& ResourceSet::Phonetics() {
  if (phonetics_) return *phonetics_;
  PhoneticDictionary dict;

  auto load = [&](const std::string& flag, const char* file_name,
                  const char* key, std::string_view fallback, auto&& apply) {
    if (auto path = Locate(flag, file_name)) {
      auto in = OpenOrThrow(*path, key);
      apply(static_cast<std::istream&>(in));
      sources_[key] = *path;
    } else {
      std::istringstream in{std::string(fallback)};
      apply(static_cast<std::istream&>(in));
      sources_[key] = "builtin";
    }
  };
  load(flags_.phon_dict, "phon_dict.txt", "phon_dict", builtin::Pronunciations(),
       [&](std::istream& in) { dict.LoadPronunciations(in); });
  load(flags_.homophones, "homophones.txt", "homophones", builtin::Homophones(),
       [&](std::istream& in) { dict.LoadHomophones(in); });
  load("", "g2p_rules.tsv", "g2p_rules", builtin::G2pRules(),
       [&](std::istream& in) { dict.SetG2pRules(ParseG2pRules(in)); });
  load("", "respell_rules.tsv", "respell_rules", builtin::RespellRules(),
       [&](std::istream& in) { dict.SetRespellRules(ParseRespellRules(in)); });
  phonetics_ = std::move(dict);
  return *phonetics_;
}

AttackResources ResourceSet::For(AttackId id) {
  AttackResources resources;
  switch (id) {
    case AttackId::kNaturalTypo:
      if (!typos_) {
        const auto path = Locate(flags_.typo_dict, "typo_dict.tsv");
        if (!path) {
          throw Error(ErrorCode::kMissingResource,
                      "natural-typo needs --typo-dict or typo_dict.tsv under "
                      "ZEROE_RESOURCES");
        }
        auto in = OpenOrThrow(*path, "typo dictionary");
        typos_ = TypoDictionary::Parse(in);
        sources_["typo_dict"] = *path;
      }
      resources.typos = &*typos_;
      break;
    case AttackId::kPhonetic:
      resources.phonetics = &Phonetics();
      break;
    case AttackId::kVisual:
      if (!visual_) {
        if (auto path = Locate(flags_.visual_table, "visual_table.txt")) {
          visual_ = LoadNeighborTable(*path);
          sources_["visual_table"] = *path;
        } else {
          visual_ = NeighborTable::Builtin();
          sources_["visual_table"] = "builtin";
        }
      }
      resources.visual = &*visual_;
      break;
    default:
      break;
  }
  return resources;
}

std::map<std::string, std::string> ResourceSet::SourcesFor(AttackId id) const {
  std::map<std::string, std::string> out;
  auto copy = [&](const char* key) {
    auto it = sources_.find(key);
    if (it != sources_.end()) out[key] = it->second;
  };
  switch (id) {
    case AttackId::kNaturalTypo:
      copy("typo_dict");
      break;
    case AttackId::kPhonetic:
      copy("phon_dict");
      copy("homophones");
      copy("g2p_rules");
      copy("respell_rules");
      break;
    case AttackId::kVisual:
      copy("visual_table");
      break;
    default:
      break;
  }
  return out;
}

}  // namespace zeroe::cli
