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

// Resource discovery for the command-line tool: explicit flags, then the
// ZEROE_RESOURCES directory, then compiled-in tables.

#ifndef ZEROE_CLI_RESOURCES_H_
#define ZEROE_CLI_RESOURCES_H_

#include <map>
#include <optional>
#include <string>

#include "zeroe/attacks.h"
#include "zeroe/phonetics.h"
#include "zeroe/visual.h"

namespace zeroe::cli {

struct ResourceFlags {
  std::string typo_dict;
  std::string phon_dict;
  std::string homophones;
  std::string visual_table;
};

// Loads only what an attack needs. Parsed tables are kept so a sweep loads
// each at most once.
class ResourceSet {
 public:
  explicit ResourceSet(ResourceFlags flags);

  // Throws kMissingResource when no source exists for a required table,
  // kIo / kParseError when a file is unreadable or malformed.
  AttackResources For(AttackId id);

  // Resolved source ("builtin" or a path) of every table loaded so far.
  const std::map<std::string, std::string>& sources() const { return sources_; }
  std::map<std::string, std::string> SourcesFor(AttackId id) const;

  const PhoneticDictionary& Phonetics();

 private:
  std::optional<std::string> Locate(const std::string& flag,
                                    const char* file_name) const;

  ResourceFlags flags_;
  std::optional<TypoDictionary> typos_;
  std::optional<PhoneticDictionary> phonetics_;
  std::optional<NeighborTable> visual_;
  std::map<std::string, std::string> sources_;
};

}  // namespace zeroe::cli

#endif  // ZEROE_CLI_RESOURCES_H_
