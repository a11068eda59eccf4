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

// Contents of the files under resources/, compiled in at build time.

#ifndef ZEROE_RESOURCES_H_
#define ZEROE_RESOURCES_H_

#include <string_view>

namespace zeroe::builtin {

std::string_view VisualTable();
std::string_view Pronunciations();
std::string_view Homophones();
std::string_view G2pRules();
std::string_view RespellRules();

}  // namespace zeroe::builtin

#endif  // ZEROE_RESOURCES_H_
