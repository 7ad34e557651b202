// Copyright 2026 The lsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSI_IO_H_
#define LSI_IO_H_

#include <string>

#include "json.hpp"
#include "lsi/engine.h"

namespace lsi {

// All documents are JSON with a top-level "format_version": 1 field;
// loaders throw Error(kFormat) on version or shape problems.
inline constexpr int kFormatVersion = 1;

Script load_script(const std::string& path);
SocialStructure load_social(const std::string& path);
Lexicon load_lexicon(const std::string& path);
DispositionPalette load_palette(const std::string& path);
ImpositionTable load_imposition(const std::string& path);

Script parse_script(const nlohmann::json& doc);
SocialStructure parse_social(const nlohmann::json& doc);
Lexicon parse_lexicon(const nlohmann::json& doc);
DispositionPalette parse_palette(const nlohmann::json& doc);
ImpositionTable parse_imposition(const nlohmann::json& doc);

nlohmann::json prosody_to_json(const ProsodyRecord& record);
nlohmann::json trace_to_json(const ActTrace& trace);

}  // namespace lsi

#endif  // LSI_IO_H_
