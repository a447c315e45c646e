// Copyright 2026 The DSDL Tools Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dsdl {

/// Untyped host-language value. Key order of mappings is preserved so that
/// reports follow document order.
using Value = nlohmann::ordered_json;

enum class TextFormat { yaml, json, automatic };

/// A mapping key that occurred more than once, addressed by its parent path.
struct DuplicateKey {
  std::string parent_path;
  std::string key;
};

struct LoadedText {
  Value value;
  std::vector<DuplicateKey> duplicates;
  TextFormat format = TextFormat::json;
};

/// Parses YAML 1.2 or JSON text into a Value. Plain YAML scalars are typed
/// with the core schema (null, bool, int, float, string); quoted scalars are
/// always strings. Throws SyntaxError with 1-based line/column.
LoadedText load_text(std::string_view text, TextFormat format,
                     std::string_view source_name = {});

/// Reads a file and forwards to load_text; the format is picked from the
/// extension (`.json` → json, `.yaml`/`.yml` → yaml, otherwise automatic).
LoadedText load_file(const std::string& path);

}  // namespace dsdl
