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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dsdl {

/// `abc/001.jpg`, resolved against the data root.
struct RelativePath {
  std::string path;
  bool operator==(const RelativePath&) const = default;
};

/// `$mydir1/abc/001.jpg`
struct AliasPath {
  std::string alias;
  std::string remainder;
  bool operator==(const AliasPath&) const = default;
};

/// `::cuhk.ie::abcd1234xyz`
struct ObjectId {
  std::string domain;
  std::string id;
  bool operator==(const ObjectId&) const = default;
};

struct ObjectLocator {
  std::variant<RelativePath, AliasPath, ObjectId> variant;
  std::string text;

  std::string_view kind() const;
  bool operator==(const ObjectLocator&) const = default;
};

/// Total on non-empty strings. Throws Error(LOC_SYNTAX) for the empty string,
/// an alias without a `/` remainder, or a malformed `::domain::id`.
ObjectLocator parse_locator(std::string_view text);

using IdMapper = std::function<std::optional<std::string>(
    const std::string& domain, const std::string& id)>;

struct ResolutionEnvironment {
  std::string data_root;
  std::map<std::string, std::string> aliases;
  IdMapper id_mapper;
};

/// Alias bindings from the three supported sources. Precedence:
/// flags > config file > environment.
struct AliasSources {
  std::map<std::string, std::string> flags;
  std::map<std::string, std::string> config;
  std::map<std::string, std::string> environment;
};

std::map<std::string, std::string> merge_aliases(const AliasSources& sources);

/// Collects `DSDL_ALIAS_<NAME>=dir` entries from an environment block
/// (`KEY=VALUE` strings).
std::map<std::string, std::string> aliases_from_environment(
    const std::vector<std::string>& environ_entries);

/// Throws Error(ALIAS_UNDEFINED | ID_MAPPER_MISSING | ID_NOT_FOUND |
/// PATH_ESCAPE). Separators are normalized to '/'; any `..` segment is
/// rejected; the data root / alias directory is kept verbatim.
std::string resolve_locator(const ObjectLocator& loc,
                            const ResolutionEnvironment& env);

}  // namespace dsdl
