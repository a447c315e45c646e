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

#include "dsdl/locator.hpp"

#include <vector>

#include "dsdl/diagnostic.hpp"
#include "dsdl/type_expr.hpp"

namespace dsdl {

std::string_view ObjectLocator::kind() const {
  switch (variant.index()) {
    case 0:
      return "relative";
    case 1:
      return "alias";
    default:
      return "object-id";
  }
}

ObjectLocator parse_locator(std::string_view text) {
  if (text.empty()) {
    throw Error(Code::LOC_SYNTAX, {}, "object locator is empty");
  }
  ObjectLocator loc;
  loc.text = std::string(text);
  if (text.substr(0, 2) == "::") {
    std::string_view rest = text.substr(2);
    const std::size_t sep = rest.find("::");
    if (sep == std::string_view::npos || sep == 0 || sep + 2 >= rest.size()) {
      throw Error(Code::LOC_SYNTAX, {},
                  "object id locator '" + loc.text +
                      "' must have the form ::<domain>::<id>");
    }
    loc.variant = ObjectId{std::string(rest.substr(0, sep)),
                           std::string(rest.substr(sep + 2))};
    return loc;
  }
  if (text.front() == '$') {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
      throw Error(Code::LOC_SYNTAX, {},
                  "alias locator '" + loc.text + "' has no '/' remainder");
    }
    std::string_view alias = text.substr(1, slash - 1);
    std::string_view remainder = text.substr(slash + 1);
    if (!is_identifier(alias) || remainder.empty()) {
      throw Error(Code::LOC_SYNTAX, {},
                  "alias locator '" + loc.text +
                      "' must have the form $<alias>/<path>");
    }
    loc.variant = AliasPath{std::string(alias), std::string(remainder)};
    return loc;
  }
  loc.variant = RelativePath{loc.text};
  return loc;
}

std::map<std::string, std::string> merge_aliases(const AliasSources& sources) {
  std::map<std::string, std::string> out = sources.environment;
  for (const auto& [k, v] : sources.config) out[k] = v;
  for (const auto& [k, v] : sources.flags) out[k] = v;
  return out;
}

std::map<std::string, std::string> aliases_from_environment(
    const std::vector<std::string>& environ_entries) {
  static constexpr std::string_view kPrefix = "DSDL_ALIAS_";
  std::map<std::string, std::string> out;
  for (const auto& entry : environ_entries) {
    if (entry.compare(0, kPrefix.size(), kPrefix) != 0) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == kPrefix.size()) continue;
    out[entry.substr(kPrefix.size(), eq - kPrefix.size())] =
        entry.substr(eq + 1);
  }
  return out;
}

namespace {

std::string normalize_relative(std::string_view raw, const std::string& text) {
  std::string path(raw);
  for (char& c : path) {
    if (c == '\\') c = '/';
  }
  std::string out;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t slash = path.find('/', start);
    std::string seg = path.substr(
        start, slash == std::string::npos ? std::string::npos : slash - start);
    if (seg == "..") {
      throw Error(Code::PATH_ESCAPE, {},
                  "locator '" + text + "' contains a '..' segment");
    }
    if (!seg.empty() && seg != ".") {
      if (!out.empty()) out += '/';
      out += seg;
    }
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  return out;
}

std::string join_root(const std::string& root, const std::string& rel) {
  if (root.empty()) return rel;
  if (rel.empty()) return root;
  const char last = root.back();
  if (last == '/' || last == '\\') return root + rel;
  return root + "/" + rel;
}

}  // namespace

std::string resolve_locator(const ObjectLocator& loc,
                            const ResolutionEnvironment& env) {
  if (const auto* rel = std::get_if<RelativePath>(&loc.variant)) {
    return join_root(env.data_root, normalize_relative(rel->path, loc.text));
  }
  if (const auto* alias = std::get_if<AliasPath>(&loc.variant)) {
    auto it = env.aliases.find(alias->alias);
    if (it == env.aliases.end()) {
      throw Error(Code::ALIAS_UNDEFINED, {},
                  "alias '$" + alias->alias + "' is not defined");
    }
    return join_root(it->second, normalize_relative(alias->remainder, loc.text));
  }
  const auto& oid = std::get<ObjectId>(loc.variant);
  if (!env.id_mapper) {
    throw Error(Code::ID_MAPPER_MISSING, {},
                "no id mapper configured for object id '" + loc.text + "'");
  }
  auto address = env.id_mapper(oid.domain, oid.id);
  if (!address) {
    throw Error(Code::ID_NOT_FOUND, {},
                "object id '" + oid.id + "' is unknown in data domain '" +
                    oid.domain + "'");
  }
  return *address;
}

}  // namespace dsdl
