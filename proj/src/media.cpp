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

#include "dsdl/media.hpp"

#include <fstream>
#include <sstream>

#include "dsdl/builtins.hpp"
#include "dsdl/type_expr.hpp"

namespace dsdl {

MediaLoader stub_loader() {
  return [](std::istream& reader, const Value& descr) -> std::any {
    std::ostringstream ss;
    ss << reader.rdbuf();
    return MediaPayload{ss.str(), descr};
  };
}

MediaClassRegistry::MediaClassRegistry() {
  for (const auto& sig : builtin_inventory()) {
    if (is_media_builtin(sig.name)) loaders_.emplace(sig.name, stub_loader());
  }
}

std::optional<Diagnostic> MediaClassRegistry::register_class(
    const std::string& name, MediaLoader loader) {
  if (frozen_) {
    throw Error(Code::REGISTRY_FROZEN, {},
                "media registry is frozen; cannot register '" + name + "'");
  }
  if (!is_identifier(name)) {
    throw Error(Code::REGISTER_CONFLICT, {},
                "'" + name + "' is not a valid class name");
  }
  if (find_builtin(name) != nullptr && !is_media_builtin(name)) {
    throw Error(Code::REGISTER_CONFLICT, {},
                "'" + name + "' is a builtin non-media type");
  }
  if (!loader) {
    throw Error(Code::REGISTER_CONFLICT, {},
                "loader for '" + name + "' is empty");
  }
  auto it = loaders_.find(name);
  if (it != loaders_.end()) {
    it->second = std::move(loader);
    return make_warning(Code::MEDIA_OVERRIDE, {},
                        "media class '" + name + "' replaced");
  }
  loaders_.emplace(name, std::move(loader));
  return std::nullopt;
}

bool MediaClassRegistry::contains(std::string_view name) const {
  return loaders_.find(name) != loaders_.end();
}

const MediaLoader* MediaClassRegistry::loader(std::string_view name) const {
  auto it = loaders_.find(name);
  return it == loaders_.end() ? nullptr : &it->second;
}

std::vector<std::string> MediaClassRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : loaders_) out.push_back(n);
  return out;
}

const MediaClassRegistry& default_media_registry() {
  static const MediaClassRegistry registry = [] {
    MediaClassRegistry r;
    r.freeze();
    return r;
  }();
  return registry;
}

ReaderProvider filesystem_reader_provider() {
  return [](const std::string& address) -> std::unique_ptr<std::istream> {
    auto in = std::make_unique<std::ifstream>(address, std::ios::binary);
    if (!*in) return nullptr;
    return in;
  };
}

std::any load_object(const MediaClassRegistry& registry,
                     std::string_view class_name, const ObjectLocator& loc,
                     const Value& descr, const ResolutionEnvironment& env,
                     const ReaderProvider& reader_provider) {
  const MediaLoader* loader = registry.loader(class_name);
  if (loader == nullptr) {
    throw Error(Code::UNKNOWN_MEDIA_CLASS, {},
                "'" + std::string(class_name) + "' is not a registered media class");
  }
  const std::string address = resolve_locator(loc, env);
  std::unique_ptr<std::istream> reader;
  try {
    reader = reader_provider(address);
  } catch (const std::exception& e) {
    throw Error(Code::LOADER_FAILURE, address,
                "cannot open " + address + ": " + e.what());
  }
  if (!reader) {
    throw Error(Code::LOADER_FAILURE, address, "cannot open " + address);
  }
  try {
    return (*loader)(*reader, descr);
  } catch (const std::exception& e) {
    throw Error(Code::LOADER_FAILURE, address,
                std::string(class_name) + " loader failed on " + address + ": " +
                    e.what());
  } catch (...) {
    throw Error(Code::LOADER_FAILURE, address,
                std::string(class_name) + " loader failed on " + address);
  }
}

}  // namespace dsdl
