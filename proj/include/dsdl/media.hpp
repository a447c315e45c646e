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

#include <any>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsdl/diagnostic.hpp"
#include "dsdl/locator.hpp"
#include "dsdl/value.hpp"

namespace dsdl {

/// Load contract for an unstructured-object class: the loader receives an
/// already open reader and the optional descriptor, never the address.
using MediaLoader = std::function<std::any(std::istream& reader, const Value& descr)>;

/// What the pre-registered stub loaders return.
struct MediaPayload {
  std::string bytes;
  Value descriptor;
};

MediaLoader stub_loader();

class MediaClassRegistry {
 public:
  /// Pre-registers Image, Video, Audio, Text, PointCloud, LabelMap and
  /// InstanceMap with stub loaders.
  MediaClassRegistry();

  /// Returns a MEDIA_OVERRIDE warning when an existing class is replaced.
  /// Throws Error(REGISTER_CONFLICT) for non-media builtin names or invalid
  /// identifiers, and Error(REGISTRY_FROZEN) after freeze().
  std::optional<Diagnostic> register_class(const std::string& name,
                                           MediaLoader loader);

  bool contains(std::string_view name) const;
  const MediaLoader* loader(std::string_view name) const;

  /// Ends the setup phase; afterwards the registry is read-only.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::vector<std::string> names() const;

 private:
  std::map<std::string, MediaLoader, std::less<>> loaders_;
  bool frozen_ = false;
};

/// The process-wide default registry used when none is supplied.
const MediaClassRegistry& default_media_registry();

using ReaderProvider =
    std::function<std::unique_ptr<std::istream>(const std::string& address)>;

/// Opens addresses as local files.
ReaderProvider filesystem_reader_provider();

/// Resolves the locator, opens a reader through the provider and invokes the
/// registered loader once. Throws Error(UNKNOWN_MEDIA_CLASS), resolution
/// errors, or Error(LOADER_FAILURE) wrapping loader/reader failures.
std::any load_object(const MediaClassRegistry& registry,
                     std::string_view class_name, const ObjectLocator& loc,
                     const Value& descr, const ResolutionEnvironment& env,
                     const ReaderProvider& reader_provider);

}  // namespace dsdl
