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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsdl/diagnostic.hpp"
#include "dsdl/value.hpp"

namespace dsdl {

inline constexpr std::string_view kLocalPath = "$local";

struct RawDataSection {
  Value sample_type;  // null when absent
  std::string sample_path = std::string(kLocalPath);
  std::optional<Value> samples;
  std::optional<Value> global_info_type;
  std::optional<std::string> global_info_path;
  std::optional<Value> global_info;

  bool operator==(const RawDataSection&) const = default;
};

/// A parsed but unresolved description or library file.
struct RawDocument {
  std::string dsdl_version;
  std::vector<std::string> imports;
  Value meta = Value::object();
  /// Definition name (bracket suffix preserved verbatim) → raw body.
  std::vector<std::pair<std::string, Value>> defs;
  std::optional<RawDataSection> data;

  // Not part of structural equality.
  std::string source;
  std::vector<Diagnostic> warnings;

  bool operator==(const RawDocument& o) const {
    return dsdl_version == o.dsdl_version && imports == o.imports &&
           meta == o.meta && defs == o.defs && data == o.data;
  }
};

struct ParseOptions {
  /// Accept versions outside 0.5.x.
  bool allow_any_version = false;
  std::string source_name;
};

/// Throws SyntaxError for malformed text and Error for structural problems
/// (VERSION_MISSING, VERSION_UNSUPPORTED, UNKNOWN_DIRECTIVE, DUPLICATE_DEF,
/// DUPLICATE_KEY, MALFORMED_DATA_SECTION).
RawDocument parse_document(std::string_view text, TextFormat format,
                           const ParseOptions& options = {});

/// Same as parse_document on an already loaded value.
RawDocument document_from_value(const LoadedText& loaded,
                                const ParseOptions& options = {});

RawDocument parse_document_file(const std::string& path,
                                const ParseOptions& options = {});

bool is_supported_version(std::string_view version);

}  // namespace dsdl
