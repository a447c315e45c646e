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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dsdl/diagnostic.hpp"
#include "dsdl/document.hpp"
#include "dsdl/resolver.hpp"
#include "dsdl/typed_value.hpp"

namespace dsdl {

struct ValidateOptions {
  /// FIELD_MISSING becomes an error.
  bool strict = false;
  /// Stop a channel (samples or global-info) after this many errors.
  std::optional<std::size_t> max_errors;
  /// Used to check qualified labels against their own domain when the field
  /// has no bound domain.
  const DefinitionRegistry* registry = nullptr;
};

/// Four syntaxes: bare name, bare integer (1-based), `Dom::path`,
/// `Dom[idx.path]`. Throws Error(LABEL_SYNTAX | CLASS_NOT_FOUND |
/// CLASS_INDEX_RANGE | LABEL_DOMAIN_MISMATCH).
ClassRef validate_label(const Value& raw, const ClassDomain* dom,
                        const DefinitionRegistry* registry = nullptr);

/// Never throws; problems are appended to `diags` and the offending node is
/// typed as null.
TypedValue validate_value(const Value& raw, const ConcreteType& t,
                          const std::string& path, std::vector<Diagnostic>& diags,
                          const ValidateOptions& options = {});

/// Reads `samples` from a JSON or YAML file. Throws Error(FILE_NOT_FOUND |
/// MISSING_SAMPLES_KEY | MALFORMED_SAMPLES) or SyntaxError.
Value load_external_samples(const std::filesystem::path& path,
                            const std::filesystem::path& base);

/// Reads `global-info` from a JSON or YAML file. Throws Error(FILE_NOT_FOUND |
/// MISSING_GLOBAL_INFO_KEY) or SyntaxError.
Value load_external_global_info(const std::filesystem::path& path,
                                const std::filesystem::path& base);

struct ValidationReport {
  std::vector<TypedValue> samples;
  std::optional<TypedValue> global_info;
  std::vector<Diagnostic> diagnostics;
  DiagnosticCounts counts;
  std::size_t sample_count = 0;
  bool truncated = false;
};

ValidationReport validate_dataset(const ResolvedSchema& schema,
                                  const RawDataSection& data,
                                  const std::filesystem::path& base,
                                  const ValidateOptions& options = {});

}  // namespace dsdl
