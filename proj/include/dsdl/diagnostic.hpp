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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsdl {

enum class Severity { error, warning, note };

std::string_view to_string(Severity s);

/// Stable diagnostic codes. The spelling returned by `to_string` is part of
/// the public contract (it appears in text and json reports).
enum class Code {
  // document syntax
  SYNTAX_ERROR,
  VERSION_MISSING,
  VERSION_UNSUPPORTED,
  UNKNOWN_DIRECTIVE,
  UNKNOWN_SECTION,
  DUPLICATE_DEF,
  DUPLICATE_KEY,
  GRAMMAR,
  MISSING_TYPE_KEY,
  // schema model
  UNKNOWN_DEF_KIND,
  MALFORMED_DEF,
  OPTIONAL_UNKNOWN_FIELD,
  UNBOUND_PARAM,
  DUPLICATE_CLASS,
  CLASS_NAME_SYNTAX,
  SKELETON_RANGE,
  SHADOWS_BUILTIN,
  CLASS_NOT_FOUND,
  CLASS_INDEX_RANGE,
  // resolver
  IMPORT_NOT_FOUND,
  IMPORT_CYCLE,
  IMPORT_OVERWRITE,
  CYCLE_DETECTED,
  UNKNOWN_TYPE,
  MISSING_PARAM,
  EXTRA_PARAM,
  ARG_KIND,
  PARAM_ALIAS,
  MALFORMED_DATA_SECTION,
  // validation
  TYPE_MISMATCH,
  ARITY,
  RANGE,
  FIELD_MISSING,
  FIELD_UNKNOWN,
  DATE_FORMAT,
  LOC_SYNTAX,
  LABEL_SYNTAX,
  LABEL_DOMAIN_MISMATCH,
  FILE_NOT_FOUND,
  MISSING_SAMPLES_KEY,
  MISSING_GLOBAL_INFO_KEY,
  MALFORMED_SAMPLES,
  TRUNCATED,
  // locators and media
  ALIAS_UNDEFINED,
  ID_MAPPER_MISSING,
  ID_NOT_FOUND,
  PATH_ESCAPE,
  REGISTER_CONFLICT,
  REGISTRY_FROZEN,
  MEDIA_OVERRIDE,
  UNKNOWN_MEDIA_CLASS,
  LOADER_FAILURE,
};

std::string_view to_string(Code c);
std::optional<Code> code_from_string(std::string_view name);
std::optional<Severity> severity_from_string(std::string_view name);

struct Diagnostic {
  Code code = Code::SYNTAX_ERROR;
  Severity severity = Severity::error;
  /// Slash-separated location, e.g. `samples/3/objects/0/bbox`.
  std::string path;
  std::string message;
  std::string source;

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(Code code, std::string path, std::string message);
Diagnostic make_warning(Code code, std::string path, std::string message);
Diagnostic make_note(Code code, std::string path, std::string message);

/// Thrown by single-shot operations (parsing, lookups, locator resolution).
/// Bulk operations collect diagnostics instead of throwing.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d);
  Error(Code code, std::string path, std::string message);

  const Diagnostic& diagnostic() const noexcept { return diag_; }
  Code code() const noexcept { return diag_.code; }

 private:
  Diagnostic diag_;
};

/// Grammar failure in the type-expression mini-language; `offset` is the
/// zero-based character position where parsing could not proceed.
class GrammarError : public Error {
 public:
  GrammarError(std::size_t offset, std::string message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Text syntax failure in a YAML/JSON host document (1-based line/column).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string message,
              std::string source = {});
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct DiagnosticCounts {
  std::size_t errors = 0;
  std::size_t warnings = 0;
  std::size_t notes = 0;
  std::map<std::string, std::size_t> by_code;

  bool operator==(const DiagnosticCounts&) const = default;
};

DiagnosticCounts count(const std::vector<Diagnostic>& diags);
bool has_errors(const std::vector<Diagnostic>& diags);

std::string join_path(std::string_view base, std::string_view leaf);
std::string join_path(std::string_view base, std::size_t index);

}  // namespace dsdl
