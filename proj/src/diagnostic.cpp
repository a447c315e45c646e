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

#include "dsdl/diagnostic.hpp"

#include <array>
#include <utility>

namespace dsdl {

namespace {

struct CodeName {
  Code code;
  std::string_view name;
};

#define DSDL_CODE(c) CodeName{Code::c, #c}
constexpr std::array kCodeNames = {
    DSDL_CODE(SYNTAX_ERROR),         DSDL_CODE(VERSION_MISSING),
    DSDL_CODE(VERSION_UNSUPPORTED),  DSDL_CODE(UNKNOWN_DIRECTIVE),
    DSDL_CODE(UNKNOWN_SECTION),      DSDL_CODE(DUPLICATE_DEF),
    DSDL_CODE(DUPLICATE_KEY),        DSDL_CODE(GRAMMAR),
    DSDL_CODE(MISSING_TYPE_KEY),     DSDL_CODE(UNKNOWN_DEF_KIND),
    DSDL_CODE(MALFORMED_DEF),        DSDL_CODE(OPTIONAL_UNKNOWN_FIELD),
    DSDL_CODE(UNBOUND_PARAM),        DSDL_CODE(DUPLICATE_CLASS),
    DSDL_CODE(CLASS_NAME_SYNTAX),    DSDL_CODE(SKELETON_RANGE),
    DSDL_CODE(SHADOWS_BUILTIN),      DSDL_CODE(CLASS_NOT_FOUND),
    DSDL_CODE(CLASS_INDEX_RANGE),    DSDL_CODE(IMPORT_NOT_FOUND),
    DSDL_CODE(IMPORT_CYCLE),         DSDL_CODE(IMPORT_OVERWRITE),
    DSDL_CODE(CYCLE_DETECTED),       DSDL_CODE(UNKNOWN_TYPE),
    DSDL_CODE(MISSING_PARAM),        DSDL_CODE(EXTRA_PARAM),
    DSDL_CODE(ARG_KIND),             DSDL_CODE(PARAM_ALIAS),
    DSDL_CODE(MALFORMED_DATA_SECTION), DSDL_CODE(TYPE_MISMATCH),
    DSDL_CODE(ARITY),                DSDL_CODE(RANGE),
    DSDL_CODE(FIELD_MISSING),        DSDL_CODE(FIELD_UNKNOWN),
    DSDL_CODE(DATE_FORMAT),          DSDL_CODE(LOC_SYNTAX),
    DSDL_CODE(LABEL_SYNTAX),         DSDL_CODE(LABEL_DOMAIN_MISMATCH),
    DSDL_CODE(FILE_NOT_FOUND),       DSDL_CODE(MISSING_SAMPLES_KEY),
    DSDL_CODE(MISSING_GLOBAL_INFO_KEY), DSDL_CODE(MALFORMED_SAMPLES),
    DSDL_CODE(TRUNCATED),            DSDL_CODE(ALIAS_UNDEFINED),
    DSDL_CODE(ID_MAPPER_MISSING),    DSDL_CODE(ID_NOT_FOUND),
    DSDL_CODE(PATH_ESCAPE),          DSDL_CODE(REGISTER_CONFLICT),
    DSDL_CODE(REGISTRY_FROZEN),      DSDL_CODE(MEDIA_OVERRIDE),
    DSDL_CODE(UNKNOWN_MEDIA_CLASS),  DSDL_CODE(LOADER_FAILURE),
};
#undef DSDL_CODE

}  // namespace

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::note:
      return "note";
  }
  return "error";
}

std::string_view to_string(Code c) {
  for (const auto& entry : kCodeNames) {
    if (entry.code == c) return entry.name;
  }
  return "UNKNOWN";
}

std::optional<Code> code_from_string(std::string_view name) {
  for (const auto& entry : kCodeNames) {
    if (entry.name == name) return entry.code;
  }
  return std::nullopt;
}

std::optional<Severity> severity_from_string(std::string_view name) {
  if (name == "error") return Severity::error;
  if (name == "warning") return Severity::warning;
  if (name == "note") return Severity::note;
  return std::nullopt;
}

Diagnostic make_error(Code code, std::string path, std::string message) {
  return Diagnostic{code, Severity::error, std::move(path), std::move(message), {}};
}

Diagnostic make_warning(Code code, std::string path, std::string message) {
  return Diagnostic{code, Severity::warning, std::move(path), std::move(message), {}};
}

Diagnostic make_note(Code code, std::string path, std::string message) {
  return Diagnostic{code, Severity::note, std::move(path), std::move(message), {}};
}

Error::Error(Diagnostic d)
    : std::runtime_error(std::string(to_string(d.code)) + ": " + d.message),
      diag_(std::move(d)) {}

Error::Error(Code code, std::string path, std::string message)
    : Error(make_error(code, std::move(path), std::move(message))) {}

GrammarError::GrammarError(std::size_t offset, std::string message)
    : Error(Code::GRAMMAR, {},
            "offset " + std::to_string(offset) + ": " + std::move(message)),
      offset_(offset) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string message, std::string source)
    : Error([&] {
        auto d = make_error(Code::SYNTAX_ERROR, {},
                            "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + message);
        d.source = std::move(source);
        return d;
      }()),
      line_(line),
      column_(column) {}

DiagnosticCounts count(const std::vector<Diagnostic>& diags) {
  DiagnosticCounts c;
  for (const auto& d : diags) {
    switch (d.severity) {
      case Severity::error:
        ++c.errors;
        break;
      case Severity::warning:
        ++c.warnings;
        break;
      case Severity::note:
        ++c.notes;
        break;
    }
    ++c.by_code[std::string(to_string(d.code))];
  }
  return c;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

std::string join_path(std::string_view base, std::string_view leaf) {
  if (base.empty()) return std::string(leaf);
  std::string out(base);
  out += '/';
  out += leaf;
  return out;
}

std::string join_path(std::string_view base, std::size_t index) {
  return join_path(base, std::to_string(index));
}

}  // namespace dsdl
