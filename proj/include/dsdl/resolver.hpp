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

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dsdl/builtins.hpp"
#include "dsdl/diagnostic.hpp"
#include "dsdl/document.hpp"
#include "dsdl/indirect.hpp"
#include "dsdl/media.hpp"
#include "dsdl/schema.hpp"
#include "dsdl/type_expr.hpp"

namespace dsdl {

// ------------------------------------------------------------ concrete types

struct ConcreteType;

struct DomainArg {
  std::shared_ptr<const ClassDomain> domain;

  friend bool operator==(const DomainArg& a, const DomainArg& b) {
    if (!a.domain || !b.domain) return a.domain == b.domain;
    return *a.domain == *b.domain;
  }
};

/// A parameter value after binding: a class domain, a concrete type, a
/// string (also used for numeric text) or a boolean.
using BoundValue =
    std::variant<DomainArg, Indirect<ConcreteType>, std::string, bool>;

struct BoundArg {
  std::string name;
  BoundValue value;
  bool defaulted = false;
  bool operator==(const BoundArg&) const = default;
};

struct ConcreteField {
  std::string name;
  Indirect<ConcreteType> type;
  bool optional = false;
  bool operator==(const ConcreteField&) const = default;
};

/// A fully parameter-bound type; contains no `$param` references.
struct ConcreteType {
  std::string head;
  ValueShape shape = ValueShape::string;
  std::vector<BoundArg> args;
  std::vector<ConcreteField> fields;  // record shapes only

  const BoundArg* arg(std::string_view name) const;
  /// The domain bound to `dom` (Label, LabelMap, Keypoint).
  const ClassDomain* domain() const;
  /// The element type of a List.
  const ConcreteType* element() const;
  std::string string_arg(std::string_view name) const;
  bool bool_arg(std::string_view name) const;
  const ConcreteField* field(std::string_view name) const;

  bool operator==(const ConcreteType&) const = default;
};

/// Text form with defaulted arguments omitted, e.g.
/// `List[etype=LocalObjectEntry[cdom=VOCClassDom]]`.
std::string render_concrete(const ConcreteType& t);

using Bindings = std::map<std::string, BoundValue>;

struct InstantiateOptions {
  const MediaClassRegistry* media = nullptr;  // default registry when null
};

/// Binds positional arguments to declared parameter order (builtin signature
/// order, or `$params` order for structs), applies defaults, substitutes
/// `$param` references from `bindings`. Throws Error(UNKNOWN_TYPE |
/// MISSING_PARAM | EXTRA_PARAM | ARG_KIND | UNBOUND_PARAM | DATE_FORMAT |
/// CYCLE_DETECTED). Alias canonicalizations are appended to `notes`.
ConcreteType instantiate_type(const TypeExpr& expr, const Bindings& bindings,
                              const DefinitionRegistry& reg,
                              const InstantiateOptions& options = {},
                              std::vector<Diagnostic>* notes = nullptr);

// ------------------------------------------------------------ libraries

struct LibraryEnvironment {
  std::vector<std::filesystem::path> search_paths;

  /// Search order: CLI paths, then DSDL_LIBRARY_PATH entries (host path-list
  /// separator), then the default library directory.
  static LibraryEnvironment from(const std::vector<std::string>& cli_paths,
                                 const std::string& env_library_path,
                                 const std::string& default_dir);
};

struct ImportResult {
  DefinitionRegistry registry;
  std::vector<Diagnostic> diagnostics;
};

/// Merges imported libraries in import order (recursively), then the
/// document's own definitions. Name collisions replace the earlier entry
/// and emit one IMPORT_OVERWRITE warning each.
ImportResult resolve_imports(const RawDocument& doc,
                             const LibraryEnvironment& env,
                             const ParseOptions& parse_options = {});

/// Locates `<name>.yaml` / `<name>.json` relative to `base_dir`, then in the
/// search paths. Returns the candidates tried when nothing matches.
std::optional<std::filesystem::path> find_library(
    const std::string& name, const std::filesystem::path& base_dir,
    const LibraryEnvironment& env,
    std::vector<std::filesystem::path>* tried = nullptr);

// ------------------------------------------------------------ acyclicity

/// Edges: struct → every definition named in its field type expressions.
std::vector<std::string> definition_edges(const DefinitionRegistry& reg,
                                          const std::string& name);

/// First cycle in registry order as a closed path (e.g. {A, B, A}).
std::optional<std::vector<std::string>> find_cycle(const DefinitionRegistry& reg);

/// CYCLE_DETECTED diagnostic carrying the full cycle path, if any.
std::optional<Diagnostic> check_acyclic(const DefinitionRegistry& reg);

// ------------------------------------------------------------ schema

struct ResolvedSchema {
  std::optional<ConcreteType> sample_type;
  std::optional<ConcreteType> global_info_type;
  DefinitionRegistry registry;
  Value meta = Value::object();
};

struct ResolveOptions {
  ParseOptions parse;
  InstantiateOptions instantiate;
};

struct ResolveResult {
  std::optional<ResolvedSchema> schema;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return schema.has_value(); }
};

/// imports → definitions → acyclicity → sample/global-info types. Stops at
/// the first stage that reports an error.
ResolveResult resolve_schema(const RawDocument& doc,
                             const LibraryEnvironment& env,
                             const ResolveOptions& options = {});

}  // namespace dsdl
