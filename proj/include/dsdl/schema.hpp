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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsdl/diagnostic.hpp"
#include "dsdl/type_expr.hpp"
#include "dsdl/value.hpp"

namespace dsdl {

// ------------------------------------------------------------ class domains

struct ClassSegment {
  std::string name;
  /// Bracketed parent-class annotation, e.g. `nose[person]` → "person".
  std::optional<std::string> parent;
  bool operator==(const ClassSegment&) const = default;
};

struct ClassPath {
  std::vector<ClassSegment> segments;
  /// Text exactly as declared.
  std::string verbatim;

  /// Dot-joined segment names without annotations.
  std::string text() const;
  std::size_t depth() const { return segments.size(); }
  bool operator==(const ClassPath&) const = default;
};

/// Splits on '.' and peels a trailing `[annotation]` off each segment.
ClassPath parse_class_path(std::string_view text);

/// A resolved class reference. `index_path` walks the class hierarchy
/// (1-based at every level); `flat_index` is the 1-based position in the
/// declared class list.
struct ClassRef {
  std::string domain;
  std::vector<std::size_t> index_path;
  std::string path;
  std::size_t flat_index = 0;

  std::string qualified() const { return domain + "::" + path; }
  bool operator==(const ClassRef&) const = default;
};

class ClassDomain {
 public:
  ClassDomain() = default;
  ClassDomain(std::string name, std::vector<ClassPath> classes,
              std::vector<std::pair<std::size_t, std::size_t>> skeleton = {},
              std::vector<std::string> parents = {});

  const std::string& name() const { return name_; }
  const std::vector<ClassPath>& classes() const { return classes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& skeleton() const {
    return skeleton_;
  }
  const std::vector<std::string>& parents() const { return parents_; }
  std::size_t size() const { return classes_.size(); }
  bool hierarchical() const;

  /// Hierarchy index path of the i-th declared class (i is 1-based).
  const std::vector<std::size_t>& index_path_of(std::size_t flat) const {
    return index_paths_.at(flat - 1);
  }
  /// Child segment names under a dotted prefix ("" = top level), in order of
  /// first appearance.
  const std::vector<std::string>& children(const std::string& prefix) const;
  /// 1-based flat index of the class with the given dotted text, or 0.
  std::size_t find(std::string_view path_text) const;

  bool operator==(const ClassDomain& o) const {
    return name_ == o.name_ && classes_ == o.classes_ &&
           skeleton_ == o.skeleton_ && parents_ == o.parents_;
  }

 private:
  std::string name_;
  std::vector<ClassPath> classes_;
  std::vector<std::pair<std::size_t, std::size_t>> skeleton_;
  std::vector<std::string> parents_;
  std::vector<std::vector<std::size_t>> index_paths_;
  std::map<std::string, std::vector<std::string>> children_;
  std::map<std::string, std::size_t, std::less<>> by_text_;
};

/// Selector is a dot-delimited name path ("animal.dog.hound") or a
/// dot-delimited 1-based index path ("3.2.5"). A single integer addresses the
/// declared class list; multi-part index paths walk the hierarchy.
/// Throws Error(CLASS_NOT_FOUND | CLASS_INDEX_RANGE).
ClassRef lookup_class(const ClassDomain& dom, std::string_view selector);
ClassRef lookup_class_index(const ClassDomain& dom, std::int64_t flat_index);

// ------------------------------------------------------------ struct classes

struct StructClass {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, TypeExpr>> fields;
  std::vector<std::string> optional;

  const TypeExpr* field(std::string_view field_name) const;
  bool is_optional(std::string_view field_name) const;
  bool operator==(const StructClass&) const = default;
};

// ------------------------------------------------------------ registry

struct Provenance {
  std::string source;
  /// Position in merge order: imports first (in import order), then the
  /// importing document itself.
  std::size_t order = 0;
  bool operator==(const Provenance&) const = default;
};

using Definition = std::variant<std::shared_ptr<const ClassDomain>,
                                std::shared_ptr<const StructClass>>;

struct RegistryEntry {
  std::string name;
  Definition definition;
  Provenance provenance;
};

bool operator==(const RegistryEntry& a, const RegistryEntry& b);

class DefinitionRegistry {
 public:
  const RegistryEntry* find(std::string_view name) const;
  const ClassDomain* find_domain(std::string_view name) const;
  std::shared_ptr<const ClassDomain> domain_ptr(std::string_view name) const;
  const StructClass* find_struct(std::string_view name) const;

  /// Inserts, or replaces an existing entry in place. Returns the replaced
  /// entry's provenance when a name was shadowed.
  std::optional<Provenance> put(RegistryEntry entry);

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const DefinitionRegistry& o) const {
    return entries_ == o.entries_;
  }

 private:
  std::vector<RegistryEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct BuildResult {
  DefinitionRegistry registry;
  std::vector<Diagnostic> diagnostics;
};

/// Classifies every raw definition by its `$def` discriminator. Malformed
/// definitions are reported and left out; definition-level issues
/// (OPTIONAL_UNKNOWN_FIELD, UNBOUND_PARAM) are reported and the definition
/// is kept.
BuildResult build_definitions(
    const std::vector<std::pair<std::string, Value>>& defs,
    const Provenance& provenance = {});

/// Names of every definition referenced by a type expression (heads and
/// nested type arguments, recursively).
void collect_references(const TypeExpr& t, std::vector<std::string>& out);

}  // namespace dsdl
