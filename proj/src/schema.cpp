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

#include "dsdl/schema.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <set>

#include "dsdl/builtins.hpp"

namespace dsdl {

// ------------------------------------------------------------ ClassPath

std::string ClassPath::text() const {
  std::string out;
  for (const auto& seg : segments) {
    if (!out.empty()) out += '.';
    out += seg.name;
  }
  return out;
}

ClassPath parse_class_path(std::string_view text) {
  ClassPath path;
  path.verbatim = std::string(text);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    // Dots inside a bracket annotation do not split.
    std::size_t bracket = text.find('[', start);
    if (bracket != std::string_view::npos && dot != std::string_view::npos &&
        bracket < dot) {
      std::size_t close = text.find(']', bracket);
      if (close != std::string_view::npos) dot = text.find('.', close);
    }
    std::string_view raw = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    ClassSegment seg;
    if (!raw.empty() && raw.back() == ']') {
      std::size_t open = raw.find('[');
      if (open != std::string_view::npos) {
        seg.parent = std::string(raw.substr(open + 1, raw.size() - open - 2));
        raw = raw.substr(0, open);
      }
    }
    seg.name = std::string(raw);
    path.segments.push_back(std::move(seg));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path;
}

// ------------------------------------------------------------ ClassDomain

ClassDomain::ClassDomain(std::string name, std::vector<ClassPath> classes,
                         std::vector<std::pair<std::size_t, std::size_t>> skeleton,
                         std::vector<std::string> parents)
    : name_(std::move(name)),
      classes_(std::move(classes)),
      skeleton_(std::move(skeleton)),
      parents_(std::move(parents)) {
  children_[""];
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const ClassPath& cp = classes_[i];
    std::vector<std::size_t> idx;
    std::string prefix;
    for (const auto& seg : cp.segments) {
      auto& kids = children_[prefix];
      auto it = std::find(kids.begin(), kids.end(), seg.name);
      if (it == kids.end()) {
        kids.push_back(seg.name);
        it = kids.end() - 1;
      }
      idx.push_back(static_cast<std::size_t>(it - kids.begin()) + 1);
      prefix = prefix.empty() ? seg.name : prefix + "." + seg.name;
      children_[prefix];
    }
    index_paths_.push_back(std::move(idx));
    by_text_.emplace(cp.text(), i + 1);
    by_text_.emplace(cp.verbatim, i + 1);
  }
}

bool ClassDomain::hierarchical() const {
  return std::any_of(classes_.begin(), classes_.end(),
                     [](const ClassPath& c) { return c.depth() > 1; });
}

const std::vector<std::string>& ClassDomain::children(
    const std::string& prefix) const {
  static const std::vector<std::string> empty;
  auto it = children_.find(prefix);
  return it == children_.end() ? empty : it->second;
}

std::size_t ClassDomain::find(std::string_view path_text) const {
  auto it = by_text_.find(path_text);
  return it == by_text_.end() ? 0 : it->second;
}

namespace {

bool is_index_selector(std::string_view s) {
  if (s.empty()) return false;
  bool digit_seen = false;
  for (char c : s) {
    if (c == '.') {
      if (!digit_seen) return false;
      digit_seen = false;
    } else if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else {
      return false;
    }
  }
  return digit_seen;
}

ClassRef make_ref(const ClassDomain& dom, std::size_t flat) {
  ClassRef ref;
  ref.domain = dom.name();
  ref.flat_index = flat;
  ref.index_path = dom.index_path_of(flat);
  ref.path = dom.classes()[flat - 1].text();
  return ref;
}

}  // namespace

ClassRef lookup_class_index(const ClassDomain& dom, std::int64_t flat_index) {
  if (flat_index < 1 || static_cast<std::uint64_t>(flat_index) > dom.size()) {
    throw Error(Code::CLASS_INDEX_RANGE, {},
                "class index " + std::to_string(flat_index) +
                    " is out of range for domain " + dom.name() + " (1.." +
                    std::to_string(dom.size()) + ")");
  }
  return make_ref(dom, static_cast<std::size_t>(flat_index));
}

ClassRef lookup_class(const ClassDomain& dom, std::string_view selector) {
  if (!is_index_selector(selector)) {
    std::size_t flat = dom.find(selector);
    if (flat == 0) {
      throw Error(Code::CLASS_NOT_FOUND, {},
                  "class '" + std::string(selector) + "' is not in domain " +
                      dom.name());
    }
    return make_ref(dom, flat);
  }

  std::vector<std::uint64_t> parts;
  std::size_t start = 0;
  while (start <= selector.size()) {
    std::size_t dot = selector.find('.', start);
    std::string_view part = selector.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    std::uint64_t v = 0;
    auto r = std::from_chars(part.data(), part.data() + part.size(), v);
    if (r.ec != std::errc()) v = std::numeric_limits<std::uint64_t>::max();
    parts.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }

  if (parts.size() == 1) {
    const auto v = parts.front();
    if (v < 1 || v > dom.size()) {
      throw Error(Code::CLASS_INDEX_RANGE, {},
                  "class index " + std::string(selector) +
                      " is out of range for domain " + dom.name() + " (1.." +
                      std::to_string(dom.size()) + ")");
    }
    return make_ref(dom, static_cast<std::size_t>(v));
  }

  std::string prefix;
  for (std::size_t level = 0; level < parts.size(); ++level) {
    const auto& kids = dom.children(prefix);
    const auto v = parts[level];
    if (v < 1 || v > kids.size()) {
      throw Error(Code::CLASS_INDEX_RANGE, {},
                  "index " + std::to_string(v) + " at level " +
                      std::to_string(level + 1) + " is out of range for domain " +
                      dom.name() + " (1.." + std::to_string(kids.size()) + ")");
    }
    const std::string& seg = kids[static_cast<std::size_t>(v) - 1];
    prefix = prefix.empty() ? seg : prefix + "." + seg;
  }
  std::size_t flat = dom.find(prefix);
  if (flat == 0) {
    throw Error(Code::CLASS_NOT_FOUND, {},
                "index path " + std::string(selector) + " addresses '" + prefix +
                    "', which is not a declared class of " + dom.name());
  }
  return make_ref(dom, flat);
}

// ------------------------------------------------------------ StructClass

const TypeExpr* StructClass::field(std::string_view field_name) const {
  for (const auto& [n, t] : fields) {
    if (n == field_name) return &t;
  }
  return nullptr;
}

bool StructClass::is_optional(std::string_view field_name) const {
  return std::find(optional.begin(), optional.end(), field_name) !=
         optional.end();
}

// ------------------------------------------------------------ registry

bool operator==(const RegistryEntry& a, const RegistryEntry& b) {
  if (a.name != b.name || !(a.provenance == b.provenance)) return false;
  if (a.definition.index() != b.definition.index()) return false;
  if (const auto* d = std::get_if<std::shared_ptr<const ClassDomain>>(
          &a.definition)) {
    return **d == *std::get<std::shared_ptr<const ClassDomain>>(b.definition);
  }
  return *std::get<std::shared_ptr<const StructClass>>(a.definition) ==
         *std::get<std::shared_ptr<const StructClass>>(b.definition);
}

const RegistryEntry* DefinitionRegistry::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::shared_ptr<const ClassDomain> DefinitionRegistry::domain_ptr(
    std::string_view name) const {
  const auto* e = find(name);
  if (e == nullptr) return nullptr;
  if (const auto* d =
          std::get_if<std::shared_ptr<const ClassDomain>>(&e->definition)) {
    return *d;
  }
  return nullptr;
}

const ClassDomain* DefinitionRegistry::find_domain(std::string_view name) const {
  return domain_ptr(name).get();
}

const StructClass* DefinitionRegistry::find_struct(std::string_view name) const {
  const auto* e = find(name);
  if (e == nullptr) return nullptr;
  if (const auto* s =
          std::get_if<std::shared_ptr<const StructClass>>(&e->definition)) {
    return s->get();
  }
  return nullptr;
}

std::optional<Provenance> DefinitionRegistry::put(RegistryEntry entry) {
  auto it = index_.find(entry.name);
  if (it != index_.end()) {
    Provenance old = entries_[it->second].provenance;
    entries_[it->second] = std::move(entry);
    return old;
  }
  index_.emplace(entry.name, entries_.size());
  entries_.push_back(std::move(entry));
  return std::nullopt;
}

// ------------------------------------------------------------ building

void collect_references(const TypeExpr& t, std::vector<std::string>& out) {
  out.push_back(t.head);
  for (const auto& arg : t.args) {
    if (const auto* nested = std::get_if<Indirect<TypeExpr>>(&arg.value)) {
      collect_references(**nested, out);
    }
  }
}

namespace {

void collect_param_refs(const TypeExpr& t, std::vector<std::string>& out) {
  for (const auto& arg : t.args) {
    if (const auto* p = std::get_if<ParamRef>(&arg.value)) {
      out.push_back(p->name);
    } else if (const auto* nested = std::get_if<Indirect<TypeExpr>>(&arg.value)) {
      collect_param_refs(**nested, out);
    }
  }
}

struct DefName {
  std::string name;
  std::vector<std::string> parents;
};

std::optional<DefName> split_def_name(const std::string& key) {
  DefName out;
  std::string_view k = key;
  std::size_t open = k.find('[');
  if (open != std::string_view::npos) {
    if (k.back() != ']') return std::nullopt;
    std::string_view inner = k.substr(open + 1, k.size() - open - 2);
    k = k.substr(0, open);
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      std::string_view part = inner.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start);
      while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
      while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
      if (!is_identifier(part)) return std::nullopt;
      out.parents.emplace_back(part);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (!is_identifier(k)) return std::nullopt;
  out.name = std::string(k);
  return out;
}

std::optional<std::vector<std::string>> string_list(const Value& v) {
  if (!v.is_array()) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) return std::nullopt;
    out.push_back(item.get<std::string>());
  }
  return out;
}

class DefinitionBuilder {
 public:
  DefinitionBuilder(const Provenance& prov, std::vector<Diagnostic>& diags)
      : prov_(prov), diags_(diags) {}

  std::optional<RegistryEntry> build(const std::string& key, const Value& body,
                                     const std::string& path) {
    auto name = split_def_name(key);
    if (!name) {
      error(Code::MALFORMED_DEF, path,
            "definition name '" + key + "' is not a valid identifier");
      return std::nullopt;
    }
    if (!body.is_object()) {
      error(Code::MALFORMED_DEF, path,
            "definition '" + name->name + "' must be a mapping");
      return std::nullopt;
    }
    auto kind = body.find("$def");
    if (kind == body.end() || !kind->is_string()) {
      error(Code::MALFORMED_DEF, join_path(path, "$def"),
            "definition '" + name->name + "' has no string '$def'");
      return std::nullopt;
    }
    if (find_builtin(name->name) != nullptr) {
      diags_.push_back(with_source(make_warning(
          Code::SHADOWS_BUILTIN, path,
          "definition '" + name->name + "' shadows the builtin type")));
    }
    const std::string& k = kind->get_ref<const std::string&>();
    if (k == "class_domain") return build_domain(*name, body, path);
    if (k == "struct") return build_struct(*name, body, path);
    error(Code::UNKNOWN_DEF_KIND, join_path(path, "$def"),
          "unknown definition kind '" + k + "'");
    return std::nullopt;
  }

 private:
  Diagnostic with_source(Diagnostic d) const {
    d.source = prov_.source;
    return d;
  }
  void error(Code c, const std::string& path, const std::string& msg) {
    diags_.push_back(with_source(make_error(c, path, msg)));
  }
  void warn(Code c, const std::string& path, const std::string& msg) {
    diags_.push_back(with_source(make_warning(c, path, msg)));
  }

  void warn_unknown_keys(const Value& body, const std::string& path,
                         std::initializer_list<std::string_view> known) {
    for (auto it = body.begin(); it != body.end(); ++it) {
      if (std::find(known.begin(), known.end(), it.key()) != known.end()) {
        continue;
      }
      warn(it.key().rfind('$', 0) == 0 ? Code::UNKNOWN_DIRECTIVE
                                       : Code::UNKNOWN_SECTION,
           join_path(path, it.key()),
           "unknown definition key '" + it.key() + "' ignored");
    }
  }

  std::optional<RegistryEntry> build_domain(const DefName& name,
                                            const Value& body,
                                            const std::string& path) {
    warn_unknown_keys(body, path, {"$def", "classes", "skeleton"});
    auto classes = body.find("classes");
    if (classes == body.end() || !classes->is_array()) {
      error(Code::MALFORMED_DEF, join_path(path, "classes"),
            "class domain '" + name.name + "' needs a 'classes' list");
      return std::nullopt;
    }
    std::vector<ClassPath> paths;
    std::set<std::string> seen;
    bool ok = true;
    for (std::size_t i = 0; i < classes->size(); ++i) {
      const Value& c = (*classes)[i];
      const std::string cpath = join_path(join_path(path, "classes"), i);
      std::string text;
      if (c.is_string()) {
        text = c.get<std::string>();
      } else if (c.is_number()) {
        text = c.dump();
      }
      if (text.empty()) {
        error(Code::MALFORMED_DEF, cpath, "class entries must be non-empty names");
        ok = false;
        continue;
      }
      ClassPath cp = parse_class_path(text);
      bool valid = true;
      for (const auto& seg : cp.segments) {
        if (!is_identifier(seg.name)) valid = false;
      }
      if (!valid) {
        warn(Code::CLASS_NAME_SYNTAX, cpath,
             "class name '" + text + "' is not a dot-separated identifier path");
      }
      if (!seen.insert(cp.text()).second) {
        error(Code::DUPLICATE_CLASS, cpath,
              "class '" + cp.text() + "' is declared twice in " + name.name);
        ok = false;
        continue;
      }
      paths.push_back(std::move(cp));
    }

    std::vector<std::pair<std::size_t, std::size_t>> skeleton;
    if (auto sk = body.find("skeleton"); sk != body.end()) {
      if (!sk->is_array()) {
        error(Code::MALFORMED_DEF, join_path(path, "skeleton"),
              "skeleton must be a list of index pairs");
        ok = false;
      } else {
        for (std::size_t i = 0; i < sk->size(); ++i) {
          const Value& e = (*sk)[i];
          const std::string epath = join_path(join_path(path, "skeleton"), i);
          if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
              !e[1].is_number_integer()) {
            error(Code::MALFORMED_DEF, epath,
                  "skeleton entries must be [a, b] integer pairs");
            ok = false;
            continue;
          }
          const auto a = e[0].get<std::int64_t>();
          const auto b = e[1].get<std::int64_t>();
          const auto n = static_cast<std::int64_t>(paths.size());
          if (a < 1 || b < 1 || a > n || b > n || a == b) {
            error(Code::SKELETON_RANGE, epath,
                  "skeleton edge [" + std::to_string(a) + ", " +
                      std::to_string(b) + "] is invalid for " +
                      std::to_string(n) + " classes");
            ok = false;
            continue;
          }
          skeleton.emplace_back(static_cast<std::size_t>(a),
                                static_cast<std::size_t>(b));
        }
      }
    }
    if (!ok) return std::nullopt;
    return RegistryEntry{
        name.name,
        std::make_shared<const ClassDomain>(name.name, std::move(paths),
                                            std::move(skeleton), name.parents),
        prov_};
  }

  std::optional<RegistryEntry> build_struct(const DefName& name,
                                            const Value& body,
                                            const std::string& path) {
    warn_unknown_keys(body, path, {"$def", "$params", "$fields", "$optional"});
    auto s = std::make_shared<StructClass>();
    s->name = name.name;
    bool ok = true;

    if (auto params = body.find("$params"); params != body.end()) {
      auto list = string_list(*params);
      if (!list) {
        error(Code::MALFORMED_DEF, join_path(path, "$params"),
              "$params must be a list of parameter names");
        return std::nullopt;
      }
      std::set<std::string> seen;
      for (const auto& p : *list) {
        if (!is_identifier(p) || !seen.insert(p).second) {
          error(Code::MALFORMED_DEF, join_path(path, "$params"),
                "parameter '" + p + "' is invalid or repeated");
          return std::nullopt;
        }
      }
      s->params = std::move(*list);
    }

    auto fields = body.find("$fields");
    if (fields == body.end() || !fields->is_object()) {
      error(Code::MALFORMED_DEF, join_path(path, "$fields"),
            "struct '" + name.name + "' needs a '$fields' mapping");
      return std::nullopt;
    }
    for (auto f = fields->begin(); f != fields->end(); ++f) {
      const std::string fpath = join_path(join_path(path, "$fields"), f.key());
      try {
        TypeExpr t = parse_sample_type_spec(f.value());
        std::vector<std::string> refs;
        collect_param_refs(t, refs);
        for (const auto& r : refs) {
          if (std::find(s->params.begin(), s->params.end(), r) ==
              s->params.end()) {
            error(Code::UNBOUND_PARAM, fpath,
                  "'$" + r + "' is not a parameter of " + name.name);
          }
        }
        s->fields.emplace_back(f.key(), std::move(t));
      } catch (const Error& e) {
        Diagnostic d = e.diagnostic();
        d.path = fpath;
        diags_.push_back(with_source(std::move(d)));
        ok = false;
      }
    }

    if (auto opt = body.find("$optional"); opt != body.end()) {
      auto list = string_list(*opt);
      if (!list) {
        error(Code::MALFORMED_DEF, join_path(path, "$optional"),
              "$optional must be a list of field names");
      } else {
        for (const auto& o : *list) {
          if (s->field(o) == nullptr) {
            error(Code::OPTIONAL_UNKNOWN_FIELD, join_path(path, "$optional"),
                  "optional field '" + o + "' is not declared in $fields");
            continue;
          }
          if (!s->is_optional(o)) s->optional.push_back(o);
        }
      }
    }
    if (!ok) return std::nullopt;
    return RegistryEntry{name.name, std::shared_ptr<const StructClass>(s), prov_};
  }

  const Provenance& prov_;
  std::vector<Diagnostic>& diags_;
};

}  // namespace

BuildResult build_definitions(
    const std::vector<std::pair<std::string, Value>>& defs,
    const Provenance& provenance) {
  BuildResult out;
  DefinitionBuilder builder(provenance, out.diagnostics);
  for (const auto& [key, body] : defs) {
    if (auto entry = builder.build(key, body, key)) {
      out.registry.put(std::move(*entry));
    }
  }
  return out;
}

}  // namespace dsdl
