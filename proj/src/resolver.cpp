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

#include "dsdl/resolver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dsdl/datetime.hpp"

namespace dsdl {

namespace fs = std::filesystem;

// ------------------------------------------------------------ ConcreteType

const BoundArg* ConcreteType::arg(std::string_view name) const {
  for (const auto& a : args) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const ClassDomain* ConcreteType::domain() const {
  const BoundArg* a = arg("dom");
  if (a == nullptr) return nullptr;
  const auto* d = std::get_if<DomainArg>(&a->value);
  return d != nullptr ? d->domain.get() : nullptr;
}

const ConcreteType* ConcreteType::element() const {
  const BoundArg* a = arg("etype");
  if (a == nullptr) return nullptr;
  const auto* t = std::get_if<Indirect<ConcreteType>>(&a->value);
  return t != nullptr ? &**t : nullptr;
}

std::string ConcreteType::string_arg(std::string_view name) const {
  const BoundArg* a = arg(name);
  if (a == nullptr) return {};
  const auto* s = std::get_if<std::string>(&a->value);
  return s != nullptr ? *s : std::string();
}

bool ConcreteType::bool_arg(std::string_view name) const {
  const BoundArg* a = arg(name);
  if (a == nullptr) return false;
  const auto* b = std::get_if<bool>(&a->value);
  return b != nullptr && *b;
}

const ConcreteField* ConcreteType::field(std::string_view name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string render_bound(const BoundValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DomainArg>) {
          return x.domain ? x.domain->name() : std::string();
        } else if constexpr (std::is_same_v<T, Indirect<ConcreteType>>) {
          return render_concrete(*x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return quote(x);
        } else {
          return x ? "true" : "false";
        }
      },
      v);
}

}  // namespace

std::string render_concrete(const ConcreteType& t) {
  std::string out = t.head;
  bool first = true;
  for (const auto& a : t.args) {
    if (a.defaulted) continue;
    out += first ? "[" : ",";
    first = false;
    out += a.name + "=" + render_bound(a.value);
  }
  if (!first) out += ']';
  return out;
}

// ------------------------------------------------------------ instantiation

namespace {

class Instantiator {
 public:
  Instantiator(const DefinitionRegistry& reg, const MediaClassRegistry& media,
               std::vector<Diagnostic>* notes)
      : reg_(reg), media_(media), notes_(notes) {}

  ConcreteType run(const TypeExpr& expr, const Bindings& bindings,
                   const std::string& path) {
    if (const StructClass* sc = reg_.find_struct(expr.head)) {
      return instantiate_struct(*sc, expr, bindings, path);
    }
    if (reg_.find_domain(expr.head) != nullptr) {
      throw Error(Code::ARG_KIND, path,
                  "'" + expr.head + "' is a class domain, not a type");
    }
    if (const BuiltinSignature* sig = find_builtin(expr.head)) {
      return instantiate_builtin(*sig, expr, bindings, path);
    }
    if (media_.contains(expr.head)) {
      if (!expr.args.empty()) {
        throw Error(Code::EXTRA_PARAM, path,
                    "media class '" + expr.head + "' takes no arguments");
      }
      ConcreteType t;
      t.head = expr.head;
      t.shape = ValueShape::media;
      return t;
    }
    throw Error(Code::UNKNOWN_TYPE, path, "unknown type '" + expr.head + "'");
  }

 private:
  /// Pairs each argument with a declared parameter name.
  std::vector<std::pair<std::string, const ArgValue*>> bind_names(
      const TypeExpr& expr, const std::vector<std::string>& params,
      const BuiltinSignature* sig, const std::string& path) {
    std::vector<std::pair<std::string, const ArgValue*>> out;
    std::set<std::string> seen;
    std::size_t positional = 0;
    for (const auto& a : expr.args) {
      std::string name;
      if (!a.key) {
        if (positional >= params.size()) {
          throw Error(Code::EXTRA_PARAM, path,
                      "'" + expr.head + "' takes at most " +
                          std::to_string(params.size()) + " argument(s)");
        }
        name = params[positional++];
      } else if (std::find(params.begin(), params.end(), *a.key) != params.end()) {
        name = *a.key;
      } else {
        if (sig != nullptr) {
          for (const auto& p : sig->params) {
            if (std::find(p.aliases.begin(), p.aliases.end(), *a.key) != p.aliases.end()) {
              name = p.name;
              if (notes_ != nullptr) {
                notes_->push_back(make_note(
                    Code::PARAM_ALIAS, path,
                    "'" + *a.key + "' accepted as '" + p.name + "' of " + expr.head));
              }
            }
          }
        }
        if (name.empty()) {
          throw Error(Code::EXTRA_PARAM, path,
                      "'" + expr.head + "' has no parameter '" + *a.key + "'");
        }
      }
      if (!seen.insert(name).second) {
        throw Error(Code::EXTRA_PARAM, path,
                    "parameter '" + name + "' of '" + expr.head + "' given twice");
      }
      out.emplace_back(name, &a.value);
    }
    return out;
  }

  const BoundValue& lookup(const ParamRef& ref, const Bindings& bindings,
                           const std::string& path) {
    auto it = bindings.find(ref.name);
    if (it == bindings.end()) {
      throw Error(Code::UNBOUND_PARAM, path, "'$" + ref.name + "' is not bound");
    }
    return it->second;
  }

  BoundValue domain_value(const ArgValue& v, const Bindings& bindings,
                          const std::string& what, const std::string& path) {
    if (const auto* ref = std::get_if<ParamRef>(&v)) {
      const BoundValue& b = lookup(*ref, bindings, path);
      if (std::holds_alternative<DomainArg>(b)) return b;
      throw Error(Code::ARG_KIND, path,
                  what + " expects a class domain but '$" + ref->name +
                      "' is bound to " + render_bound(b));
    }
    if (const auto* te = std::get_if<Indirect<TypeExpr>>(&v)) {
      if ((*te)->args.empty()) {
        if (auto dom = reg_.domain_ptr((*te)->head)) return DomainArg{dom};
        if (reg_.find(((*te)->head)) != nullptr || find_builtin((*te)->head) != nullptr ||
            media_.contains((*te)->head)) {
          throw Error(Code::ARG_KIND, path,
                      what + " expects a class domain but '" + (*te)->head +
                          "' is a type");
        }
        throw Error(Code::UNKNOWN_TYPE, path,
                    "unknown class domain '" + (*te)->head + "'");
      }
      throw Error(Code::ARG_KIND, path,
                  what + " expects a class domain, got " + render_arg_value(v));
    }
    throw Error(Code::ARG_KIND, path,
                what + " expects a class domain, got " + render_arg_value(v));
  }

  BoundValue type_value(const ArgValue& v, const Bindings& bindings,
                        const std::string& what, const std::string& path) {
    if (const auto* ref = std::get_if<ParamRef>(&v)) {
      const BoundValue& b = lookup(*ref, bindings, path);
      if (std::holds_alternative<Indirect<ConcreteType>>(b)) return b;
      throw Error(Code::ARG_KIND, path,
                  what + " expects a type but '$" + ref->name + "' is bound to " +
                      render_bound(b));
    }
    if (const auto* te = std::get_if<Indirect<TypeExpr>>(&v)) {
      return Indirect<ConcreteType>(run(**te, bindings, path));
    }
    throw Error(Code::ARG_KIND, path,
                what + " expects a type, got " + render_arg_value(v));
  }

  BoundValue string_value(const ArgValue& v, const Bindings& bindings,
                          const std::string& what, const std::string& path) {
    if (const auto* s = std::get_if<StringLit>(&v)) return s->value;
    if (const auto* n = std::get_if<NumberLit>(&v)) return n->text;
    if (const auto* te = std::get_if<Indirect<TypeExpr>>(&v)) {
      if ((*te)->args.empty()) return (*te)->head;
    }
    if (const auto* ref = std::get_if<ParamRef>(&v)) {
      const BoundValue& b = lookup(*ref, bindings, path);
      if (std::holds_alternative<std::string>(b)) return b;
      if (const auto* d = std::get_if<DomainArg>(&b)) {
        // A bare identifier bound through a struct parameter.
        return d->domain ? d->domain->name() : std::string();
      }
    }
    throw Error(Code::ARG_KIND, path,
                what + " expects a string, got " + render_arg_value(v));
  }

  BoundValue bool_value(const ArgValue& v, const Bindings& bindings,
                        const std::string& what, const std::string& path) {
    if (const auto* b = std::get_if<BoolLit>(&v)) return b->value;
    if (const auto* s = std::get_if<StringLit>(&v)) {
      if (s->value == "true") return true;
      if (s->value == "false") return false;
    }
    if (const auto* ref = std::get_if<ParamRef>(&v)) {
      const BoundValue& b = lookup(*ref, bindings, path);
      if (std::holds_alternative<bool>(b)) return b;
    }
    throw Error(Code::ARG_KIND, path,
                what + " expects a boolean, got " + render_arg_value(v));
  }

  ConcreteType instantiate_builtin(const BuiltinSignature& sig,
                                   const TypeExpr& expr, const Bindings& bindings,
                                   const std::string& path) {
    std::vector<std::string> names;
    for (const auto& p : sig.params) names.push_back(p.name);
    auto given = bind_names(expr, names, &sig, path);

    ConcreteType t;
    t.head = sig.name;
    t.shape = sig.shape;
    for (const auto& p : sig.params) {
      const std::string what = sig.name + "." + p.name;
      auto it = std::find_if(given.begin(), given.end(),
                             [&](const auto& g) { return g.first == p.name; });
      if (it == given.end()) {
        if (p.required) {
          throw Error(Code::MISSING_PARAM, path,
                      "'" + sig.name + "' requires parameter '" + p.name + "'");
        }
        if (!p.default_value) continue;
        BoundValue dv = *p.default_value;
        if (p.kind == ParamKind::boolean) dv = (*p.default_value == "true");
        t.args.push_back({p.name, std::move(dv), true});
        continue;
      }
      BoundValue value;
      switch (p.kind) {
        case ParamKind::domain_ref:
          value = domain_value(*it->second, bindings, what, path);
          break;
        case ParamKind::type_ref:
          value = type_value(*it->second, bindings, what, path);
          break;
        case ParamKind::string:
          value = string_value(*it->second, bindings, what, path);
          break;
        case ParamKind::boolean:
          value = bool_value(*it->second, bindings, what, path);
          break;
      }
      if (const auto* s = std::get_if<std::string>(&value)) {
        if (!p.choices.empty() &&
            std::find(p.choices.begin(), p.choices.end(), *s) == p.choices.end()) {
          std::string allowed;
          for (const auto& c : p.choices) allowed += (allowed.empty() ? "" : ", ") + c;
          throw Error(Code::ARG_KIND, path,
                      what + " must be one of " + allowed + ", got '" + *s + "'");
        }
        if ((sig.shape == ValueShape::date || sig.shape == ValueShape::time) &&
            p.name == "fmt") {
          if (auto err = check_format(*s)) {
            throw Error(Code::DATE_FORMAT, path, what + ": " + *err);
          }
        }
      }
      const bool defaulted = p.default_value && [&] {
        if (const auto* s = std::get_if<std::string>(&value)) return *s == *p.default_value;
        if (const auto* b = std::get_if<bool>(&value)) {
          return *b == (*p.default_value == "true");
        }
        return false;
      }();
      t.args.push_back({p.name, std::move(value), defaulted});
    }
    return t;
  }

  ConcreteType instantiate_struct(const StructClass& sc, const TypeExpr& expr,
                                  const Bindings& bindings, const std::string& path) {
    if (std::find(stack_.begin(), stack_.end(), sc.name) != stack_.end()) {
      std::string chain;
      for (const auto& s : stack_) chain += s + " -> ";
      throw Error(Code::CYCLE_DETECTED, path, "recursive type: " + chain + sc.name);
    }
    auto given = bind_names(expr, sc.params, nullptr, path);

    ConcreteType t;
    t.head = sc.name;
    t.shape = ValueShape::record;
    Bindings inner;
    for (const auto& p : sc.params) {
      auto it = std::find_if(given.begin(), given.end(),
                             [&](const auto& g) { return g.first == p; });
      if (it == given.end()) {
        throw Error(Code::MISSING_PARAM, path,
                    "'" + sc.name + "' requires parameter '" + p + "'");
      }
      BoundValue v = untyped_value(*it->second, bindings, path);
      inner.emplace(p, v);
      t.args.push_back({p, std::move(v), false});
    }

    stack_.push_back(sc.name);
    for (const auto& [fname, fexpr] : sc.fields) {
      const std::string fpath = join_path(path.empty() ? sc.name : path, fname);
      ConcreteField f;
      f.name = fname;
      f.optional = sc.is_optional(fname);
      f.type = Indirect<ConcreteType>(run(fexpr, inner, fpath));
      t.fields.push_back(std::move(f));
    }
    stack_.pop_back();
    return t;
  }

  /// Struct parameters are untyped; the argument's form decides.
  BoundValue untyped_value(const ArgValue& v, const Bindings& bindings,
                           const std::string& path) {
    return std::visit(
        [&](const auto& x) -> BoundValue {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Indirect<TypeExpr>>) {
            if (x->args.empty()) {
              if (auto dom = reg_.domain_ptr(x->head)) return DomainArg{dom};
            }
            return Indirect<ConcreteType>(run(*x, bindings, path));
          } else if constexpr (std::is_same_v<T, ParamRef>) {
            return lookup(x, bindings, path);
          } else if constexpr (std::is_same_v<T, StringLit>) {
            return x.value;
          } else if constexpr (std::is_same_v<T, NumberLit>) {
            return x.text;
          } else {
            return x.value;
          }
        },
        v);
  }

  const DefinitionRegistry& reg_;
  const MediaClassRegistry& media_;
  std::vector<Diagnostic>* notes_;
  std::vector<std::string> stack_;
};

}  // namespace

ConcreteType instantiate_type(const TypeExpr& expr, const Bindings& bindings,
                              const DefinitionRegistry& reg,
                              const InstantiateOptions& options,
                              std::vector<Diagnostic>* notes) {
  const MediaClassRegistry& media =
      options.media != nullptr ? *options.media : default_media_registry();
  Instantiator inst(reg, media, notes);
  return inst.run(expr, bindings, {});
}

// ------------------------------------------------------------ libraries

LibraryEnvironment LibraryEnvironment::from(const std::vector<std::string>& cli_paths,
                                            const std::string& env_library_path,
                                            const std::string& default_dir) {
#ifdef _WIN32
  constexpr char kSep = ';';
#else
  constexpr char kSep = ':';
#endif
  LibraryEnvironment env;
  for (const auto& p : cli_paths) {
    if (!p.empty()) env.search_paths.emplace_back(p);
  }
  std::size_t start = 0;
  while (start <= env_library_path.size()) {
    std::size_t end = env_library_path.find(kSep, start);
    if (end == std::string::npos) end = env_library_path.size();
    if (end > start) env.search_paths.emplace_back(env_library_path.substr(start, end - start));
    start = end + 1;
  }
  if (!default_dir.empty()) env.search_paths.emplace_back(default_dir);
  return env;
}

std::optional<fs::path> find_library(const std::string& name,
                                     const fs::path& base_dir,
                                     const LibraryEnvironment& env,
                                     std::vector<fs::path>* tried) {
  std::vector<fs::path> dirs;
  dirs.push_back(base_dir.empty() ? fs::path(".") : base_dir);
  for (const auto& p : env.search_paths) dirs.push_back(p);
  for (const auto& dir : dirs) {
    for (const char* ext : {".yaml", ".yml", ".json"}) {
      fs::path candidate = dir / (name + ext);
      if (tried != nullptr) tried->push_back(candidate);
      std::error_code ec;
      if (fs::is_regular_file(candidate, ec)) return candidate;
    }
  }
  return std::nullopt;
}

namespace {

class ImportLoader {
 public:
  ImportLoader(const LibraryEnvironment& env, const ParseOptions& opts)
      : env_(env), opts_(opts) {}

  void merge(const RawDocument& doc, const fs::path& dir) {
    for (const auto& name : doc.imports) {
      std::vector<fs::path> tried;
      auto found = find_library(name, dir, env_, &tried);
      if (!found) {
        std::string where;
        for (const auto& t : tried) where += (where.empty() ? "" : ", ") + t.string();
        auto d = make_error(Code::IMPORT_NOT_FOUND, "$import",
                            "library '" + name + "' not found (tried " + where + ")");
        d.source = doc.source;
        out_.diagnostics.push_back(std::move(d));
        continue;
      }
      std::error_code ec;
      fs::path canon = fs::weakly_canonical(*found, ec);
      if (ec) canon = fs::absolute(*found);
      if (std::find(stack_.begin(), stack_.end(), canon) != stack_.end()) {
        std::string chain;
        for (auto it = std::find(stack_.begin(), stack_.end(), canon); it != stack_.end(); ++it) {
          chain += it->filename().string() + " -> ";
        }
        auto d = make_error(Code::IMPORT_CYCLE, "$import",
                            "import cycle: " + chain + canon.filename().string());
        d.source = doc.source;
        out_.diagnostics.push_back(std::move(d));
        continue;
      }
      if (loaded_.count(canon) != 0) continue;

      RawDocument lib;
      try {
        ParseOptions po = opts_;
        po.source_name = found->string();
        lib = parse_document_file(found->string(), po);
      } catch (const Error& e) {
        Diagnostic d = e.diagnostic();
        if (d.source.empty()) d.source = found->string();
        out_.diagnostics.push_back(std::move(d));
        continue;
      }
      loaded_.insert(canon);
      stack_.push_back(canon);
      merge(lib, found->parent_path());
      stack_.pop_back();
    }
    add_own(doc);
  }

  void push_root(const fs::path& p) {
    std::error_code ec;
    fs::path canon = fs::weakly_canonical(p, ec);
    if (!ec) {
      stack_.push_back(canon);
      loaded_.insert(canon);
    }
  }

  ImportResult take() { return std::move(out_); }

 private:
  void add_own(const RawDocument& doc) {
    for (auto w : doc.warnings) {
      if (w.source.empty()) w.source = doc.source;
      out_.diagnostics.push_back(std::move(w));
    }
    BuildResult built = build_definitions(doc.defs, Provenance{doc.source, order_++});
    for (auto& d : built.diagnostics) {
      if (d.source.empty()) d.source = doc.source;
      out_.diagnostics.push_back(std::move(d));
    }
    for (const auto& entry : built.registry.entries()) {
      const std::string name = entry.name;
      const std::string source = entry.provenance.source;
      if (auto old = out_.registry.put(entry)) {
        auto d = make_warning(Code::IMPORT_OVERWRITE, name,
                              "definition '" + name + "' from " + display(old->source) +
                                  " replaced by " + display(source));
        d.source = source;
        out_.diagnostics.push_back(std::move(d));
      }
    }
  }

  static std::string display(const std::string& s) {
    return s.empty() ? std::string("<document>") : s;
  }

  const LibraryEnvironment& env_;
  ParseOptions opts_;
  ImportResult out_;
  std::vector<fs::path> stack_;
  std::set<fs::path> loaded_;
  std::size_t order_ = 0;
};

}  // namespace

ImportResult resolve_imports(const RawDocument& doc, const LibraryEnvironment& env,
                             const ParseOptions& parse_options) {
  ImportLoader loader(env, parse_options);
  fs::path dir;
  if (!doc.source.empty()) {
    std::error_code ec;
    if (fs::exists(doc.source, ec)) {
      loader.push_root(doc.source);
      dir = fs::path(doc.source).parent_path();
    }
  }
  loader.merge(doc, dir);
  return loader.take();
}

// ------------------------------------------------------------ acyclicity

std::vector<std::string> definition_edges(const DefinitionRegistry& reg,
                                          const std::string& name) {
  std::vector<std::string> out;
  const StructClass* sc = reg.find_struct(name);
  if (sc == nullptr) return out;
  std::vector<std::string> refs;
  for (const auto& [_, t] : sc->fields) collect_references(t, refs);
  for (const auto& r : refs) {
    if (reg.find(r) != nullptr && std::find(out.begin(), out.end(), r) == out.end()) {
      out.push_back(r);
    }
  }
  return out;
}

std::optional<std::vector<std::string>> find_cycle(const DefinitionRegistry& reg) {
  enum class Color { white, grey, black };
  std::map<std::string, Color> color;
  for (const auto& e : reg.entries()) color[e.name] = Color::white;

  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> found;

  std::function<bool(const std::string&)> visit = [&](const std::string& n) {
    color[n] = Color::grey;
    stack.push_back(n);
    for (const auto& m : definition_edges(reg, n)) {
      if (color[m] == Color::grey) {
        auto it = std::find(stack.begin(), stack.end(), m);
        std::vector<std::string> cycle(it, stack.end());
        cycle.push_back(m);
        found = std::move(cycle);
        return true;
      }
      if (color[m] == Color::white && visit(m)) return true;
    }
    stack.pop_back();
    color[n] = Color::black;
    return false;
  };

  for (const auto& e : reg.entries()) {
    if (color[e.name] == Color::white && visit(e.name)) return found;
  }
  return std::nullopt;
}

std::optional<Diagnostic> check_acyclic(const DefinitionRegistry& reg) {
  auto cycle = find_cycle(reg);
  if (!cycle) return std::nullopt;
  std::string chain;
  for (const auto& n : *cycle) chain += (chain.empty() ? "" : " -> ") + n;
  const RegistryEntry* e = reg.find(cycle->front());
  auto d = make_error(Code::CYCLE_DETECTED, cycle->front(), "definition cycle: " + chain);
  if (e != nullptr) d.source = e->provenance.source;
  return d;
}

// ------------------------------------------------------------ schema

namespace {

std::optional<ConcreteType> resolve_type_spec(const Value& raw, const std::string& path,
                                              const DefinitionRegistry& reg,
                                              const InstantiateOptions& opts,
                                              const std::string& source,
                                              std::vector<Diagnostic>& diags) {
  try {
    TypeExpr expr = parse_sample_type_spec(raw);
    std::vector<Diagnostic> notes;
    ConcreteType t = instantiate_type(expr, {}, reg, opts, &notes);
    for (auto& n : notes) {
      n.path = n.path.empty() ? path : join_path(path, n.path);
      n.source = source;
      diags.push_back(std::move(n));
    }
    return t;
  } catch (const Error& e) {
    Diagnostic d = e.diagnostic();
    d.path = d.path.empty() ? path : join_path(path, d.path);
    d.source = source;
    diags.push_back(std::move(d));
    return std::nullopt;
  }
}

}  // namespace

ResolveResult resolve_schema(const RawDocument& doc, const LibraryEnvironment& env,
                             const ResolveOptions& options) {
  ResolveResult result;
  auto& diags = result.diagnostics;

  ImportResult imported = resolve_imports(doc, env, options.parse);
  diags = std::move(imported.diagnostics);
  if (has_errors(diags)) return result;

  if (auto cyc = check_acyclic(imported.registry)) {
    diags.push_back(*cyc);
    return result;
  }

  ResolvedSchema schema;
  schema.meta = doc.meta;
  if (doc.data) {
    const RawDataSection& data = *doc.data;
    if (data.sample_type.is_null()) {
      diags.push_back(make_error(Code::MALFORMED_DATA_SECTION, "data/sample-type",
                                 "data section has no sample-type"));
      diags.back().source = doc.source;
    } else {
      schema.sample_type = resolve_type_spec(data.sample_type, "data/sample-type",
                                             imported.registry, options.instantiate,
                                             doc.source, diags);
    }
    if (data.global_info_type) {
      schema.global_info_type =
          resolve_type_spec(*data.global_info_type, "data/global-info-type",
                            imported.registry, options.instantiate, doc.source, diags);
    }
  }
  if (has_errors(diags)) return result;
  schema.registry = std::move(imported.registry);
  result.schema = std::move(schema);
  return result;
}

}  // namespace dsdl
