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

#include "dsdl/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dsdl/document.hpp"
#include "dsdl/locator.hpp"
#include "dsdl/resolver.hpp"
#include "dsdl/validation.hpp"

extern char** environ;  // NOLINT

#ifndef DSDL_DEFAULT_LIBRARY_DIR
#define DSDL_DEFAULT_LIBRARY_DIR ""
#endif

namespace dsdl {

namespace fs = std::filesystem;

CliEnvironment CliEnvironment::from_process() {
  CliEnvironment env;
  for (char** e = environ; e != nullptr && *e != nullptr; ++e) env.variables.emplace_back(*e);
  env.default_library_dir = DSDL_DEFAULT_LIBRARY_DIR;
  return env;
}

namespace {

// ------------------------------------------------------------ configuration

struct Sourced {
  std::string value;
  std::string origin;  // flag | config | env | default
};

struct CliConfig {
  std::vector<Sourced> library_paths;
  Sourced data_root{"", "default"};
  std::map<std::string, Sourced> aliases;
  std::string format = "text";
  bool strict = false;
  std::optional<std::size_t> max_errors;
};

struct RawFlags {
  std::vector<std::string> library_paths;
  std::string data_root;
  std::vector<std::string> aliases;
  std::string config_file;
  std::string format = "text";
  bool strict = false;
  long long max_errors = -1;
  bool show_config = false;
};

std::optional<std::string> env_value(const CliEnvironment& env, const std::string& key) {
  for (const auto& kv : env.variables) {
    if (kv.size() > key.size() && kv.compare(0, key.size(), key) == 0 &&
        kv[key.size()] == '=') {
      return kv.substr(key.size() + 1);
    }
  }
  return std::nullopt;
}

/// Throws Error on unreadable config or malformed alias flags.
CliConfig build_config(const RawFlags& flags, const CliEnvironment& env) {
  CliConfig cfg;
  cfg.format = flags.format;
  cfg.strict = flags.strict;
  if (flags.max_errors >= 0) cfg.max_errors = static_cast<std::size_t>(flags.max_errors);

  Value config = Value::object();
  if (!flags.config_file.empty()) {
    config = load_file(flags.config_file).value;
    if (!config.is_object()) {
      throw Error(Code::SYNTAX_ERROR, {}, flags.config_file + ": config must be a mapping");
    }
  }

  for (const auto& p : flags.library_paths) cfg.library_paths.push_back({p, "flag"});
  if (auto it = config.find("library-path"); it != config.end()) {
    if (it->is_string()) {
      cfg.library_paths.push_back({it->get<std::string>(), "config"});
    } else if (it->is_array()) {
      for (const auto& p : *it) {
        if (p.is_string()) cfg.library_paths.push_back({p.get<std::string>(), "config"});
      }
    }
  }
  if (auto lp = env_value(env, "DSDL_LIBRARY_PATH")) {
    for (const auto& p : LibraryEnvironment::from({}, *lp, {}).search_paths) {
      cfg.library_paths.push_back({p.string(), "env"});
    }
  }
  if (!env.default_library_dir.empty()) {
    cfg.library_paths.push_back({env.default_library_dir, "default"});
  }

  if (!flags.data_root.empty()) {
    cfg.data_root = {flags.data_root, "flag"};
  } else if (auto it = config.find("data-root"); it != config.end() && it->is_string()) {
    cfg.data_root = {it->get<std::string>(), "config"};
  }

  AliasSources sources;
  sources.environment = aliases_from_environment(env.variables);
  if (auto it = config.find("aliases"); it != config.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) {
      if (v.is_string()) sources.config[k] = v.get<std::string>();
    }
  }
  for (const auto& a : flags.aliases) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(Code::ALIAS_UNDEFINED, {}, "--alias expects name=dir, got '" + a + "'");
    }
    std::string name = a.substr(0, eq);
    if (!name.empty() && name[0] == '$') name.erase(0, 1);
    sources.flags[name] = a.substr(eq + 1);
  }
  for (const auto& [name, dir] : merge_aliases(sources)) {
    std::string origin = sources.flags.count(name) != 0    ? "flag"
                         : sources.config.count(name) != 0 ? "config"
                                                           : "env";
    cfg.aliases[name] = {dir, origin};
  }
  return cfg;
}

LibraryEnvironment library_env(const CliConfig& cfg) {
  LibraryEnvironment env;
  for (const auto& p : cfg.library_paths) env.search_paths.emplace_back(p.value);
  return env;
}

ResolutionEnvironment resolution_env(const CliConfig& cfg) {
  ResolutionEnvironment env;
  env.data_root = cfg.data_root.value;
  for (const auto& [k, v] : cfg.aliases) env.aliases[k] = v.value;
  return env;
}

void show_config(const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    Value j = Value::object();
    j["library-path"] = Value::array();
    for (const auto& p : cfg.library_paths) {
      j["library-path"].push_back({{"path", p.value}, {"source", p.origin}});
    }
    j["data-root"] = {{"path", cfg.data_root.value}, {"source", cfg.data_root.origin}};
    j["aliases"] = Value::object();
    for (const auto& [k, v] : cfg.aliases) {
      j["aliases"][k] = {{"path", v.value}, {"source", v.origin}};
    }
    j["format"] = cfg.format;
    j["strict"] = cfg.strict;
    j["max-errors"] = cfg.max_errors ? Value(*cfg.max_errors) : Value(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << "library-path:\n";
  for (const auto& p : cfg.library_paths) out << "  " << p.value << " (" << p.origin << ")\n";
  out << "data-root: " << (cfg.data_root.value.empty() ? "." : cfg.data_root.value) << " ("
      << cfg.data_root.origin << ")\n";
  out << "aliases:\n";
  for (const auto& [k, v] : cfg.aliases) {
    out << "  " << k << " = " << v.value << " (" << v.origin << ")\n";
  }
  out << "format: " << cfg.format << "\n";
  out << "strict: " << (cfg.strict ? "true" : "false") << "\n";
  out << "max-errors: " << (cfg.max_errors ? std::to_string(*cfg.max_errors) : "unlimited")
      << "\n";
}

// ------------------------------------------------------------ pipeline

struct Pipeline {
  std::optional<RawDocument> doc;
  std::optional<ResolvedSchema> schema;
  std::optional<ValidationReport> report;
  std::vector<Diagnostic> diagnostics;
};

Pipeline run_pipeline(const std::string& file, const CliConfig& cfg, bool validate) {
  Pipeline p;
  try {
    p.doc = parse_document_file(file, ParseOptions{false, file});
  } catch (const Error& e) {
    Diagnostic d = e.diagnostic();
    if (d.source.empty()) d.source = file;
    p.diagnostics.push_back(std::move(d));
    return p;
  }
  ResolveResult rr = resolve_schema(*p.doc, library_env(cfg));
  p.diagnostics = std::move(rr.diagnostics);
  if (!rr.schema) return p;
  p.schema = std::move(rr.schema);
  if (!validate || !p.doc->data) return p;
  ValidateOptions opts;
  opts.strict = cfg.strict;
  opts.max_errors = cfg.max_errors;
  p.report = validate_dataset(*p.schema, *p.doc->data, fs::path(file).parent_path(), opts);
  for (auto& d : p.report->diagnostics) {
    if (d.source.empty()) d.source = file;
    p.diagnostics.push_back(d);
  }
  return p;
}

int exit_for(const std::vector<Diagnostic>& diags, bool strict) {
  const DiagnosticCounts c = count(diags);
  if (c.errors > 0) return kExitErrors;
  if (strict && c.warnings > 0) return kExitErrors;
  return kExitOk;
}

Value diagnostic_json(const Diagnostic& d) {
  Value j = Value::object();
  j["severity"] = std::string(to_string(d.severity));
  j["code"] = std::string(to_string(d.code));
  j["path"] = d.path;
  j["message"] = d.message;
  j["source"] = d.source;
  return j;
}

Value counts_json(const DiagnosticCounts& c) {
  Value j = Value::object();
  j["errors"] = c.errors;
  j["warnings"] = c.warnings;
  j["notes"] = c.notes;
  j["by_code"] = Value::object();
  for (const auto& [k, v] : c.by_code) j["by_code"][k] = v;
  return j;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& out) {
  for (const auto& d : diags) {
    out << to_string(d.severity) << " " << to_string(d.code) << " "
        << (d.path.empty() ? "-" : d.path) << " " << d.message << "\n";
  }
}

bool file_readable(const std::string& file, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_regular_file(file, ec)) {
    err << "dsdl: cannot open " << file << "\n";
    return false;
  }
  return true;
}

// ------------------------------------------------------------ validate

int cmd_validate(const std::string& file, const CliConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  if (!file_readable(file, err)) return kExitUsage;
  Pipeline p = run_pipeline(file, cfg, true);
  const DiagnosticCounts c = count(p.diagnostics);
  const std::size_t n = p.report ? p.report->sample_count : 0;
  const int code = exit_for(p.diagnostics, cfg.strict);
  if (cfg.format == "json") {
    Value j = Value::object();
    j["command"] = "validate";
    j["file"] = file;
    j["ok"] = code == kExitOk;
    j["sample_count"] = n;
    j["truncated"] = p.report && p.report->truncated;
    j["counts"] = counts_json(c);
    j["diagnostics"] = Value::array();
    for (const auto& d : p.diagnostics) j["diagnostics"].push_back(diagnostic_json(d));
    j["samples"] = Value::array();
    if (p.report) {
      for (const auto& s : p.report->samples) j["samples"].push_back(to_json(s));
    }
    j["global-info"] =
        p.report && p.report->global_info ? to_json(*p.report->global_info) : Value(nullptr);
    out << j.dump(2) << "\n";
  } else {
    print_diagnostics(p.diagnostics, out);
    out << n << " samples validated, " << c.errors << " errors, " << c.warnings
        << " warnings\n";
  }
  return code;
}

// ------------------------------------------------------------ inspect

std::string kind_name(const Definition& d) {
  return std::holds_alternative<std::shared_ptr<const ClassDomain>>(d) ? "class-domain"
                                                                       : "struct";
}

void field_tree(const ConcreteType& t, int depth, std::ostream& out) {
  const ConcreteType* body = &t;
  while (body->shape == ValueShape::list && body->element() != nullptr) body = body->element();
  for (const auto& f : body->fields) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << f.name << ": "
        << render_concrete(*f.type) << (f.optional ? " (optional)" : "") << "\n";
    field_tree(*f.type, depth + 1, out);
  }
}

Value field_tree_json(const ConcreteType& t) {
  Value arr = Value::array();
  const ConcreteType* body = &t;
  while (body->shape == ValueShape::list && body->element() != nullptr) body = body->element();
  for (const auto& f : body->fields) {
    Value j = Value::object();
    j["name"] = f.name;
    j["type"] = render_concrete(*f.type);
    j["optional"] = f.optional;
    Value kids = field_tree_json(*f.type);
    if (!kids.empty()) j["fields"] = std::move(kids);
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_inspect(const std::string& file, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  if (!file_readable(file, err)) return kExitUsage;
  Pipeline p = run_pipeline(file, cfg, false);
  if (!p.schema) {
    if (cfg.format == "json") {
      Value j = Value::object();
      j["command"] = "inspect";
      j["file"] = file;
      j["ok"] = false;
      j["counts"] = counts_json(count(p.diagnostics));
      j["diagnostics"] = Value::array();
      for (const auto& d : p.diagnostics) j["diagnostics"].push_back(diagnostic_json(d));
      out << j.dump(2) << "\n";
    } else {
      print_diagnostics(p.diagnostics, out);
    }
    return kExitErrors;
  }
  const ResolvedSchema& s = *p.schema;
  std::vector<const ClassDomain*> domains;
  for (const auto& e : s.registry.entries()) {
    if (const auto* d = std::get_if<std::shared_ptr<const ClassDomain>>(&e.definition)) {
      domains.push_back(d->get());
    }
  }

  if (cfg.format == "json") {
    Value j = Value::object();
    j["command"] = "inspect";
    j["file"] = file;
    j["ok"] = true;
    j["meta"] = s.meta;
    j["definitions"] = Value::array();
    for (const auto& e : s.registry.entries()) {
      j["definitions"].push_back({{"name", e.name},
                                  {"kind", kind_name(e.definition)},
                                  {"source", e.provenance.source},
                                  {"order", e.provenance.order}});
    }
    j["sample-type"] = s.sample_type ? Value(render_concrete(*s.sample_type)) : Value(nullptr);
    j["sample-fields"] = s.sample_type ? field_tree_json(*s.sample_type) : Value::array();
    j["global-info-type"] =
        s.global_info_type ? Value(render_concrete(*s.global_info_type)) : Value(nullptr);
    j["domains"] = Value::array();
    for (const ClassDomain* d : domains) {
      Value dj = Value::object();
      dj["name"] = d->name();
      dj["classes"] = Value::array();
      for (std::size_t i = 1; i <= d->size(); ++i) {
        dj["classes"].push_back({{"index", i},
                                 {"name", d->classes()[i - 1].verbatim},
                                 {"index_path", d->index_path_of(i)}});
      }
      dj["skeleton"] = Value::array();
      for (const auto& [a, b] : d->skeleton()) dj["skeleton"].push_back(Value::array({a, b}));
      j["domains"].push_back(std::move(dj));
    }
    j["diagnostics"] = Value::array();
    for (const auto& d : p.diagnostics) j["diagnostics"].push_back(diagnostic_json(d));
    out << j.dump(2) << "\n";
    return exit_for(p.diagnostics, cfg.strict);
  }

  print_diagnostics(p.diagnostics, out);
  out << "definitions:\n";
  for (const auto& e : s.registry.entries()) {
    out << "  " << e.name << " " << kind_name(e.definition) << " "
        << (e.provenance.source.empty() ? "<document>" : e.provenance.source) << "\n";
  }
  if (s.sample_type) {
    out << "sample-type: " << render_concrete(*s.sample_type) << "\n";
    field_tree(*s.sample_type, 1, out);
  }
  if (s.global_info_type) {
    out << "global-info-type: " << render_concrete(*s.global_info_type) << "\n";
    field_tree(*s.global_info_type, 1, out);
  }
  out << "class domains:\n";
  for (const ClassDomain* d : domains) {
    out << "  " << d->name() << " (" << d->size() << " classes)\n";
    for (std::size_t i = 1; i <= d->size(); ++i) {
      out << "    " << i << " " << d->classes()[i - 1].verbatim;
      if (d->hierarchical()) {
        out << " [";
        const auto& ip = d->index_path_of(i);
        for (std::size_t k = 0; k < ip.size(); ++k) out << (k ? "." : "") << ip[k];
        out << "]";
      }
      out << "\n";
    }
    if (!d->skeleton().empty()) {
      out << "    skeleton:";
      for (const auto& [a, b] : d->skeleton()) out << " [" << a << ", " << b << "]";
      out << "\n";
    }
  }
  return exit_for(p.diagnostics, cfg.strict);
}

// ------------------------------------------------------------ resolve-loc

int cmd_resolve_loc(const std::string& text, const CliConfig& cfg, std::ostream& out) {
  Value j = Value::object();
  j["command"] = "resolve-loc";
  j["locator"] = text;
  int code = kExitOk;
  try {
    ObjectLocator loc = parse_locator(text);
    j["kind"] = std::string(loc.kind());
    try {
      j["address"] = resolve_locator(loc, resolution_env(cfg));
    } catch (const Error& e) {
      if (e.code() != Code::ID_MAPPER_MISSING) throw;
      j["address"] = nullptr;
    }
  } catch (const Error& e) {
    j["error"] = diagnostic_json(e.diagnostic());
    code = kExitErrors;
  }
  if (cfg.format == "json") {
    j["ok"] = code == kExitOk;
    out << j.dump(2) << "\n";
  } else {
    if (code != kExitOk) {
      out << "error " << j["error"]["code"].get<std::string>() << " - "
          << j["error"]["message"].get<std::string>() << "\n";
    } else if (j["address"].is_null()) {
      out << j["kind"].get<std::string>() << " (no id mapper configured)\n";
    } else {
      out << j["kind"].get<std::string>() << " → " << j["address"].get<std::string>()
          << "\n";
    }
  }
  return code;
}

// ------------------------------------------------------------ summary

struct Stats {
  std::map<std::pair<std::string, std::size_t>, std::pair<std::string, std::size_t>> labels;
  std::map<std::string, std::size_t> locators;
};

void collect(const TypedValue& v, Stats& st) {
  if (const auto* r = v.as<ClassRef>()) {
    auto& slot = st.labels[{r->domain, r->flat_index}];
    slot.first = r->qualified();
    ++slot.second;
  } else if (const auto* m = v.as<MediaRef>()) {
    ++st.locators[std::string(m->locator.kind())];
  } else if (const auto* l = v.as<ObjectLocator>()) {
    ++st.locators[std::string(l->kind())];
  } else if (const auto* list = v.as<TypedList>()) {
    for (const auto& item : list->items) collect(item, st);
  } else if (const auto* rec = v.as<TypedRecord>()) {
    for (const auto& item : rec->values) collect(item, st);
  }
}

int cmd_summary(const std::string& file, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  if (!file_readable(file, err)) return kExitUsage;
  Pipeline p = run_pipeline(file, cfg, true);
  const int code = exit_for(p.diagnostics, cfg.strict);
  if (code != kExitOk || !p.report) {
    if (cfg.format == "json") {
      Value j = Value::object();
      j["command"] = "summary";
      j["file"] = file;
      j["ok"] = false;
      j["counts"] = counts_json(count(p.diagnostics));
      j["diagnostics"] = Value::array();
      for (const auto& d : p.diagnostics) j["diagnostics"].push_back(diagnostic_json(d));
      out << j.dump(2) << "\n";
    } else {
      print_diagnostics(p.diagnostics, out);
    }
    return code == kExitOk ? kExitErrors : code;
  }

  const ValidationReport& rep = *p.report;
  Stats st;
  std::vector<std::string> field_order;
  std::map<std::string, std::size_t> filled;
  for (const auto& s : rep.samples) {
    collect(s, st);
    if (const auto* rec = s.as<TypedRecord>()) {
      for (std::size_t i = 0; i < rec->names.size(); ++i) {
        if (std::find(field_order.begin(), field_order.end(), rec->names[i]) ==
            field_order.end()) {
          field_order.push_back(rec->names[i]);
        }
        if (!rec->values[i].is_null()) ++filled[rec->names[i]];
      }
    }
  }
  const std::size_t n = rep.sample_count;

  if (cfg.format == "json") {
    Value j = Value::object();
    j["command"] = "summary";
    j["file"] = file;
    j["ok"] = true;
    j["sample_count"] = n;
    j["labels"] = Value::array();
    for (const auto& [key, v] : st.labels) {
      j["labels"].push_back({{"label", v.first}, {"index", key.second}, {"count", v.second}});
    }
    j["fill_rates"] = Value::array();
    for (const auto& f : field_order) {
      j["fill_rates"].push_back({{"field", f}, {"filled", filled[f]}, {"total", n}});
    }
    j["locators"] = Value::object();
    for (const auto& [k, v] : st.locators) j["locators"][k] = v;
    j["counts"] = counts_json(count(p.diagnostics));
    j["diagnostics"] = Value::array();
    for (const auto& d : p.diagnostics) j["diagnostics"].push_back(diagnostic_json(d));
    out << j.dump(2) << "\n";
    return code;
  }

  print_diagnostics(p.diagnostics, out);
  out << "samples: " << n << "\n";
  out << "labels:\n";
  for (const auto& [key, v] : st.labels) out << "  " << v.first << ": " << v.second << "\n";
  out << "field fill rates:\n";
  for (const auto& f : field_order) {
    out << "  " << f << ": " << filled[f] << "/" << n << "\n";
  }
  out << "locators:\n";
  for (const auto& [k, v] : st.locators) out << "  " << k << ": " << v << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env) {
  CLI::App app{"Validate and inspect DSDL dataset description files", "dsdl"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  RawFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", flags.strict, "Treat warnings as failures");
  app.add_option("--library-path", flags.library_paths, "Library search directory")
      ->allow_extra_args(false);
  app.add_option("--data-root", flags.data_root, "Root for relative locators");
  app.add_option("--alias", flags.aliases, "Alias binding name=dir")->allow_extra_args(false);
  app.add_option("--config", flags.config_file, "Config file (YAML or JSON)");
  app.add_option("--max-errors", flags.max_errors, "Stop after N errors per channel")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--show-config", flags.show_config, "Print the effective configuration");

  std::string file;
  std::string locator;
  auto* validate = app.add_subcommand("validate", "Parse, resolve and validate a file");
  validate->add_option("file", file, "Description file")->required();
  auto* inspect = app.add_subcommand("inspect", "Print the resolved schema");
  inspect->add_option("file", file, "Description file")->required();
  auto* resolve = app.add_subcommand("resolve-loc", "Classify and resolve an object locator");
  resolve->add_option("locator", locator, "Locator text")->required();
  auto* summary = app.add_subcommand("summary", "Dataset statistics");
  summary->add_option("file", file, "Description file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CliConfig cfg;
  try {
    cfg = build_config(flags, env);
  } catch (const Error& e) {
    err << "dsdl: " << e.diagnostic().message << "\n";
    return kExitUsage;
  }

  if (flags.show_config) show_config(cfg, out);
  if (validate->parsed()) return cmd_validate(file, cfg, out, err);
  if (inspect->parsed()) return cmd_inspect(file, cfg, out, err);
  if (resolve->parsed()) return cmd_resolve_loc(locator, cfg, out);
  if (summary->parsed()) return cmd_summary(file, cfg, out, err);
  if (flags.show_config) return kExitOk;
  err << app.help();
  return kExitUsage;
}

}  // namespace dsdl
