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

#include "testkit.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dsdl/value.hpp"

namespace dsdl::testkit {

fs::path corpus_dir() { return fs::path(DSDL_TEST_CORPUS_DIR); }
fs::path library_dir() { return fs::path(DSDL_TEST_LIBRARY_DIR); }

const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {
      "get-started/get-started.json",
      "get-started/get-started.yaml",
      "optional-label/optional-label.yaml",
      "global-info/global-info.yaml",
      "external-files/dataset.yaml",
      "library-import/import-imageclass.yaml",
      "library-import/import-visualrecog.yaml",
      "examples/image-classification.yaml",
      "examples/object-detection.yaml",
      "examples/scene-and-object.yaml",
      "examples/image-segmentation.yaml",
      "cifar10/set-train/train.yaml",
      "voc/train.yaml",
      "segmentation/semantic.yaml",
      "segmentation/instance-map.yaml",
      "segmentation/instance-polygon.yaml",
      "segmentation/panoptic-map.yaml",
      "segmentation/panoptic-polygon.yaml",
      "keypoints/train.yaml",
      "trackingnet/set-train/train.yaml",
      "dota/set-train/train.yaml",
      "synthtext/set-train/train.yaml",
      "facade-paired/set-train/train.yaml",
      "facade-unpaired/set-train/train.yaml",
  };
  return files;
}

LibraryEnvironment library_env() {
  LibraryEnvironment env;
  env.search_paths.push_back(library_dir());
  return env;
}

CliEnvironment cli_env(std::vector<std::string> variables) {
  CliEnvironment env;
  env.variables = std::move(variables);
  env.default_library_dir = library_dir().string();
  return env;
}

// ------------------------------------------------------------ temp dirs

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const std::string leaf = "dsdl-test-" + std::to_string(rd()) + "-" +
                           std::to_string(counter.fetch_add(1));
  path_ = fs::temp_directory_path() / leaf;
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path TempDir::write(const std::string& name, const std::string& text) const {
  const fs::path p = path_ / name;
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

// ------------------------------------------------------------ pipeline

PipelineRun run_pipeline(const fs::path& file, const ValidateOptions& options) {
  PipelineRun run;
  try {
    run.doc = parse_document_file(file.string(), ParseOptions{false, file.string()});
  } catch (const Error& e) {
    run.diagnostics.push_back(e.diagnostic());
    return run;
  }
  run.resolved = resolve_schema(*run.doc, library_env());
  run.diagnostics = run.resolved.diagnostics;
  if (!run.resolved.ok() || !run.doc->data) return run;
  run.report = validate_dataset(*run.resolved.schema, *run.doc->data, file.parent_path(), options);
  for (const auto& d : run.report->diagnostics) run.diagnostics.push_back(d);
  return run;
}

std::size_t error_count(const std::vector<Diagnostic>& diags) {
  return static_cast<std::size_t>(std::count_if(
      diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::error; }));
}

std::string describe(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  for (const auto& d : diags) {
    out << to_string(d.severity) << " " << to_string(d.code) << " "
        << (d.path.empty() ? "-" : d.path) << " " << d.message << "\n";
  }
  return out.str();
}

Value export_document(const fs::path& file) {
  Value doc = load_file(file.string()).value;
  const fs::path dir = fs::absolute(file).parent_path();
  if (auto it = doc.find("$import"); it != doc.end() && it->is_array()) {
    for (auto& entry : *it) {
      if (!entry.is_string()) continue;
      const std::string name = entry.get<std::string>();
      if (find_library(name, dir, LibraryEnvironment{})) {
        entry = (dir / name).lexically_normal().string();
      }
    }
  }
  if (auto it = doc.find("data"); it != doc.end() && it->is_object()) {
    Value& data = *it;
    if (auto sp = data.find("sample-path");
        sp != data.end() && sp->is_string() && *sp != std::string(kLocalPath)) {
      data["samples"] = load_external_samples(sp->get<std::string>(), dir);
      data["sample-path"] = std::string(kLocalPath);
    }
    if (auto gp = data.find("global-info-path");
        gp != data.end() && gp->is_string() && *gp != std::string(kLocalPath)) {
      data["global-info"] = load_external_global_info(gp->get<std::string>(), dir);
      data["global-info-path"] = std::string(kLocalPath);
    }
  }
  return doc;
}

// ------------------------------------------------------------ mutations

const std::vector<MutationKind>& all_mutations() {
  static const std::vector<MutationKind> kinds = {
      MutationKind::delete_required_field, MutationKind::bbox_arity,
      MutationKind::label_out_of_range,    MutationKind::angle_out_of_range,
      MutationKind::unknown_import,        MutationKind::duplicate_definition,
  };
  return kinds;
}

std::string_view to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::delete_required_field:
      return "delete-required-field";
    case MutationKind::bbox_arity:
      return "bbox-arity";
    case MutationKind::label_out_of_range:
      return "label-out-of-range";
    case MutationKind::angle_out_of_range:
      return "angle-out-of-range";
    case MutationKind::unknown_import:
      return "unknown-import";
    case MutationKind::duplicate_definition:
      return "duplicate-definition";
  }
  return "?";
}

bool MutationResult::matched() const {
  if (observed.size() != 1) return false;
  const Diagnostic& d = observed.front();
  if (d.code != expected.code || d.severity != expected.severity || d.path != expected.path) {
    return false;
  }
  return placement != "duplicate" || later_definition_wins;
}

int expected_exit(MutationKind kind, bool strict) {
  switch (kind) {
    case MutationKind::delete_required_field:
    case MutationKind::duplicate_definition:
      return strict ? kExitErrors : kExitOk;
    default:
      return kExitErrors;
  }
}

namespace {

constexpr const char* kProbeStruct = "MutationProbeSample";
constexpr const char* kProbeDomain = "MutationProbeDom";
constexpr const char* kProbeDef = "MutationProbeDef";

struct Target {
  std::string path;
  const ConcreteType* type = nullptr;
};

std::optional<Target> find_first(const Value& raw, const ConcreteType& t, const std::string& path,
                                 ValueShape shape) {
  if (raw.is_null()) return std::nullopt;
  if (t.shape == shape) return Target{path, &t};
  if (t.shape == ValueShape::record && raw.is_object()) {
    for (const auto& f : t.fields) {
      auto it = raw.find(f.name);
      if (it == raw.end()) continue;
      if (auto hit = find_first(*it, *f.type, join_path(path, f.name), shape)) return hit;
    }
  }
  if (t.shape == ValueShape::list && raw.is_array() && t.element() != nullptr) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (auto hit = find_first(raw[i], *t.element(), join_path(path, i), shape)) return hit;
    }
  }
  return std::nullopt;
}

Value::json_pointer pointer_for(const std::string& data_path) {
  return Value::json_pointer("/data/" + data_path);
}

std::string sample_type_text(const Value& raw) {
  if (raw.is_string()) return raw.get<std::string>();
  return render_type_expression(parse_sample_type_spec(raw));
}

/// Wraps every sample as {base: sample}; sample 0 also gets `probe`.
void inject_probe(Value& doc, const std::string& probe_type, Value probe_value) {
  // Insert top-level keys before taking references into the document.
  if (!doc.contains("defs")) doc["defs"] = Value::object();
  Value& data = doc["data"];
  Value def = Value::object();
  def["$def"] = "struct";
  def["$fields"] = Value::object();
  def["$fields"]["base"] = sample_type_text(data["sample-type"]);
  def["$fields"]["probe"] = probe_type;
  def["$optional"] = Value::array({"probe"});
  doc["defs"][kProbeStruct] = std::move(def);
  data["sample-type"] = kProbeStruct;
  Value wrapped = Value::array();
  for (std::size_t i = 0; i < data["samples"].size(); ++i) {
    Value w = Value::object();
    w["base"] = data["samples"][i];
    if (i == 0) w["probe"] = probe_value;
    wrapped.push_back(std::move(w));
  }
  data["samples"] = std::move(wrapped);
}

std::string slug(const fs::path& file) {
  std::string s = file.lexically_relative(corpus_dir()).string();
  if (s.empty() || s.rfind("..", 0) == 0) s = file.filename().string();
  for (char& c : s) {
    if (c == '/' || c == '\\' || c == '.') c = '_';
  }
  return s;
}

}  // namespace

MutationResult apply_mutation(const fs::path& file, MutationKind kind, const TempDir& dir) {
  Value doc = export_document(file);
  const std::string stem = slug(file);
  const fs::path baseline_file = dir.write(stem + "-baseline.json", doc.dump(2));
  PipelineRun baseline = run_pipeline(baseline_file);
  if (!baseline.resolved.ok() || !baseline.resolved.schema->sample_type) {
    throw std::runtime_error("baseline of " + file.string() + " does not resolve:\n" +
                             describe(baseline.diagnostics));
  }
  const ResolvedSchema& schema = *baseline.resolved.schema;
  const ConcreteType& sample_type = *schema.sample_type;
  const Value& sample0 = doc["data"]["samples"].at(0);

  MutationResult res;
  res.placement = "native";
  switch (kind) {
    case MutationKind::delete_required_field: {
      const ConcreteField* victim = nullptr;
      for (const auto& f : sample_type.fields) {
        if (!f.optional && sample0.contains(f.name) && !sample0[f.name].is_null()) {
          victim = &f;
          break;
        }
      }
      if (victim == nullptr) throw std::runtime_error("no required field in " + file.string());
      res.expected = {Code::FIELD_MISSING, Severity::warning, "samples/0/" + victim->name};
      doc["data"]["samples"][0].erase(victim->name);
      break;
    }
    case MutationKind::bbox_arity: {
      if (auto hit = find_first(sample0, sample_type, "samples/0", ValueShape::bbox)) {
        doc[pointer_for(hit->path)].push_back(1.0);
        res.expected = {Code::ARITY, Severity::error, hit->path};
      } else {
        res.placement = "injected";
        inject_probe(doc, "BBox", Value::array({1, 2, 3, 4, 5}));
        res.expected = {Code::ARITY, Severity::error, "samples/0/probe"};
      }
      break;
    }
    case MutationKind::label_out_of_range: {
      auto hit = find_first(sample0, sample_type, "samples/0", ValueShape::label);
      if (hit && hit->type->domain() != nullptr) {
        doc[pointer_for(hit->path)] = hit->type->domain()->size() + 1;
        res.expected = {Code::CLASS_INDEX_RANGE, Severity::error, hit->path};
      } else {
        res.placement = "injected";
        const ClassDomain* dom = nullptr;
        for (const auto& e : schema.registry.entries()) {
          if (const auto* d = std::get_if<std::shared_ptr<const ClassDomain>>(&e.definition)) {
            dom = d->get();
            break;
          }
        }
        std::string dom_name;
        std::size_t size = 0;
        if (dom != nullptr) {
          dom_name = dom->name();
          size = dom->size();
        } else {
          if (!doc.contains("defs")) doc["defs"] = Value::object();
          doc["defs"][kProbeDomain] = {{"$def", "class_domain"},
                                       {"classes", Value::array({"first", "second"})}};
          dom_name = kProbeDomain;
          size = 2;
        }
        inject_probe(doc, "Label[dom=" + dom_name + "]", size + 1);
        res.expected = {Code::CLASS_INDEX_RANGE, Severity::error, "samples/0/probe"};
      }
      break;
    }
    case MutationKind::angle_out_of_range:
      res.placement = "injected";
      inject_probe(doc, "RotatedBBox[mode=\"xywht\", measure=\"degree\"]",
                   Value::array({10, 10, 4, 4, 200}));
      res.expected = {Code::RANGE, Severity::error, "samples/0/probe/4"};
      break;
    case MutationKind::unknown_import:
      if (!doc.contains("$import")) doc["$import"] = Value::array();
      doc["$import"].push_back("no-such-library");
      res.expected = {Code::IMPORT_NOT_FOUND, Severity::error, "$import"};
      break;
    case MutationKind::duplicate_definition: {
      res.placement = "duplicate";
      const char* head = "$dsdl-version: \"0.5.0\"\n\n";
      dir.write("dup_a.yaml", std::string(head) + kProbeDef +
                                  ":\n    $def: struct\n    $fields:\n        first: Int\n");
      dir.write("dup_b.yaml", std::string(head) + kProbeDef +
                                  ":\n    $def: struct\n    $fields:\n        second: Str\n");
      if (!doc.contains("$import")) doc["$import"] = Value::array();
      doc["$import"].push_back((dir.path() / "dup_a").string());
      doc["$import"].push_back((dir.path() / "dup_b").string());
      res.expected = {Code::IMPORT_OVERWRITE, Severity::warning, kProbeDef};
      break;
    }
  }

  res.mutated_file = dir.write(stem + "-" + std::string(to_string(kind)) + ".json", doc.dump(2));
  PipelineRun run = run_pipeline(res.mutated_file);
  for (const auto& d : run.diagnostics) {
    if (d.severity != Severity::note) res.observed.push_back(d);
  }
  if (kind == MutationKind::duplicate_definition && run.resolved.ok()) {
    const auto& reg = run.resolved.schema->registry;
    const StructClass* s = reg.find_struct(kProbeDef);
    const RegistryEntry* e = reg.find(kProbeDef);
    res.later_definition_wins = s != nullptr && e != nullptr && s->field("second") != nullptr &&
                                fs::path(e->provenance.source).filename() == "dup_b.yaml";
  }
  return res;
}

// ------------------------------------------------------------ generators

namespace {

std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string random_ident(std::mt19937& rng, std::size_t max_len) {
  static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
  static const std::string rest = first + "0123456789";
  while (true) {
    std::string s(1, first[pick(rng, 0, first.size() - 1)]);
    const std::size_t n = pick(rng, 0, max_len - 1);
    for (std::size_t i = 0; i < n; ++i) s += rest[pick(rng, 0, rest.size() - 1)];
    if (s != "true" && s != "false") return s;
  }
}

std::string random_string_literal(std::mt19937& rng) {
  static const std::string chars = "abcXYZ019 _-%:./\"'\\[],=$";
  std::string s;
  const std::size_t n = pick(rng, 0, 8);
  for (std::size_t i = 0; i < n; ++i) s += chars[pick(rng, 0, chars.size() - 1)];
  return s;
}

std::string digits(std::mt19937& rng) {
  std::string s;
  const std::size_t n = pick(rng, 1, 4);
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + pick(rng, 0, 9));
  return s;
}

std::string random_number(std::mt19937& rng) {
  std::string s;
  switch (pick(rng, 0, 2)) {
    case 0:
      break;
    case 1:
      s += '-';
      break;
    default:
      s += '+';
  }
  switch (pick(rng, 0, 3)) {
    case 0:
      s += digits(rng);
      break;
    case 1:
      s += digits(rng) + "." + digits(rng);
      break;
    case 2:
      s += "." + digits(rng);
      break;
    default:
      s += digits(rng) + ".";
  }
  if (pick(rng, 0, 4) == 0) s += std::string(pick(rng, 0, 1) ? "e" : "E-") + digits(rng);
  return s;
}

TypeExpr gen_type(std::mt19937& rng, int depth_left) {
  TypeExpr t;
  t.head = random_ident(rng, 10);
  if (depth_left <= 1) return t;
  const std::size_t nargs = pick(rng, 0, 3);
  const std::size_t npos = pick(rng, 0, nargs);
  for (std::size_t i = 0; i < nargs; ++i) {
    TypeArg arg;
    if (i >= npos) arg.key = random_ident(rng, 6);
    switch (pick(rng, 0, 5)) {
      case 0:
      case 1:
        arg.value = Indirect<TypeExpr>(gen_type(rng, depth_left - 1));
        break;
      case 2:
        arg.value = ParamRef{random_ident(rng, 6)};
        break;
      case 3:
        arg.value = StringLit{random_string_literal(rng)};
        break;
      case 4:
        arg.value = NumberLit{random_number(rng)};
        break;
      default:
        arg.value = BoolLit{pick(rng, 0, 1) == 1};
    }
    t.args.push_back(std::move(arg));
  }
  return t;
}

}  // namespace

TypeExpr random_type_expr(std::mt19937& rng, int max_depth) {
  return gen_type(rng, static_cast<int>(pick(rng, 1, static_cast<std::size_t>(max_depth))));
}

std::vector<std::size_t> structural_positions(const std::string& text, std::string_view chars) {
  std::vector<std::size_t> out;
  char quote = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == '\\' && i + 1 < text.size() && (text[i + 1] == '\\' || text[i + 1] == quote)) {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (chars.find(c) != std::string_view::npos) {
      out.push_back(i);
    }
  }
  return out;
}

std::string inject_grammar_fault(const std::string& text, std::mt19937& rng) {
  const auto opens = structural_positions(text, "[");
  const auto closes = structural_positions(text, "]");
  const auto commas = structural_positions(text, ",");
  std::vector<int> faults = {1, 5};
  if (!closes.empty()) faults.insert(faults.end(), {0, 2});
  if (!opens.empty()) faults.insert(faults.end(), {3, 4});
  if (!commas.empty()) faults.push_back(6);
  auto any = [&rng](const std::vector<std::size_t>& v) { return v[pick(rng, 0, v.size() - 1)]; };
  std::string s = text;
  switch (faults[pick(rng, 0, faults.size() - 1)]) {
    case 0:  // drop a closing bracket
      s.erase(any(closes), 1);
      break;
    case 1:  // extra closing bracket
      s += ']';
      break;
    case 2:  // trailing comma
      s.insert(any(closes), ",");
      break;
    case 3:  // empty leading argument
      s.insert(any(opens) + 1, ",");
      break;
    case 4:  // opening bracket turned into a comma
      s[any(opens)] = ',';
      break;
    case 5:  // dangling opening bracket
      s += '[';
      break;
    default:  // doubled comma
      s.insert(any(commas), ",");
  }
  return s;
}

namespace {

std::string class_name(std::mt19937& rng) {
  static const std::string first = "abcdefghijklmnopqrstuvwxyz";
  static const std::string rest = first + "0123456789_";
  std::string s(1, first[pick(rng, 0, first.size() - 1)]);
  const std::size_t n = pick(rng, 0, 5);
  for (std::size_t i = 0; i < n; ++i) s += rest[pick(rng, 0, rest.size() - 1)];
  return s;
}

std::vector<std::string> unique_names(std::mt19937& rng, std::size_t n) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string s = class_name(rng);
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

void grow(std::mt19937& rng, const std::string& prefix, std::size_t levels_left,
          std::size_t budget, std::vector<std::string>& out) {
  const std::size_t fan = pick(rng, 1, prefix.empty() ? 5 : 4);
  for (const auto& name : unique_names(rng, fan)) {
    if (out.size() >= budget) return;
    const std::string path = prefix.empty() ? name : prefix + "." + name;
    if (levels_left == 1) {
      out.push_back(path);
    } else {
      grow(rng, path, levels_left - 1, budget, out);
    }
  }
}

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = s.find('.', start);
    out.push_back(s.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
    if (dot == std::string::npos) return out;
    start = dot + 1;
  }
}

std::vector<std::string> children_of(const std::vector<std::string>& classes,
                                     const std::string& prefix) {
  std::vector<std::string> kids;
  const std::size_t depth = prefix.empty() ? 0 : split_dots(prefix).size();
  for (const auto& c : classes) {
    const auto segs = split_dots(c);
    if (segs.size() <= depth) continue;
    std::string p;
    for (std::size_t k = 0; k < depth; ++k) p += (k ? "." : "") + segs[k];
    if (p != prefix) continue;
    if (std::find(kids.begin(), kids.end(), segs[depth]) == kids.end()) {
      kids.push_back(segs[depth]);
    }
  }
  return kids;
}

}  // namespace

RandomDomain random_domain(std::mt19937& rng, const std::string& name) {
  RandomDomain d;
  d.name = name;
  d.hierarchical = pick(rng, 0, 1) == 1;
  if (!d.hierarchical) {
    d.classes = unique_names(rng, pick(rng, 1, 50));
    return d;
  }
  const std::size_t levels = pick(rng, 2, 3);
  grow(rng, "", levels, 50, d.classes);
  std::shuffle(d.classes.begin(), d.classes.end(), rng);
  return d;
}

Value domain_definition(const RandomDomain& d) {
  Value v = Value::object();
  v["$def"] = "class_domain";
  v["classes"] = Value::array();
  for (const auto& c : d.classes) v["classes"].push_back(c);
  return v;
}

std::size_t oracle_flat_index(const std::vector<std::string>& classes, const std::string& path) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == path) return i + 1;
  }
  return 0;
}

std::vector<std::size_t> oracle_index_path(const std::vector<std::string>& classes,
                                           std::size_t flat) {
  const auto segs = split_dots(classes.at(flat - 1));
  std::vector<std::size_t> out;
  std::string prefix;
  for (const auto& seg : segs) {
    const auto kids = children_of(classes, prefix);
    out.push_back(static_cast<std::size_t>(std::find(kids.begin(), kids.end(), seg) -
                                           kids.begin()) +
                  1);
    prefix += (prefix.empty() ? "" : ".") + seg;
  }
  return out;
}

std::size_t oracle_child_count(const std::vector<std::string>& classes,
                               const std::string& prefix) {
  return children_of(classes, prefix).size();
}

RandomGraph random_graph(std::mt19937& rng, std::size_t max_nodes) {
  static const double densities[] = {0.05, 0.12, 0.25, 0.4};
  RandomGraph g;
  g.size = pick(rng, 1, max_nodes);
  const double p = densities[pick(rng, 0, 3)];
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution domain(0.2);
  g.is_domain.resize(g.size);
  g.edges.resize(g.size);
  g.spelling.resize(g.size);
  for (std::size_t i = 0; i < g.size; ++i) g.is_domain[i] = domain(rng);
  for (std::size_t i = 0; i < g.size; ++i) {
    if (g.is_domain[i]) continue;
    for (std::size_t j = 0; j < g.size; ++j) {
      if (edge(rng)) {
        g.edges[i].push_back(j);
        g.spelling[i].push_back(static_cast<int>(pick(rng, 0, 2)));
      }
    }
  }
  return g;
}

std::string node_name(const RandomGraph& g, std::size_t i) {
  return (g.is_domain[i] ? "D" : "S") + std::to_string(i);
}

std::vector<std::pair<std::string, Value>> graph_definitions(const RandomGraph& g) {
  std::vector<std::pair<std::string, Value>> defs;
  for (std::size_t i = 0; i < g.size; ++i) {
    Value v = Value::object();
    if (g.is_domain[i]) {
      v["$def"] = "class_domain";
      v["classes"] = Value::array({"a", "b"});
    } else {
      v["$def"] = "struct";
      v["$fields"] = Value::object();
      v["$fields"]["x"] = "Int";
      for (std::size_t k = 0; k < g.edges[i].size(); ++k) {
        const std::size_t j = g.edges[i][k];
        const std::string target = node_name(g, j);
        std::string type;
        if (g.is_domain[j]) {
          type = "Label[dom=" + target + "]";
        } else if (g.spelling[i][k] == 0) {
          type = target;
        } else if (g.spelling[i][k] == 1) {
          type = "List[" + target + "]";
        } else {
          type = "List[etype=" + target + "]";
        }
        v["$fields"]["f" + std::to_string(k)] = type;
      }
    }
    defs.emplace_back(node_name(g, i), std::move(v));
  }
  return defs;
}

bool oracle_has_cycle(const RandomGraph& g) {
  std::vector<bool> on_path(g.size, false);
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t at) {
    for (std::size_t next : g.edges[at]) {
      if (next == start) return true;
      if (on_path[next]) continue;
      on_path[next] = true;
      const bool found = walk(start, next);
      on_path[next] = false;
      if (found) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < g.size; ++s) {
    on_path.assign(g.size, false);
    on_path[s] = true;
    if (walk(s, s)) return true;
  }
  return false;
}

bool oracle_is_cycle(const RandomGraph& g, const std::vector<std::string>& path) {
  if (path.size() < 2 || path.front() != path.back()) return false;
  auto index = [&g](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < g.size; ++i) {
      if (node_name(g, i) == name) return i;
    }
    return std::nullopt;
  };
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto a = index(path[k]);
    auto b = index(path[k + 1]);
    if (!a || !b) return false;
    const auto& out = g.edges[*a];
    if (std::find(out.begin(), out.end(), *b) == out.end()) return false;
  }
  return true;
}

std::string random_locator_text(std::mt19937& rng) {
  static const std::string common = "$:/.\\_-ab19 ";
  std::string s;
  switch (pick(rng, 0, 3)) {
    case 0:
      s = "::";
      break;
    case 1:
      s = "$";
      break;
    default:
      break;
  }
  const std::size_t n = pick(rng, s.empty() ? 1 : 0, 32);
  for (std::size_t i = 0; i < n; ++i) {
    if (pick(rng, 0, 3) == 0) {
      s += static_cast<char>(pick(rng, 0, 255));
    } else {
      s += common[pick(rng, 0, common.size() - 1)];
    }
  }
  return s;
}

}  // namespace dsdl::testkit
