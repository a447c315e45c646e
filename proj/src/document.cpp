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

#include "dsdl/document.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace dsdl {

namespace {

bool is_definition_body(const Value& v) {
  return v.is_object() && v.contains("$def");
}

std::string version_text(const Value& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  return {};
}

std::string require_string(const Value& v, const std::string& path) {
  if (!v.is_string()) {
    throw Error(Code::MALFORMED_DATA_SECTION, path,
                "'" + path + "' must be a string");
  }
  return v.get<std::string>();
}

RawDataSection parse_data_section(const Value& data,
                                  std::vector<Diagnostic>& warnings) {
  if (!data.is_object()) {
    throw Error(Code::MALFORMED_DATA_SECTION, "data",
                "the data section must be a mapping");
  }
  RawDataSection out;
  for (auto it = data.begin(); it != data.end(); ++it) {
    const std::string& key = it.key();
    const std::string path = join_path("data", key);
    if (key == "sample-type") {
      out.sample_type = it.value();
    } else if (key == "sample-path") {
      out.sample_path = require_string(it.value(), path);
    } else if (key == "samples") {
      out.samples = it.value();
    } else if (key == "global-info-type") {
      out.global_info_type = it.value();
    } else if (key == "global-info-path") {
      out.global_info_path = require_string(it.value(), path);
    } else if (key == "global-info") {
      out.global_info = it.value();
    } else {
      warnings.push_back(make_warning(Code::UNKNOWN_SECTION, path,
                                      "unknown data-section key '" + key + "'"));
    }
  }
  if (out.sample_path.empty()) {
    throw Error(Code::MALFORMED_DATA_SECTION, "data/sample-path",
                "sample-path must not be empty");
  }
  if (out.sample_path == kLocalPath && !out.samples) {
    throw Error(Code::MALFORMED_DATA_SECTION, "data/samples",
                "sample-path is $local but no samples are given");
  }
  if (out.global_info_type && !out.global_info_path && !out.global_info) {
    throw Error(Code::MALFORMED_DATA_SECTION, "data/global-info",
                "global-info-type is given but neither global-info nor "
                "global-info-path");
  }
  if (out.global_info_path && *out.global_info_path == kLocalPath &&
      !out.global_info) {
    throw Error(Code::MALFORMED_DATA_SECTION, "data/global-info",
                "global-info-path is $local but no global-info is given");
  }
  return out;
}

}  // namespace

bool is_supported_version(std::string_view version) {
  static const std::regex re(R"(0\.5(\.[0-9]+)?)");
  return std::regex_match(version.begin(), version.end(), re);
}

RawDocument document_from_value(const LoadedText& loaded,
                                const ParseOptions& options) {
  const Value& root = loaded.value;
  if (!root.is_object()) {
    throw Error(Code::SYNTAX_ERROR, {}, "document root must be a mapping");
  }
  for (const auto& dup : loaded.duplicates) {
    const bool def_level =
        dup.parent_path == "defs" ||
        (dup.parent_path.empty() && dup.key.rfind('$', 0) != 0 &&
         dup.key != "meta" && dup.key != "data");
    if (def_level) {
      throw Error(Code::DUPLICATE_DEF, join_path(dup.parent_path, dup.key),
                  "definition '" + dup.key + "' appears more than once");
    }
    throw Error(Code::DUPLICATE_KEY, join_path(dup.parent_path, dup.key),
                "key '" + dup.key + "' appears more than once");
  }

  RawDocument doc;
  doc.source = options.source_name;

  auto version = root.find("$dsdl-version");
  if (version == root.end() || version_text(*version).empty()) {
    throw Error(Code::VERSION_MISSING, "$dsdl-version",
                "the $dsdl-version header is required");
  }
  doc.dsdl_version = version_text(*version);
  if (!options.allow_any_version && !is_supported_version(doc.dsdl_version)) {
    throw Error(Code::VERSION_UNSUPPORTED, "$dsdl-version",
                "unsupported DSDL version '" + doc.dsdl_version +
                    "' (accepted: 0.5.x)");
  }

  std::set<std::string> def_names;
  auto add_def = [&](const std::string& name, const Value& body,
                     const std::string& path) {
    if (!def_names.insert(name).second) {
      throw Error(Code::DUPLICATE_DEF, path,
                  "definition '" + name + "' appears more than once");
    }
    doc.defs.emplace_back(name, body);
  };

  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    const Value& v = it.value();
    if (key == "$dsdl-version") continue;
    if (key == "$import") {
      if (v.is_string()) {
        doc.imports.push_back(v.get<std::string>());
      } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i].is_string() || v[i].get_ref<const std::string&>().empty()) {
            throw Error(Code::SYNTAX_ERROR, join_path("$import", i),
                        "import entries must be non-empty strings");
          }
          doc.imports.push_back(v[i].get<std::string>());
        }
      } else if (!v.is_null()) {
        throw Error(Code::SYNTAX_ERROR, "$import",
                    "$import must be a list of library names");
      }
      continue;
    }
    if (!key.empty() && key.front() == '$') {
      throw Error(Code::UNKNOWN_DIRECTIVE, key,
                  "'" + key + "' uses the reserved '$' prefix");
    }
    if (key == "meta") {
      if (v.is_null()) continue;
      if (!v.is_object()) {
        throw Error(Code::SYNTAX_ERROR, "meta", "meta must be a mapping");
      }
      doc.meta = v;
    } else if (key == "defs") {
      if (v.is_null()) continue;
      if (!v.is_object()) {
        throw Error(Code::SYNTAX_ERROR, "defs", "defs must be a mapping");
      }
      for (auto d = v.begin(); d != v.end(); ++d) {
        add_def(d.key(), d.value(), join_path("defs", d.key()));
      }
    } else if (key == "data") {
      doc.data = parse_data_section(v, doc.warnings);
    } else if (is_definition_body(v)) {
      add_def(key, v, key);
    } else {
      doc.warnings.push_back(make_warning(
          Code::UNKNOWN_SECTION, key, "unknown top-level key '" + key + "'"));
    }
  }
  for (auto& w : doc.warnings) w.source = doc.source;
  return doc;
}

RawDocument parse_document(std::string_view text, TextFormat format,
                           const ParseOptions& options) {
  return document_from_value(load_text(text, format, options.source_name),
                             options);
}

RawDocument parse_document_file(const std::string& path,
                                const ParseOptions& options) {
  ParseOptions o = options;
  if (o.source_name.empty()) o.source_name = path;
  LoadedText loaded = load_file(path);
  try {
    return document_from_value(loaded, o);
  } catch (Error& e) {
    Diagnostic d = e.diagnostic();
    if (d.source.empty()) d.source = path;
    throw Error(std::move(d));
  }
}

}  // namespace dsdl
