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

#include "dsdl/value.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "dsdl/diagnostic.hpp"

namespace dsdl {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// ---------------------------------------------------------------- JSON

struct JsonFrame {
  bool is_object = false;
  std::string segment;
  std::set<std::string> keys;
  std::string key;
  std::size_t next_index = 0;
};

std::string frames_path(const std::vector<JsonFrame>& frames) {
  std::string path;
  for (std::size_t i = 1; i < frames.size(); ++i) {
    path = join_path(path, frames[i].segment);
  }
  return path;
}

LoadedText load_json(std::string_view text, std::string_view source) {
  LoadedText out;
  out.format = TextFormat::json;
  std::vector<JsonFrame> frames;

  auto child_segment = [&frames]() -> std::string {
    if (frames.empty()) return {};
    auto& parent = frames.back();
    if (parent.is_object) return parent.key;
    return std::to_string(parent.next_index++);
  };

  Value::parser_callback_t cb = [&](int /*depth*/, Value::parse_event_t event,
                                    Value& parsed) -> bool {
    switch (event) {
      case Value::parse_event_t::object_start:
      case Value::parse_event_t::array_start: {
        JsonFrame f;
        f.is_object = event == Value::parse_event_t::object_start;
        f.segment = child_segment();
        frames.push_back(std::move(f));
        break;
      }
      case Value::parse_event_t::object_end:
      case Value::parse_event_t::array_end:
        if (!frames.empty()) frames.pop_back();
        break;
      case Value::parse_event_t::key: {
        auto& top = frames.back();
        top.key = parsed.get<std::string>();
        if (!top.keys.insert(top.key).second) {
          out.duplicates.push_back({frames_path(frames), top.key});
        }
        break;
      }
      case Value::parse_event_t::value:
        if (!frames.empty() && !frames.back().is_object) {
          ++frames.back().next_index;
        }
        break;
    }
    return true;
  };

  try {
    out.value = Value::parse(text.begin(), text.end(), cb);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError(line, column, e.what(), std::string(source));
  }
  return out;
}

// ---------------------------------------------------------------- YAML

const std::regex& int_re() {
  static const std::regex re(R"([-+]?[0-9]+)");
  return re;
}
const std::regex& float_re() {
  static const std::regex re(
      R"([-+]?(\.[0-9]+|[0-9]+(\.[0-9]*)?)([eE][-+]?[0-9]+)?)");
  return re;
}

Value resolve_plain_scalar(const std::string& s) {
  if (s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL") {
    return Value(nullptr);
  }
  if (s == "true" || s == "True" || s == "TRUE") return Value(true);
  if (s == "false" || s == "False" || s == "FALSE") return Value(false);
  if (std::regex_match(s, int_re())) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    if (*first != '-') {
      std::uint64_t u = 0;
      auto r = std::from_chars(first, last, u);
      if (r.ec == std::errc() && r.ptr == last) return Value(u);
    } else {
      std::int64_t i = 0;
      auto r = std::from_chars(first, last, i);
      if (r.ec == std::errc() && r.ptr == last) return Value(i);
    }
    return Value(std::strtod(s.c_str(), nullptr));
  }
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'o')) {
    const int base = s[1] == 'x' ? 16 : 8;
    std::uint64_t u = 0;
    auto r = std::from_chars(s.data() + 2, s.data() + s.size(), u, base);
    if (r.ec == std::errc() && r.ptr == s.data() + s.size()) return Value(u);
  }
  if (std::regex_match(s, float_re())) {
    return Value(std::strtod(s.c_str(), nullptr));
  }
  if (s == ".inf" || s == ".Inf" || s == ".INF" || s == "+.inf") {
    return Value(std::numeric_limits<double>::infinity());
  }
  if (s == "-.inf" || s == "-.Inf" || s == "-.INF") {
    return Value(-std::numeric_limits<double>::infinity());
  }
  if (s == ".nan" || s == ".NaN" || s == ".NAN") {
    return Value(std::numeric_limits<double>::quiet_NaN());
  }
  return Value(s);
}

Value convert_yaml(const YAML::Node& node, const std::string& path,
                   std::vector<DuplicateKey>& dups) {
  switch (node.Type()) {
    case YAML::NodeType::Undefined:
    case YAML::NodeType::Null:
      return Value(nullptr);
    case YAML::NodeType::Scalar:
      if (node.Tag() == "!" || node.Tag() == "tag:yaml.org,2002:str") {
        return Value(node.Scalar());
      }
      return resolve_plain_scalar(node.Scalar());
    case YAML::NodeType::Sequence: {
      Value arr = Value::array();
      std::size_t i = 0;
      for (const auto& item : node) {
        arr.push_back(convert_yaml(item, join_path(path, i), dups));
        ++i;
      }
      return arr;
    }
    case YAML::NodeType::Map: {
      Value obj = Value::object();
      for (const auto& kv : node) {
        std::string key;
        if (kv.first.IsScalar()) {
          key = kv.first.Scalar();
        } else {
          YAML::Emitter em;
          em << YAML::Flow << kv.first;
          key = em.c_str();
        }
        if (obj.contains(key)) {
          dups.push_back({path, key});
        }
        obj[key] = convert_yaml(kv.second, join_path(path, key), dups);
      }
      return obj;
    }
  }
  return Value(nullptr);
}

LoadedText load_yaml(std::string_view text, std::string_view source) {
  LoadedText out;
  out.format = TextFormat::yaml;
  try {
    YAML::Node root = YAML::Load(std::string(text));
    out.value = convert_yaml(root, {}, out.duplicates);
  } catch (const YAML::Exception& e) {
    throw SyntaxError(static_cast<std::size_t>(e.mark.line) + 1,
                      static_cast<std::size_t>(e.mark.column) + 1, e.msg,
                      std::string(source));
  }
  return out;
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[';
  }
  return false;
}

}  // namespace

LoadedText load_text(std::string_view text, TextFormat format,
                     std::string_view source_name) {
  switch (format) {
    case TextFormat::json:
      return load_json(text, source_name);
    case TextFormat::yaml:
      return load_yaml(text, source_name);
    case TextFormat::automatic:
      break;
  }
  std::optional<SyntaxError> json_error;
  try {
    return load_json(text, source_name);
  } catch (const SyntaxError& e) {
    json_error = e;
  }
  try {
    return load_yaml(text, source_name);
  } catch (const SyntaxError&) {
    if (looks_like_json(text)) throw *json_error;
    throw;
  }
}

LoadedText load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Code::FILE_NOT_FOUND, {}, "cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  TextFormat fmt = TextFormat::automatic;
  auto ends_with = [&path](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) {
    fmt = TextFormat::json;
  } else if (ends_with(".yaml") || ends_with(".yml")) {
    fmt = TextFormat::yaml;
  }
  return load_text(ss.str(), fmt, path);
}

}  // namespace dsdl
