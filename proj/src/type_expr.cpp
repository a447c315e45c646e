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

#include "dsdl/type_expr.hpp"

#include <cctype>

#include "dsdl/diagnostic.hpp"

namespace dsdl {

namespace {

constexpr std::size_t kMaxDepth = 256;

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TypeExpr parse_top() {
    skip_ws();
    TypeExpr t = parse_type(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw GrammarError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string parse_ident() {
    if (at_end() || !ident_start(peek())) fail("expected identifier");
    const std::size_t begin = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  TypeExpr parse_type(std::size_t depth) {
    if (depth > kMaxDepth) fail("type expression nested too deeply");
    TypeExpr t;
    t.head = parse_ident();
    skip_ws();
    if (peek() != '[') return t;
    ++pos_;
    bool seen_keyed = false;
    while (true) {
      skip_ws();
      if (peek() == ']') {
        fail(t.args.empty() ? "empty argument list" : "trailing comma");
      }
      const std::size_t arg_begin = pos_;
      TypeArg arg;
      if (ident_start(peek())) {
        const std::size_t save = pos_;
        std::string ident = parse_ident();
        skip_ws();
        if (peek() == '=') {
          ++pos_;
          arg.key = std::move(ident);
        } else {
          pos_ = save;
        }
      }
      if (arg.key) {
        seen_keyed = true;
      } else if (seen_keyed) {
        pos_ = arg_begin;
        fail("positional argument after keyed argument");
      }
      skip_ws();
      arg.value = parse_value(depth + 1);
      t.args.push_back(std::move(arg));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail(at_end() ? "unbalanced '['" : "expected ',' or ']'");
    }
    return t;
  }

  ArgValue parse_value(std::size_t depth) {
    if (at_end()) fail("expected argument value");
    const char c = peek();
    if (c == '$') {
      ++pos_;
      return ParamRef{parse_ident()};
    }
    if (c == '"' || c == '\'') return parse_string();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
        c == '.') {
      return parse_number();
    }
    if (ident_start(c)) {
      const std::size_t save = pos_;
      std::string ident = parse_ident();
      std::size_t after = pos_;
      skip_ws();
      const bool bracket = peek() == '[';
      pos_ = after;
      if (!bracket && (ident == "true" || ident == "false")) {
        return BoolLit{ident == "true"};
      }
      pos_ = save;
      return Indirect<TypeExpr>(parse_type(depth));
    }
    fail("expected argument value");
  }

  StringLit parse_string() {
    const char quote = peek();
    ++pos_;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      char c = text_[pos_++];
      if (c == quote) break;
      if (c == '\\' && !at_end()) {
        char n = text_[pos_];
        if (n == '\\' || n == quote) {
          out += n;
          ++pos_;
          continue;
        }
      }
      out += c;
    }
    return StringLit{std::move(out)};
  }

  NumberLit parse_number() {
    const std::size_t begin = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      ++digits;
    }
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
        ++digits;
      }
    }
    if (digits == 0) {
      pos_ = begin;
      fail("malformed number");
    }
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '-' || peek() == '+') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("malformed exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return NumberLit{std::string(text_.substr(begin, pos_ - begin))};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const TypeExpr& t, std::string& out);

void render_value_into(const ArgValue& v, std::string& out) {
  std::visit(
      [&out](const auto& x) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Indirect<TypeExpr>>) {
          render_into(*x, out);
        } else if constexpr (std::is_same_v<X, ParamRef>) {
          out += '$';
          out += x.name;
        } else if constexpr (std::is_same_v<X, StringLit>) {
          out += '"';
          for (char c : x.value) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
          }
          out += '"';
        } else if constexpr (std::is_same_v<X, NumberLit>) {
          out += x.text;
        } else {
          out += x.value ? "true" : "false";
        }
      },
      v);
}

void render_into(const TypeExpr& t, std::string& out) {
  out += t.head;
  if (t.args.empty()) return;
  out += '[';
  bool first = true;
  for (const auto& arg : t.args) {
    if (!first) out += ',';
    first = false;
    if (arg.key) {
      out += *arg.key;
      out += '=';
    }
    render_value_into(arg.value, out);
  }
  out += ']';
}

ArgValue spec_value(const Value& v, const std::string& key);

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

TypeExpr parse_type_expression(std::string_view text) {
  return Parser(text).parse_top();
}

std::string render_type_expression(const TypeExpr& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::string render_arg_value(const ArgValue& v) {
  std::string out;
  render_value_into(v, out);
  return out;
}

namespace {

ArgValue spec_value(const Value& v, const std::string& key) {
  if (v.is_boolean()) return BoolLit{v.get<bool>()};
  if (v.is_number()) return NumberLit{v.dump()};
  if (v.is_object()) return Indirect<TypeExpr>(parse_sample_type_spec(v));
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.front() == '$' && is_identifier(s.substr(1))) {
      return ParamRef{s.substr(1)};
    }
    try {
      return Indirect<TypeExpr>(parse_type_expression(s));
    } catch (const GrammarError&) {
      return StringLit{s};
    }
  }
  throw Error(Code::GRAMMAR, key,
              "type parameter '" + key + "' must be a scalar or a type mapping");
}

}  // namespace

TypeExpr parse_sample_type_spec(const Value& raw) {
  if (raw.is_string()) {
    return parse_type_expression(raw.get_ref<const std::string&>());
  }
  if (!raw.is_object()) {
    throw Error(Code::GRAMMAR, {},
                "type specification must be a string or a mapping");
  }
  auto it = raw.find("$type");
  if (it == raw.end()) {
    throw Error(Code::MISSING_TYPE_KEY, {},
                "type mapping has no '$type' key");
  }
  if (!it->is_string()) {
    throw Error(Code::GRAMMAR, "$type", "'$type' must be a string");
  }
  TypeExpr t = parse_type_expression(it->get_ref<const std::string&>());
  for (auto kv = raw.begin(); kv != raw.end(); ++kv) {
    if (kv.key() == "$type") continue;
    t.args.push_back(TypeArg{kv.key(), spec_value(kv.value(), kv.key())});
  }
  return t;
}

}  // namespace dsdl
