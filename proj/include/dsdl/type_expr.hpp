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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsdl/indirect.hpp"
#include "dsdl/value.hpp"

namespace dsdl {

struct TypeExpr;

/// `$name` inside a parametric struct body.
struct ParamRef {
  std::string name;
  bool operator==(const ParamRef&) const = default;
};

struct StringLit {
  std::string value;
  bool operator==(const StringLit&) const = default;
};

/// Kept as the exact decimal text; converted only where a number is needed.
struct NumberLit {
  std::string text;
  bool operator==(const NumberLit&) const = default;
};

struct BoolLit {
  bool value = false;
  bool operator==(const BoolLit&) const = default;
};

using ArgValue =
    std::variant<Indirect<TypeExpr>, ParamRef, StringLit, NumberLit, BoolLit>;

struct TypeArg {
  std::optional<std::string> key;  // empty for positional arguments
  ArgValue value;
  bool operator==(const TypeArg&) const = default;
};

/// `Head[arg, key=arg, ...]`
struct TypeExpr {
  std::string head;
  std::vector<TypeArg> args;

  bool operator==(const TypeExpr&) const = default;
};

bool is_identifier(std::string_view s);

/// Grammar:
///   TypeExpr := Ident ('[' Arg (',' Arg)* ']')?
///   Arg      := (Ident '=')? Value
///   Value    := TypeExpr | '$' Ident | string | number | bool
/// Whitespace between tokens is ignored. Throws GrammarError.
TypeExpr parse_type_expression(std::string_view text);

/// Canonical text: no extra whitespace, `"`-quoted strings. Emits exactly the
/// arguments held by the AST (positional stays positional).
std::string render_type_expression(const TypeExpr& t);
std::string render_arg_value(const ArgValue& v);

/// Accepts either the string form or the mapping form `{$type: N, k: v}`.
/// Throws Error(MISSING_TYPE_KEY) or GrammarError.
TypeExpr parse_sample_type_spec(const Value& raw);

}  // namespace dsdl
