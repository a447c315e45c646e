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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "dsdl/type_expr.hpp"
#include "testkit.hpp"

namespace dsdl {
namespace {

const TypeExpr& type_arg(const TypeArg& a) {
  const auto* p = std::get_if<Indirect<TypeExpr>>(&a.value);
  if (p == nullptr) throw std::runtime_error("argument is not a type");
  return **p;
}

std::size_t grammar_offset(std::string_view text) {
  try {
    parse_type_expression(text);
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.code(), Code::GRAMMAR);
    return e.offset();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

TEST(TypeExpr, BareHead) {
  TypeExpr t = parse_type_expression("Image");
  EXPECT_EQ(t.head, "Image");
  EXPECT_TRUE(t.args.empty());
}

TEST(TypeExpr, KeyedTypeArgument) {
  TypeExpr t = parse_type_expression("Label[dom=MyClassDom]");
  EXPECT_EQ(t.head, "Label");
  ASSERT_EQ(t.args.size(), 1u);
  EXPECT_EQ(t.args[0].key, "dom");
  EXPECT_EQ(type_arg(t.args[0]).head, "MyClassDom");
  EXPECT_TRUE(type_arg(t.args[0]).args.empty());
}

TEST(TypeExpr, NestedParamReference) {
  TypeExpr t = parse_type_expression("List[etype=LocalObjectEntry[cdom=$cdom]]");
  EXPECT_EQ(t.head, "List");
  ASSERT_EQ(t.args.size(), 1u);
  EXPECT_EQ(t.args[0].key, "etype");
  const TypeExpr& inner = type_arg(t.args[0]);
  EXPECT_EQ(inner.head, "LocalObjectEntry");
  ASSERT_EQ(inner.args.size(), 1u);
  EXPECT_EQ(inner.args[0].key, "cdom");
  EXPECT_EQ(std::get<ParamRef>(inner.args[0].value), ParamRef{"cdom"});
}

TEST(TypeExpr, StringArgument) {
  TypeExpr t = parse_type_expression("Time[fmt=\"%H:%M\"]");
  EXPECT_EQ(t.head, "Time");
  ASSERT_EQ(t.args.size(), 1u);
  EXPECT_EQ(t.args[0].key, "fmt");
  EXPECT_EQ(std::get<StringLit>(t.args[0].value), StringLit{"%H:%M"});
}

TEST(TypeExpr, NumberAndBoolArguments) {
  TypeExpr t = parse_type_expression("T[7, a=-1.5e3, b=true, c=false]");
  ASSERT_EQ(t.args.size(), 4u);
  EXPECT_FALSE(t.args[0].key);
  EXPECT_EQ(std::get<NumberLit>(t.args[0].value), NumberLit{"7"});
  EXPECT_EQ(std::get<NumberLit>(t.args[1].value), NumberLit{"-1.5e3"});
  EXPECT_EQ(std::get<BoolLit>(t.args[2].value), BoolLit{true});
  EXPECT_EQ(std::get<BoolLit>(t.args[3].value), BoolLit{false});
}

TEST(TypeExpr, WhitespaceIsIgnored) {
  EXPECT_EQ(parse_type_expression("  List[ etype = Int , ordered = true ] "),
            parse_type_expression("List[etype=Int,ordered=true]"));
}

TEST(TypeExpr, UnbalancedBracketOffset) { EXPECT_EQ(grammar_offset("List[Int"), 8u); }

TEST(TypeExpr, GrammarFaults) {
  grammar_offset("");
  grammar_offset("T[]");
  grammar_offset("T[a,]");
  grammar_offset("T[a=Int, Str]");
  grammar_offset("T[Int]]");
  grammar_offset("T[[Int]");
  grammar_offset("T[,a]");
  grammar_offset("T[a=]");
  grammar_offset("T[fmt=\"abc]");
  grammar_offset("1abc");
}

TEST(TypeExpr, RenderBare) { EXPECT_EQ(render_type_expression(TypeExpr{"Int", {}}), "Int"); }

TEST(TypeExpr, RenderKeepsPositional) {
  EXPECT_EQ(render_type_expression(parse_type_expression("List[ Int ]")), "List[Int]");
}

TEST(TypeExpr, RenderParamRef) {
  EXPECT_EQ(render_type_expression(parse_type_expression("Label[dom=$cdom]")),
            "Label[dom=$cdom]");
}

TEST(TypeExpr, RenderEscapesStrings) {
  TypeExpr t{"T", {}};
  t.args.push_back(TypeArg{std::string("s"), StringLit{"a\"b\\c"}});
  const std::string text = render_type_expression(t);
  EXPECT_EQ(parse_type_expression(text), t);
}

TEST(TypeExpr, IdentifierRule) {
  EXPECT_TRUE(is_identifier("MyClassDom"));
  EXPECT_TRUE(is_identifier("_x1"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("1x"));
  EXPECT_FALSE(is_identifier("a-b"));
}

TEST(TypeExprProperty, RenderThenParseIsIdentity) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    TypeExpr t = testkit::random_type_expr(rng, 5);
    const std::string text = render_type_expression(t);
    ASSERT_EQ(parse_type_expression(text), t) << text;
  }
}

TEST(TypeExprProperty, InjectedFaultsAreRejected) {
  std::mt19937 rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::string good = render_type_expression(testkit::random_type_expr(rng, 5));
    const std::string bad = testkit::inject_grammar_fault(good, rng);
    EXPECT_THROW(parse_type_expression(bad), GrammarError) << bad;
  }
}

}  // namespace
}  // namespace dsdl
