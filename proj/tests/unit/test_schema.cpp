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

#include "dsdl/document.hpp"
#include "dsdl/schema.hpp"
#include "testkit.hpp"

namespace dsdl {
namespace {

BuildResult build(const std::string& yaml) {
  return build_definitions(parse_document("$dsdl-version: \"0.5.0\"\n" + yaml, TextFormat::yaml).defs);
}

const char* kMyClassDom =
    "MyClassDom:\n"
    "  $def: class_domain\n"
    "  classes: [dog, cat, fish, tiger]\n";

const char* kHierarchical =
    "ClassDom:\n"
    "  $def: class_domain\n"
    "  classes:\n"
    "    - vehicle.airplane\n"
    "    - food.apple\n"
    "    - accessory.backpack\n"
    "    - food.banana\n"
    "    - sports.baseball_bat\n"
    "    - sports.baseball_glove\n"
    "    - animal.bear\n"
    "    - furniture.bed\n"
    "    - outdoor.bench\n"
    "    - vehicle.bicycle\n"
    "    - animal.bird\n"
    "    - vehicle.boat\n";

Code lookup_code(const ClassDomain& dom, std::string_view selector) {
  try {
    lookup_class(dom, selector);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "selector accepted: " << selector;
  return Code::SYNTAX_ERROR;
}

std::vector<std::string> class_texts(const ClassDomain& dom) {
  std::vector<std::string> out;
  for (const auto& c : dom.classes()) out.push_back(c.text());
  return out;
}

TEST(Schema, MyClassDomClasses) {
  BuildResult r = build(kMyClassDom);
  EXPECT_TRUE(r.diagnostics.empty());
  const ClassDomain* dom = r.registry.find_domain("MyClassDom");
  ASSERT_NE(dom, nullptr);
  EXPECT_EQ(class_texts(*dom), (std::vector<std::string>{"dog", "cat", "fish", "tiger"}));
  EXPECT_FALSE(dom->hierarchical());
}

TEST(Schema, ParametricStruct) {
  RawDocument doc = parse_document_file((testkit::library_dir() / "object-detection.yaml").string());
  BuildResult r = build_definitions(doc.defs);
  EXPECT_TRUE(r.diagnostics.empty()) << testkit::describe(r.diagnostics);
  const StructClass* s = r.registry.find_struct("ObjectDetectionSample");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->params, (std::vector<std::string>{"cdom"}));
  ASSERT_EQ(s->fields.size(), 2u);
  EXPECT_EQ(s->fields[0].first, "image");
  EXPECT_EQ(render_type_expression(s->fields[0].second), "Image");
  EXPECT_EQ(s->fields[1].first, "objects");
  EXPECT_EQ(render_type_expression(s->fields[1].second), "List[LocalObjectEntry[cdom=$cdom]]");
}

TEST(Schema, OptionalUnknownField) {
  BuildResult r = build(
      "S:\n  $def: struct\n  $fields: {image: Image, label: Int}\n  $optional: ['labl']\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, Code::OPTIONAL_UNKNOWN_FIELD);
  EXPECT_NE(r.registry.find_struct("S"), nullptr);
}

TEST(Schema, UnboundParam) {
  BuildResult r = build("S:\n  $def: struct\n  $fields:\n    label: Label[dom=$cdom]\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, Code::UNBOUND_PARAM);
}

TEST(Schema, UnknownDefKind) {
  BuildResult r = build("S:\n  $def: enum\n  values: [a]\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, Code::UNKNOWN_DEF_KIND);
  EXPECT_EQ(r.registry.size(), 0u);
}

TEST(Schema, MalformedDefinitions) {
  BuildResult r = build("S:\n  $def: struct\nD:\n  $def: class_domain\n");
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].code, Code::MALFORMED_DEF);
  EXPECT_EQ(r.diagnostics[1].code, Code::MALFORMED_DEF);
}

TEST(Schema, DuplicateClass) {
  BuildResult r = build("D:\n  $def: class_domain\n  classes: [a, b, a]\n");
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].code, Code::DUPLICATE_CLASS);
}

TEST(Schema, SkeletonOutOfRange) {
  BuildResult r = build("D:\n  $def: class_domain\n  classes: [a, b]\n  skeleton: [[1, 3]]\n");
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].code, Code::SKELETON_RANGE);
}

TEST(Schema, SkeletonKept) {
  BuildResult r = build("D:\n  $def: class_domain\n  classes: [a, b, c]\n  skeleton: [[1, 2], [3, 2]]\n");
  ASSERT_TRUE(r.diagnostics.empty()) << testkit::describe(r.diagnostics);
  const auto& sk = r.registry.find_domain("D")->skeleton();
  ASSERT_EQ(sk.size(), 2u);
  EXPECT_EQ(sk[1], (std::pair<std::size_t, std::size_t>{3, 2}));
}

TEST(Schema, AnnotatedDomainName) {
  BuildResult r = build(
      "Parent:\n  $def: class_domain\n  classes: [person]\n"
      "Child[Parent]:\n  $def: class_domain\n  classes: ['nose[person]', 'left_eye[person]']\n");
  ASSERT_TRUE(r.diagnostics.empty()) << testkit::describe(r.diagnostics);
  const ClassDomain* child = r.registry.find_domain("Child");
  ASSERT_NE(child, nullptr);
  EXPECT_EQ(child->parents(), (std::vector<std::string>{"Parent"}));
  ASSERT_EQ(child->classes()[0].segments.size(), 1u);
  EXPECT_EQ(child->classes()[0].segments[0].name, "nose");
  EXPECT_EQ(child->classes()[0].segments[0].parent, "person");
  EXPECT_EQ(child->find("nose"), 1u);
}

TEST(Schema, ClassPathParsing) {
  ClassPath p = parse_class_path("animal.dog.hound");
  EXPECT_EQ(p.depth(), 3u);
  EXPECT_EQ(p.text(), "animal.dog.hound");
  EXPECT_EQ(p.verbatim, "animal.dog.hound");
}

TEST(ClassLookup, NameAndIndexAgree) {
  BuildResult r = build(kMyClassDom);
  const ClassDomain& dom = *r.registry.find_domain("MyClassDom");
  ClassRef by_name = lookup_class(dom, "cat");
  EXPECT_EQ(by_name.domain, "MyClassDom");
  EXPECT_EQ(by_name.index_path, (std::vector<std::size_t>{2}));
  EXPECT_EQ(by_name.path, "cat");
  EXPECT_EQ(by_name.flat_index, 2u);
  EXPECT_EQ(lookup_class(dom, "2"), by_name);
  EXPECT_EQ(lookup_class_index(dom, 2), by_name);
  EXPECT_EQ(by_name.qualified(), "MyClassDom::cat");
}

TEST(ClassLookup, Failures) {
  BuildResult r = build(kMyClassDom);
  const ClassDomain& dom = *r.registry.find_domain("MyClassDom");
  EXPECT_EQ(lookup_code(dom, "horse"), Code::CLASS_NOT_FOUND);
  EXPECT_EQ(lookup_code(dom, "0"), Code::CLASS_INDEX_RANGE);
  EXPECT_EQ(lookup_code(dom, "5"), Code::CLASS_INDEX_RANGE);
  EXPECT_THROW(lookup_class_index(dom, -1), Error);
}

TEST(ClassLookup, HierarchicalPath) {
  BuildResult r = build(kHierarchical);
  ASSERT_TRUE(r.diagnostics.empty()) << testkit::describe(r.diagnostics);
  const ClassDomain& dom = *r.registry.find_domain("ClassDom");
  EXPECT_TRUE(dom.hierarchical());
  ClassRef ref = lookup_class(dom, "vehicle.airplane");
  EXPECT_EQ(ref.path, "vehicle.airplane");
  EXPECT_EQ(ref.index_path, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(ref.flat_index, 1u);
  EXPECT_EQ(lookup_class(dom, "vehicle.boat").index_path, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(lookup_class(dom, "food.banana").index_path, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(lookup_class(dom, "1.3"), lookup_class(dom, "vehicle.boat"));
  EXPECT_EQ(lookup_code(dom, "1.4"), Code::CLASS_INDEX_RANGE);
  EXPECT_EQ(lookup_code(dom, "8.1"), Code::CLASS_INDEX_RANGE);
  EXPECT_EQ(lookup_code(dom, "vehicle.car"), Code::CLASS_NOT_FOUND);
  EXPECT_EQ(dom.children(""), (std::vector<std::string>{"vehicle", "food", "accessory", "sports",
                                                       "animal", "furniture", "outdoor"}));
}

TEST(ClassLookupProperty, AgreesWithListScanOracle) {
  std::mt19937 rng(4242);
  for (int d = 0; d < 40; ++d) {
    testkit::RandomDomain rd = testkit::random_domain(rng, "D" + std::to_string(d));
    BuildResult r = build_definitions({{rd.name, testkit::domain_definition(rd)}});
    ASSERT_TRUE(r.diagnostics.empty()) << testkit::describe(r.diagnostics);
    const ClassDomain& dom = *r.registry.find_domain(rd.name);
    ASSERT_EQ(dom.size(), rd.classes.size());
    for (std::size_t i = 0; i < rd.classes.size(); ++i) {
      const std::string& cls = rd.classes[i];
      const std::size_t flat = testkit::oracle_flat_index(rd.classes, cls);
      ClassRef by_name = lookup_class(dom, cls);
      EXPECT_EQ(by_name.flat_index, flat);
      EXPECT_EQ(by_name.index_path, testkit::oracle_index_path(rd.classes, flat));
      std::string idx;
      for (std::size_t k : by_name.index_path) idx += (idx.empty() ? "" : ".") + std::to_string(k);
      EXPECT_EQ(lookup_class(dom, idx), by_name) << idx;
    }
    EXPECT_EQ(lookup_code(dom, std::to_string(rd.classes.size() + 1)), Code::CLASS_INDEX_RANGE);
    EXPECT_EQ(lookup_code(dom, "0"), Code::CLASS_INDEX_RANGE);
    if (rd.hierarchical) {
      const std::size_t top = testkit::oracle_child_count(rd.classes, "");
      EXPECT_EQ(lookup_code(dom, std::to_string(top + 1) + ".1"), Code::CLASS_INDEX_RANGE);
    }
  }
}

TEST(Registry, PutReplacesInPlace) {
  DefinitionRegistry reg;
  auto a = std::make_shared<const StructClass>(StructClass{"A", {}, {}, {}});
  auto b = std::make_shared<const StructClass>(StructClass{"B", {}, {}, {}});
  EXPECT_FALSE(reg.put({"A", a, {"one.yaml", 0}}));
  EXPECT_FALSE(reg.put({"B", b, {"one.yaml", 0}}));
  auto replaced = reg.put({"A", b, {"two.yaml", 1}});
  ASSERT_TRUE(replaced);
  EXPECT_EQ(replaced->source, "one.yaml");
  ASSERT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.entries()[0].name, "A");
  EXPECT_EQ(reg.entries()[0].provenance.source, "two.yaml");
}

}  // namespace
}  // namespace dsdl
