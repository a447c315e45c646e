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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dsdl/datetime.hpp"
#include "dsdl/locator.hpp"
#include "dsdl/schema.hpp"
#include "dsdl/value.hpp"

namespace dsdl {

struct TypedValue;

struct Coord {
  double x = 0, y = 0;
  bool operator==(const Coord&) const = default;
};

struct Coord3D {
  double x = 0, y = 0, z = 0;
  bool operator==(const Coord3D&) const = default;
};

struct Interval {
  double begin = 0, end = 0;
  bool operator==(const Interval&) const = default;
};

/// [x, y, w, h]
struct BBox {
  double x = 0, y = 0, w = 0, h = 0;
  bool operator==(const BBox&) const = default;
};

struct Polygon {
  std::vector<std::vector<Coord>> rings;
  bool operator==(const Polygon&) const = default;
};

struct DateValue {
  CivilDateTime value;
  bool operator==(const DateValue&) const = default;
};

struct TimeValue {
  CivilDateTime value;
  bool operator==(const TimeValue&) const = default;
};

struct MediaRef {
  std::string media_class;
  ObjectLocator locator;
  std::optional<Value> descriptor;
  bool operator==(const MediaRef&) const = default;
};

/// Inline text content (a bare string in a Text field).
struct TextContent {
  std::string text;
  bool operator==(const TextContent&) const = default;
};

struct KeypointSet {
  /// (x, y, visibility) triples; visibility is not interpreted.
  std::vector<std::array<double, 3>> points;
  bool operator==(const KeypointSet&) const = default;
};

struct RotatedBox {
  std::string mode;     // xyxy | xywht
  std::string measure;  // radian | degree
  std::vector<double> values;
  bool operator==(const RotatedBox&) const = default;
};

struct InstanceId {
  std::string text;
  bool operator==(const InstanceId&) const = default;
};

struct UniqueId {
  std::string text;
  bool operator==(const UniqueId&) const = default;
};

/// Recorded verbatim; (width, height) by convention.
struct ImageShape {
  std::int64_t width = 0, height = 0;
  bool operator==(const ImageShape&) const = default;
};

struct TypedList {
  std::vector<TypedValue> items;
  bool operator==(const TypedList&) const;
};

/// Every declared field appears exactly once, in declaration order; omitted
/// optionals hold null.
struct TypedRecord {
  std::string type;
  std::vector<std::string> names;
  std::vector<TypedValue> values;

  const TypedValue* get(std::string_view name) const;
  bool operator==(const TypedRecord&) const;
};

struct TypedValue {
  using Variant =
      std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Coord,
                   Coord3D, Interval, BBox, Polygon, DateValue, TimeValue, ClassRef,
                   ObjectLocator, TypedList, TypedRecord, MediaRef, TextContent,
                   KeypointSet, RotatedBox, InstanceId, UniqueId, ImageShape>;
  Variant v = nullptr;

  TypedValue() = default;
  template <typename T, typename = std::enable_if_t<
                            std::is_constructible_v<Variant, T&&> &&
                            !std::is_same_v<std::decay_t<T>, TypedValue>>>
  TypedValue(T&& x) : v(std::forward<T>(x)) {}  // NOLINT

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v); }
  template <typename T>
  const T* as() const {
    return std::get_if<T>(&v);
  }
  bool operator==(const TypedValue& o) const { return v == o.v; }
};

inline bool TypedList::operator==(const TypedList& o) const { return items == o.items; }
inline bool TypedRecord::operator==(const TypedRecord& o) const {
  return type == o.type && names == o.names && values == o.values;
}

std::string format_date(const CivilDateTime& d);
std::string format_time(const CivilDateTime& t);

/// JSON projection used by reports.
Value to_json(const TypedValue& v);
Value to_json(const ClassRef& ref);

}  // namespace dsdl
