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

#include "dsdl/typed_value.hpp"

#include <cstdio>

namespace dsdl {

const TypedValue* TypedRecord::get(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return &values[i];
  }
  return nullptr;
}

namespace {

std::string two(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

}  // namespace

std::string format_date(const CivilDateTime& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-", d.year);
  return buf + two(d.month) + "-" + two(d.day);
}

std::string format_time(const CivilDateTime& t) {
  std::string out = two(t.hour) + ":" + two(t.minute) + ":" + two(t.second);
  if (t.microsecond != 0) {
    char buf[16];
    std::snprintf(buf, sizeof buf, ".%06d", t.microsecond);
    out += buf;
  }
  if (t.utc_offset_minutes) {
    const int off = *t.utc_offset_minutes;
    if (off == 0) {
      out += "Z";
    } else {
      const int a = off < 0 ? -off : off;
      out += (off < 0 ? "-" : "+") + two(a / 60) + ":" + two(a % 60);
    }
  }
  return out;
}

Value to_json(const ClassRef& ref) {
  Value j = Value::object();
  j["domain"] = ref.domain;
  j["path"] = ref.path;
  j["index"] = ref.index_path;
  return j;
}

Value to_json(const TypedValue& tv) {
  return std::visit(
      [](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, bool> ||
                             std::is_same_v<T, std::int64_t> ||
                             std::is_same_v<T, double> ||
                             std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, Coord>) {
          return Value::array({x.x, x.y});
        } else if constexpr (std::is_same_v<T, Coord3D>) {
          return Value::array({x.x, x.y, x.z});
        } else if constexpr (std::is_same_v<T, Interval>) {
          return Value::array({x.begin, x.end});
        } else if constexpr (std::is_same_v<T, BBox>) {
          return Value::array({x.x, x.y, x.w, x.h});
        } else if constexpr (std::is_same_v<T, Polygon>) {
          Value rings = Value::array();
          for (const auto& ring : x.rings) {
            Value r = Value::array();
            for (const auto& p : ring) r.push_back(Value::array({p.x, p.y}));
            rings.push_back(std::move(r));
          }
          return rings;
        } else if constexpr (std::is_same_v<T, DateValue>) {
          return format_date(x.value);
        } else if constexpr (std::is_same_v<T, TimeValue>) {
          return format_time(x.value);
        } else if constexpr (std::is_same_v<T, ClassRef>) {
          return to_json(x);
        } else if constexpr (std::is_same_v<T, ObjectLocator>) {
          return Value{{"loc", x.text}, {"kind", std::string(x.kind())}};
        } else if constexpr (std::is_same_v<T, TypedList>) {
          Value arr = Value::array();
          for (const auto& item : x.items) arr.push_back(to_json(item));
          return arr;
        } else if constexpr (std::is_same_v<T, TypedRecord>) {
          Value obj = Value::object();
          for (std::size_t i = 0; i < x.names.size(); ++i) {
            obj[x.names[i]] = to_json(x.values[i]);
          }
          return obj;
        } else if constexpr (std::is_same_v<T, MediaRef>) {
          Value obj = Value::object();
          obj["class"] = x.media_class;
          obj["loc"] = x.locator.text;
          obj["kind"] = std::string(x.locator.kind());
          if (x.descriptor) obj["descr"] = *x.descriptor;
          return obj;
        } else if constexpr (std::is_same_v<T, TextContent>) {
          return x.text;
        } else if constexpr (std::is_same_v<T, KeypointSet>) {
          Value arr = Value::array();
          for (const auto& p : x.points) arr.push_back(Value::array({p[0], p[1], p[2]}));
          return arr;
        } else if constexpr (std::is_same_v<T, RotatedBox>) {
          return Value{{"mode", x.mode}, {"measure", x.measure}, {"values", x.values}};
        } else if constexpr (std::is_same_v<T, InstanceId> || std::is_same_v<T, UniqueId>) {
          return x.text;
        } else {
          static_assert(std::is_same_v<T, ImageShape>);
          return Value::array({x.width, x.height});
        }
      },
      tv.v);
}

}  // namespace dsdl
