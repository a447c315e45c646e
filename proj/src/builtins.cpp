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

#include "dsdl/builtins.hpp"

namespace dsdl {

namespace {

ParamDescriptor required(std::string name, ParamKind kind) {
  ParamDescriptor p;
  p.name = std::move(name);
  p.kind = kind;
  p.required = true;
  return p;
}

ParamDescriptor optional(std::string name, ParamKind kind,
                         std::optional<std::string> def = std::nullopt) {
  ParamDescriptor p;
  p.name = std::move(name);
  p.kind = kind;
  p.default_value = std::move(def);
  return p;
}

std::vector<BuiltinSignature> make_inventory() {
  using K = ParamKind;
  using S = ValueShape;

  ParamDescriptor label_map_dom = required("dom", K::domain_ref);
  label_map_dom.aliases = {"cdom"};

  ParamDescriptor mode = required("mode", K::string);
  mode.choices = {"xyxy", "xywht"};
  ParamDescriptor measure = optional("measure", K::string, "radian");
  measure.choices = {"radian", "degree"};

  return {
      {"Bool", {}, S::boolean},
      {"Int", {}, S::integer},
      {"Num", {}, S::number},
      {"Str", {}, S::string},
      {"Coord", {}, S::coord},
      {"Coord3D", {}, S::coord3d},
      {"Interval", {}, S::interval},
      {"BBox", {}, S::bbox},
      {"Polygon", {}, S::polygon},
      {"Date", {optional("fmt", K::string)}, S::date},
      {"Time", {optional("fmt", K::string)}, S::time},
      {"Label", {required("dom", K::domain_ref)}, S::label},
      {"Loc", {}, S::loc},
      {"List",
       {required("etype", K::type_ref), optional("ordered", K::boolean, "false")},
       S::list},
      {"Image", {}, S::media},
      {"Video", {}, S::media},
      {"Audio", {}, S::media},
      {"Text", {}, S::text},
      {"PointCloud", {}, S::media},
      {"LabelMap", {label_map_dom}, S::media},
      {"InstanceMap", {}, S::media},
      {"Keypoint", {required("dom", K::domain_ref)}, S::keypoint},
      {"RotatedBBox", {mode, measure}, S::rotated_bbox},
      {"InstanceID", {}, S::instance_id},
      {"UniqueID", {}, S::unique_id},
      {"ImageShape", {}, S::image_shape},
  };
}

}  // namespace

std::string_view to_string(ValueShape s) {
  switch (s) {
    case ValueShape::boolean: return "boolean";
    case ValueShape::integer: return "integer";
    case ValueShape::number: return "number";
    case ValueShape::string: return "string";
    case ValueShape::coord: return "coord";
    case ValueShape::coord3d: return "coord3d";
    case ValueShape::interval: return "interval";
    case ValueShape::bbox: return "bbox";
    case ValueShape::polygon: return "polygon";
    case ValueShape::date: return "date";
    case ValueShape::time: return "time";
    case ValueShape::label: return "label";
    case ValueShape::loc: return "loc";
    case ValueShape::list: return "list";
    case ValueShape::media: return "media";
    case ValueShape::text: return "text";
    case ValueShape::keypoint: return "keypoint";
    case ValueShape::rotated_bbox: return "rotated_bbox";
    case ValueShape::instance_id: return "instance_id";
    case ValueShape::unique_id: return "unique_id";
    case ValueShape::image_shape: return "image_shape";
    case ValueShape::record: return "record";
  }
  return "unknown";
}

const ParamDescriptor* BuiltinSignature::param(std::string_view n) const {
  for (const auto& p : params) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

const std::vector<BuiltinSignature>& builtin_inventory() {
  static const std::vector<BuiltinSignature> inventory = make_inventory();
  return inventory;
}

const BuiltinSignature* find_builtin(std::string_view name) {
  for (const auto& sig : builtin_inventory()) {
    if (sig.name == name) return &sig;
  }
  return nullptr;
}

bool is_media_builtin(std::string_view name) {
  const auto* sig = find_builtin(name);
  return sig != nullptr &&
         (sig->shape == ValueShape::media || sig->shape == ValueShape::text);
}

}  // namespace dsdl
