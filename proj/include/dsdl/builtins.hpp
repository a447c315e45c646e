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
#include <vector>

namespace dsdl {

enum class ParamKind { domain_ref, type_ref, string, boolean };

struct ParamDescriptor {
  std::string name;
  ParamKind kind = ParamKind::string;
  bool required = false;
  /// Textual default for string/boolean parameters.
  std::optional<std::string> default_value;
  /// Alternative spellings accepted with a PARAM_ALIAS note.
  std::vector<std::string> aliases;
  /// Allowed values for string parameters (empty = unrestricted).
  std::vector<std::string> choices;
};

enum class ValueShape {
  boolean,
  integer,
  number,
  string,
  coord,
  coord3d,
  interval,
  bbox,
  polygon,
  date,
  time,
  label,
  loc,
  list,
  media,
  text,
  keypoint,
  rotated_bbox,
  instance_id,
  unique_id,
  image_shape,
  record,
};

std::string_view to_string(ValueShape s);

struct BuiltinSignature {
  std::string name;
  std::vector<ParamDescriptor> params;
  ValueShape shape = ValueShape::string;

  const ParamDescriptor* param(std::string_view n) const;
};

const std::vector<BuiltinSignature>& builtin_inventory();
const BuiltinSignature* find_builtin(std::string_view name);
/// Builtins that carry media content (Image, Video, ..., LabelMap).
bool is_media_builtin(std::string_view name);

}  // namespace dsdl
