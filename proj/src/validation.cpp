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

#include "dsdl/validation.hpp"

#include <cmath>
#include <limits>
#include <regex>

namespace dsdl {

namespace fs = std::filesystem;

// ------------------------------------------------------------ labels

namespace {

const ClassDomain* pick_domain(const std::string& name, const ClassDomain* bound,
                               const DefinitionRegistry* registry,
                               const std::string& label) {
  if (bound != nullptr) {
    if (bound->name() != name) {
      throw Error(Code::LABEL_DOMAIN_MISMATCH, {},
                  "label '" + label + "' names domain " + name + " but the field is bound to " +
                      bound->name());
    }
    return bound;
  }
  if (registry != nullptr) {
    if (const ClassDomain* d = registry->find_domain(name)) return d;
    throw Error(Code::CLASS_NOT_FOUND, {},
                "label '" + label + "' names unknown class domain " + name);
  }
  return nullptr;
}

std::vector<std::size_t> split_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string::npos) dot = text.size();
    out.push_back(static_cast<std::size_t>(std::stoull(text.substr(start, dot - start))));
    start = dot + 1;
  }
  return out;
}

}  // namespace

ClassRef validate_label(const Value& raw, const ClassDomain* dom,
                        const DefinitionRegistry* registry) {
  if (raw.is_number_integer()) {
    if (dom == nullptr) {
      throw Error(Code::LABEL_SYNTAX, {},
                  "integer label " + raw.dump() + " needs a bound class domain");
    }
    if (raw.is_number_unsigned() &&
        raw.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw Error(Code::CLASS_INDEX_RANGE, {},
                  "class index " + raw.dump() + " is out of range for domain " + dom->name());
    }
    return lookup_class_index(*dom, raw.get<std::int64_t>());
  }
  if (!raw.is_string()) {
    throw Error(Code::LABEL_SYNTAX, {},
                "label must be a class name or integer index, got " + raw.dump());
  }
  const std::string s = raw.get<std::string>();
  if (s.empty()) throw Error(Code::LABEL_SYNTAX, {}, "empty label");
  if (dom != nullptr) {
    if (std::size_t flat = dom->find(s)) return lookup_class_index(*dom, static_cast<std::int64_t>(flat));
  }

  if (std::size_t pos = s.find("::"); pos != std::string::npos) {
    const std::string dname = s.substr(0, pos);
    const std::string path = s.substr(pos + 2);
    if (!is_identifier(dname) || path.empty()) {
      throw Error(Code::LABEL_SYNTAX, {},
                  "malformed qualified label '" + s + "' (expected Dom::class)");
    }
    const ClassDomain* target = pick_domain(dname, dom, registry, s);
    if (target == nullptr) {
      ClassPath cp = parse_class_path(path);
      for (const auto& seg : cp.segments) {
        if (seg.name.empty()) {
          throw Error(Code::LABEL_SYNTAX, {}, "empty class segment in '" + s + "'");
        }
      }
      return ClassRef{dname, {}, cp.text(), 0};
    }
    if (std::size_t flat = target->find(path)) {
      return lookup_class_index(*target, static_cast<std::int64_t>(flat));
    }
    return lookup_class(*target, path);
  }

  static const std::regex kQualifiedIndex(R"(^([A-Za-z_][A-Za-z0-9_]*)\[([0-9]+(\.[0-9]+)*)\]$)");
  std::smatch m;
  if (std::regex_match(s, m, kQualifiedIndex)) {
    const std::string dname = m[1].str();
    const std::string idx = m[2].str();
    const ClassDomain* target = pick_domain(dname, dom, registry, s);
    if (target == nullptr) return ClassRef{dname, split_indices(idx), {}, 0};
    return lookup_class(*target, idx);
  }
  if (s.find_first_of("[]:") != std::string::npos) {
    throw Error(Code::LABEL_SYNTAX, {}, "malformed label '" + s + "'");
  }
  if (dom == nullptr) {
    throw Error(Code::LABEL_SYNTAX, {},
                "bare label '" + s + "' needs a bound class domain");
  }
  return lookup_class(*dom, s);
}

// ------------------------------------------------------------ values

namespace {

constexpr double kPi = 3.14159265358979323846;

class Checker {
 public:
  Checker(std::vector<Diagnostic>& diags, const ValidateOptions& opts)
      : diags_(diags), opts_(opts) {}

  TypedValue check(const Value& raw, const ConcreteType& t, const std::string& path) {
    switch (t.shape) {
      case ValueShape::boolean:
        if (raw.is_boolean()) return raw.get<bool>();
        return mismatch(path, "Bool", raw);
      case ValueShape::integer: {
        auto v = integral(raw, path, "Int");
        return v ? TypedValue(*v) : TypedValue();
      }
      case ValueShape::number:
        if (raw.is_number()) return raw.get<double>();
        return mismatch(path, "Num", raw);
      case ValueShape::string:
        if (raw.is_string()) return raw.get<std::string>();
        return mismatch(path, "Str", raw);
      case ValueShape::coord: {
        auto v = numbers(raw, path, "Coord", 2);
        return v ? TypedValue(Coord{(*v)[0], (*v)[1]}) : TypedValue();
      }
      case ValueShape::coord3d: {
        auto v = numbers(raw, path, "Coord3D", 3);
        return v ? TypedValue(Coord3D{(*v)[0], (*v)[1], (*v)[2]}) : TypedValue();
      }
      case ValueShape::interval: {
        auto v = numbers(raw, path, "Interval", 2);
        if (!v) return {};
        if ((*v)[0] > (*v)[1]) {
          return error(Code::RANGE, path, "Interval begin " + raw[0].dump() +
                                              " is greater than end " + raw[1].dump());
        }
        return Interval{(*v)[0], (*v)[1]};
      }
      case ValueShape::bbox: {
        auto v = numbers(raw, path, "BBox", 4);
        if (!v) return {};
        if ((*v)[2] < 0 || (*v)[3] < 0) {
          return error(Code::RANGE, path, "BBox width and height must be non-negative");
        }
        return BBox{(*v)[0], (*v)[1], (*v)[2], (*v)[3]};
      }
      case ValueShape::polygon:
        return polygon(raw, path);
      case ValueShape::date:
      case ValueShape::time:
        return datetime(raw, t, path);
      case ValueShape::label:
        try {
          return validate_label(raw, t.domain(), opts_.registry);
        } catch (const Error& e) {
          return error(e.code(), path, e.diagnostic().message);
        }
      case ValueShape::loc:
        if (!raw.is_string()) return mismatch(path, "Loc", raw);
        return locator(raw.get<std::string>(), path);
      case ValueShape::list:
        return list(raw, t, path);
      case ValueShape::media:
        return media(raw, t, path);
      case ValueShape::text:
        if (raw.is_string()) return TextContent{raw.get<std::string>()};
        if (raw.is_object()) return media(raw, t, path);
        return mismatch(path, "Text", raw);
      case ValueShape::keypoint:
        return keypoints(raw, t, path);
      case ValueShape::rotated_bbox:
        return rotated(raw, t, path);
      case ValueShape::instance_id:
      case ValueShape::unique_id: {
        std::string text;
        if (raw.is_string()) {
          text = raw.get<std::string>();
        } else if (raw.is_number_integer()) {
          text = raw.dump();
        } else {
          return mismatch(path, t.head, raw);
        }
        if (t.shape == ValueShape::instance_id) return InstanceId{text};
        return UniqueId{text};
      }
      case ValueShape::image_shape: {
        if (!raw.is_array()) return mismatch(path, "ImageShape", raw);
        if (raw.size() != 2) return arity(path, "ImageShape", 2, raw.size());
        std::int64_t wh[2] = {0, 0};
        bool ok = true;
        for (std::size_t i = 0; i < 2; ++i) {
          auto v = integral(raw[i], join_path(path, i), "ImageShape element");
          if (!v) {
            ok = false;
          } else if (*v <= 0) {
            error(Code::RANGE, join_path(path, i), "ImageShape elements must be positive");
            ok = false;
          } else {
            wh[i] = *v;
          }
        }
        if (!ok) return {};
        return ImageShape{wh[0], wh[1]};
      }
      case ValueShape::record:
        return record(raw, t, path);
    }
    return {};
  }

 private:
  TypedValue error(Code code, const std::string& path, std::string message) {
    diags_.push_back(make_error(code, path, std::move(message)));
    return {};
  }

  TypedValue mismatch(const std::string& path, const std::string& expected,
                      const Value& raw) {
    return error(Code::TYPE_MISMATCH, path,
                 "expected " + expected + ", got " + kind_of(raw));
  }

  TypedValue arity(const std::string& path, const std::string& what, std::size_t want,
                   std::size_t got) {
    return error(Code::ARITY, path,
                 what + " needs " + std::to_string(want) + " element(s), got " +
                     std::to_string(got));
  }

  static std::string kind_of(const Value& raw) {
    switch (raw.type()) {
      case Value::value_t::null: return "null";
      case Value::value_t::boolean: return "boolean " + raw.dump();
      case Value::value_t::string: return "string " + raw.dump();
      case Value::value_t::array: return "list";
      case Value::value_t::object: return "mapping";
      default: return "number " + raw.dump();
    }
  }

  std::optional<std::int64_t> integral(const Value& raw, const std::string& path,
                                       const std::string& what) {
    if (raw.is_number_unsigned()) {
      if (raw.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        error(Code::RANGE, path, what + " value " + raw.dump() + " does not fit 64 bits");
        return std::nullopt;
      }
      return raw.get<std::int64_t>();
    }
    if (raw.is_number_integer()) return raw.get<std::int64_t>();
    if (raw.is_number_float()) {
      const double d = raw.get<double>();
      if (std::isfinite(d) && std::floor(d) == d && std::fabs(d) < 9.2e18) {
        return static_cast<std::int64_t>(d);
      }
      error(Code::TYPE_MISMATCH, path, what + " value " + raw.dump() + " is not integral");
      return std::nullopt;
    }
    mismatch(path, what, raw);
    return std::nullopt;
  }

  std::optional<std::vector<double>> numbers(const Value& raw, const std::string& path,
                                             const std::string& what,
                                             std::optional<std::size_t> want) {
    if (!raw.is_array()) {
      mismatch(path, what, raw);
      return std::nullopt;
    }
    if (want && raw.size() != *want) {
      arity(path, what, *want, raw.size());
      return std::nullopt;
    }
    std::vector<double> out;
    bool ok = true;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].is_number()) {
        out.push_back(raw[i].get<double>());
      } else {
        mismatch(join_path(path, i), what + " element", raw[i]);
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  TypedValue polygon(const Value& raw, const std::string& path) {
    if (!raw.is_array()) return mismatch(path, "Polygon", raw);
    if (raw.empty()) return error(Code::ARITY, path, "Polygon has no points");
    // A single ring is [[x, y], ...]; a ring list is [[[x, y], ...], ...].
    const bool single = raw[0].is_array() && !raw[0].empty() && raw[0][0].is_number();
    Polygon out;
    bool ok = true;
    auto ring = [&](const Value& r, const std::string& rpath) {
      if (!r.is_array()) {
        mismatch(rpath, "Polygon ring", r);
        ok = false;
        return;
      }
      if (r.size() < 3) {
        error(Code::ARITY, rpath,
              "Polygon ring needs at least 3 points, got " + std::to_string(r.size()));
        ok = false;
        return;
      }
      std::vector<Coord> pts;
      for (std::size_t i = 0; i < r.size(); ++i) {
        auto v = numbers(r[i], join_path(rpath, i), "Polygon point", 2);
        if (!v) {
          ok = false;
          continue;
        }
        pts.push_back({(*v)[0], (*v)[1]});
      }
      out.rings.push_back(std::move(pts));
    };
    if (single) {
      ring(raw, path);
    } else {
      for (std::size_t i = 0; i < raw.size(); ++i) ring(raw[i], join_path(path, i));
    }
    if (!ok) return {};
    return out;
  }

  TypedValue datetime(const Value& raw, const ConcreteType& t, const std::string& path) {
    const bool is_date = t.shape == ValueShape::date;
    if (!raw.is_string()) return mismatch(path, t.head, raw);
    const std::string s = raw.get<std::string>();
    const std::string fmt = t.string_arg("fmt");
    std::optional<CivilDateTime> v;
    if (!fmt.empty()) {
      v = parse_with_format(s, fmt);
    } else {
      v = is_date ? parse_iso_date(s) : parse_iso_time(s);
    }
    if (!v) {
      return error(Code::DATE_FORMAT, path,
                   "'" + s + "' does not match " +
                       (fmt.empty() ? std::string("ISO 8601") : "'" + fmt + "'"));
    }
    if (is_date) return DateValue{*v};
    return TimeValue{*v};
  }

  TypedValue locator(const std::string& s, const std::string& path) {
    try {
      return parse_locator(s);
    } catch (const Error& e) {
      return error(e.code(), path, e.diagnostic().message);
    }
  }

  TypedValue list(const Value& raw, const ConcreteType& t, const std::string& path) {
    if (!raw.is_array()) return mismatch(path, render_concrete(t), raw);
    const ConcreteType* et = t.element();
    TypedList out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      out.items.push_back(et != nullptr ? check(raw[i], *et, join_path(path, i))
                                        : TypedValue());
    }
    return out;
  }

  TypedValue media(const Value& raw, const ConcreteType& t, const std::string& path) {
    MediaRef ref;
    ref.media_class = t.head;
    if (raw.is_string()) {
      TypedValue loc = locator(raw.get<std::string>(), path);
      if (loc.is_null()) return {};
      ref.locator = *loc.as<ObjectLocator>();
      return ref;
    }
    if (!raw.is_object()) return mismatch(path, t.head, raw);
    auto it = raw.find("$loc");
    if (it == raw.end()) {
      return error(Code::LOC_SYNTAX, path, t.head + " mapping needs a $loc entry");
    }
    if (!it->is_string()) return mismatch(join_path(path, "$loc"), "locator string", *it);
    for (const auto& [k, _] : raw.items()) {
      if (k != "$loc" && k != "$descr") {
        diags_.push_back(make_warning(Code::FIELD_UNKNOWN, join_path(path, k),
                                      "unknown key '" + k + "' in " + t.head + " reference"));
      }
    }
    TypedValue loc = locator(it->get<std::string>(), join_path(path, "$loc"));
    if (loc.is_null()) return {};
    ref.locator = *loc.as<ObjectLocator>();
    if (auto d = raw.find("$descr"); d != raw.end()) ref.descriptor = *d;
    return ref;
  }

  TypedValue keypoints(const Value& raw, const ConcreteType& t, const std::string& path) {
    auto v = numbers(raw, path, "Keypoint", std::nullopt);
    if (!v) return {};
    if (v->size() % 3 != 0) {
      return error(Code::ARITY, path,
                   "Keypoint list length " + std::to_string(v->size()) +
                       " is not a multiple of 3");
    }
    if (const ClassDomain* dom = t.domain()) {
      if (v->size() != 3 * dom->size()) {
        return error(Code::ARITY, path,
                     "Keypoint list needs 3 x " + std::to_string(dom->size()) + " = " +
                         std::to_string(3 * dom->size()) + " values for " + dom->name() +
                         ", got " + std::to_string(v->size()));
      }
    }
    KeypointSet out;
    for (std::size_t i = 0; i < v->size(); i += 3) {
      out.points.push_back({(*v)[i], (*v)[i + 1], (*v)[i + 2]});
    }
    return out;
  }

  TypedValue rotated(const Value& raw, const ConcreteType& t, const std::string& path) {
    const std::string mode = t.string_arg("mode");
    std::string measure = t.string_arg("measure");
    if (measure.empty()) measure = "radian";
    const std::size_t want = mode == "xyxy" ? 8 : 5;
    auto v = numbers(raw, path, "RotatedBBox[mode=\"" + mode + "\"]", want);
    if (!v) return {};
    if (mode == "xywht") {
      const double a = (*v)[4];
      const double lim = measure == "degree" ? 180.0 : kPi;
      if (!(a > -lim && a < lim)) {
        return error(Code::RANGE, join_path(path, 4),
                     "angle " + raw[4].dump() + " is outside (-" +
                         (measure == "degree" ? std::string("180, 180") : std::string("pi, pi")) +
                         ") for measure " + measure);
      }
      if ((*v)[2] < 0 || (*v)[3] < 0) {
        return error(Code::RANGE, path, "RotatedBBox width and height must be non-negative");
      }
    }
    return RotatedBox{mode, measure, *v};
  }

  TypedValue record(const Value& raw, const ConcreteType& t, const std::string& path) {
    if (!raw.is_object()) return mismatch(path, t.head, raw);
    TypedRecord out;
    out.type = t.head;
    for (const auto& f : t.fields) {
      out.names.push_back(f.name);
      auto it = raw.find(f.name);
      const std::string fpath = join_path(path, f.name);
      if (it == raw.end() || it->is_null()) {
        if (!f.optional) {
          Diagnostic d = opts_.strict ? make_error(Code::FIELD_MISSING, fpath, {})
                                      : make_warning(Code::FIELD_MISSING, fpath, {});
          d.message = "required field '" + f.name + "' of " + t.head + " is missing";
          diags_.push_back(std::move(d));
        }
        out.values.emplace_back();
        continue;
      }
      out.values.push_back(check(*it, *f.type, fpath));
    }
    for (const auto& [k, _] : raw.items()) {
      if (t.field(k) == nullptr) {
        diags_.push_back(make_warning(Code::FIELD_UNKNOWN, join_path(path, k),
                                      "field '" + k + "' is not declared by " + t.head));
      }
    }
    return out;
  }

  std::vector<Diagnostic>& diags_;
  const ValidateOptions& opts_;
};

}  // namespace

TypedValue validate_value(const Value& raw, const ConcreteType& t, const std::string& path,
                          std::vector<Diagnostic>& diags, const ValidateOptions& options) {
  Checker c(diags, options);
  return c.check(raw, t, path);
}

// ------------------------------------------------------------ external files

namespace {

Value load_wrapped(const fs::path& path, const fs::path& base, const char* key,
                   Code missing) {
  const fs::path full = path.is_absolute() ? path : base / path;
  LoadedText loaded = load_file(full.string());
  if (!loaded.value.is_object() || !loaded.value.contains(key)) {
    throw Error(missing, {}, full.string() + " has no top-level '" + key + "' key");
  }
  return loaded.value[key];
}

}  // namespace

Value load_external_samples(const fs::path& path, const fs::path& base) {
  Value v = load_wrapped(path, base, "samples", Code::MISSING_SAMPLES_KEY);
  if (!v.is_array()) {
    throw Error(Code::MALFORMED_SAMPLES, "samples", "'samples' must be a list");
  }
  return v;
}

Value load_external_global_info(const fs::path& path, const fs::path& base) {
  return load_wrapped(path, base, "global-info", Code::MISSING_GLOBAL_INFO_KEY);
}

// ------------------------------------------------------------ dataset

namespace {

std::size_t error_count(const std::vector<Diagnostic>& diags, std::size_t from) {
  std::size_t n = 0;
  for (std::size_t i = from; i < diags.size(); ++i) {
    if (diags[i].severity == Severity::error) ++n;
  }
  return n;
}

void channel_failure(std::vector<Diagnostic>& diags, const Error& e,
                     const std::string& path, const std::string& source) {
  Diagnostic d = e.diagnostic();
  if (d.path.empty()) d.path = path;
  if (d.source.empty()) d.source = source;
  diags.push_back(std::move(d));
}

}  // namespace

ValidationReport validate_dataset(const ResolvedSchema& schema, const RawDataSection& data,
                                  const fs::path& base, const ValidateOptions& options) {
  ValidationReport report;
  auto& diags = report.diagnostics;
  ValidateOptions opts = options;
  if (opts.registry == nullptr) opts.registry = &schema.registry;

  if (schema.sample_type) {
    Value samples;
    bool have = false;
    if (data.sample_path == kLocalPath) {
      if (data.samples && data.samples->is_array()) {
        samples = *data.samples;
        have = true;
      } else {
        diags.push_back(make_error(Code::MALFORMED_SAMPLES, "samples",
                                   "'samples' must be a list"));
      }
    } else {
      try {
        samples = load_external_samples(data.sample_path, base);
        have = true;
      } catch (const Error& e) {
        channel_failure(diags, e, "data/sample-path", data.sample_path);
      }
    }
    if (have) {
      const std::size_t start = diags.size();
      for (std::size_t i = 0; i < samples.size(); ++i) {
        if (opts.max_errors && error_count(diags, start) >= *opts.max_errors) {
          report.truncated = true;
          diags.push_back(make_note(Code::TRUNCATED, join_path("samples", i),
                                    "stopped after " + std::to_string(*opts.max_errors) +
                                        " error(s); " + std::to_string(samples.size() - i) +
                                        " sample(s) not checked"));
          break;
        }
        report.samples.push_back(validate_value(samples[i], *schema.sample_type,
                                                join_path("samples", i), diags, opts));
        ++report.sample_count;
      }
    }
  }

  if (schema.global_info_type) {
    Value info;
    bool have = false;
    const bool local = !data.global_info_path || *data.global_info_path == kLocalPath;
    if (local) {
      if (data.global_info) {
        info = *data.global_info;
        have = true;
      } else {
        diags.push_back(make_error(Code::MALFORMED_DATA_SECTION, "global-info",
                                   "global-info-type is set but no global-info is given"));
      }
    } else {
      try {
        info = load_external_global_info(*data.global_info_path, base);
        have = true;
      } catch (const Error& e) {
        channel_failure(diags, e, "data/global-info-path", *data.global_info_path);
      }
    }
    if (have) {
      report.global_info =
          validate_value(info, *schema.global_info_type, "global-info", diags, opts);
    }
  }

  report.counts = count(diags);
  return report;
}

}  // namespace dsdl
