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

namespace dsdl {

struct CivilDateTime {
  int year = 1900;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
  int microsecond = 0;
  std::optional<int> utc_offset_minutes;

  bool operator==(const CivilDateTime&) const = default;
};

/// Supported strptime directives: %Y %m %d %H %M %S %f %z %j %a %b %%.
/// Returns an error message for any other directive.
std::optional<std::string> check_format(std::string_view fmt);

/// strptime-style parse of the whole string; nullopt on mismatch.
std::optional<CivilDateTime> parse_with_format(std::string_view text,
                                               std::string_view fmt);

/// ISO 8601 calendar date `YYYY-MM-DD` (also `YYYYMMDD`).
std::optional<CivilDateTime> parse_iso_date(std::string_view text);

/// ISO 8601 time `HH[:MM[:SS[.ffffff]]]` with optional `Z` / `±HH:MM`.
std::optional<CivilDateTime> parse_iso_time(std::string_view text);

}  // namespace dsdl
