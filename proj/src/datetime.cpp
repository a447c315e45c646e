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

#include "dsdl/datetime.hpp"

#include <array>
#include <cctype>

namespace dsdl {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};
constexpr std::array<std::string_view, 7> kDays = {"mon", "tue", "wed", "thu",
                                                   "fri", "sat", "sun"};
constexpr std::array<std::string_view, 12> kMonthsLong = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};
constexpr std::array<std::string_view, 7> kDaysLong = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDaysIn[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && leap(y) ? 29 : kDaysIn[m - 1];
}

bool valid(const CivilDateTime& t) {
  return t.month >= 1 && t.month <= 12 && t.day >= 1 &&
         t.day <= days_in_month(t.year, t.month) && t.hour >= 0 && t.hour <= 23 &&
         t.minute >= 0 && t.minute <= 59 && t.second >= 0 && t.second <= 60;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  bool done() const { return i_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  void advance() { ++i_; }

  std::optional<int> digits(std::size_t min, std::size_t max) {
    std::size_t n = 0;
    int v = 0;
    while (n < max && i_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
      ++n;
    }
    if (n < min) return std::nullopt;
    return v;
  }

  /// Microseconds from 1-6 fraction digits.
  std::optional<int> fraction() {
    std::size_t n = 0;
    int v = 0;
    while (n < 6 && i_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
      ++n;
    }
    if (n == 0) return std::nullopt;
    for (; n < 6; ++n) v *= 10;
    return v;
  }

  template <std::size_t N>
  std::optional<int> name(const std::array<std::string_view, N>& longs,
                          const std::array<std::string_view, N>& shorts) {
    for (const auto* table : {&longs, &shorts}) {
      for (std::size_t k = 0; k < N; ++k) {
        if (match_ci((*table)[k])) return static_cast<int>(k);
      }
    }
    return std::nullopt;
  }

  std::optional<int> utc_offset() {
    if (peek() == 'Z' || peek() == 'z') {
      advance();
      return 0;
    }
    if (peek() != '+' && peek() != '-') return std::nullopt;
    const int sign = peek() == '-' ? -1 : 1;
    advance();
    auto h = digits(2, 2);
    if (!h) return std::nullopt;
    if (peek() == ':') advance();
    auto m = digits(2, 2);
    if (!m || *h > 23 || *m > 59) return std::nullopt;
    return sign * (*h * 60 + *m);
  }

  bool literal(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  bool spaces() {
    if (!std::isspace(static_cast<unsigned char>(peek()))) return false;
    while (std::isspace(static_cast<unsigned char>(peek()))) advance();
    return true;
  }

 private:
  bool match_ci(std::string_view word) {
    if (s_.size() - i_ < word.size()) return false;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (std::tolower(static_cast<unsigned char>(s_[i_ + k])) != word[k]) return false;
    }
    i_ += word.size();
    return true;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::optional<std::string> check_format(std::string_view fmt) {
  for (std::size_t i = 0; i < fmt.size(); ++i) {
    if (fmt[i] != '%') continue;
    if (i + 1 == fmt.size()) return "format ends with a lone '%'";
    const char d = fmt[++i];
    switch (d) {
      case 'Y': case 'm': case 'd': case 'H': case 'M': case 'S':
      case 'f': case 'z': case 'j': case 'a': case 'b': case '%':
        break;
      default:
        return std::string("unsupported directive '%") + d + "'";
    }
  }
  return std::nullopt;
}

std::optional<CivilDateTime> parse_with_format(std::string_view text,
                                               std::string_view fmt) {
  if (check_format(fmt)) return std::nullopt;
  CivilDateTime t;
  std::optional<int> day_of_year;
  Cursor c(text);
  for (std::size_t i = 0; i < fmt.size(); ++i) {
    const char f = fmt[i];
    if (f != '%') {
      if (std::isspace(static_cast<unsigned char>(f))) {
        if (!c.spaces()) return std::nullopt;
        while (i + 1 < fmt.size() && std::isspace(static_cast<unsigned char>(fmt[i + 1]))) ++i;
      } else if (!c.literal(f)) {
        return std::nullopt;
      }
      continue;
    }
    const char d = fmt[++i];
    std::optional<int> v;
    switch (d) {
      case 'Y': v = c.digits(4, 4); if (v) t.year = *v; break;
      case 'm': v = c.digits(1, 2); if (v) t.month = *v; break;
      case 'd': v = c.digits(1, 2); if (v) t.day = *v; break;
      case 'H': v = c.digits(1, 2); if (v) t.hour = *v; break;
      case 'M': v = c.digits(1, 2); if (v) t.minute = *v; break;
      case 'S': v = c.digits(1, 2); if (v) t.second = *v; break;
      case 'f': v = c.fraction(); if (v) t.microsecond = *v; break;
      case 'z': v = c.utc_offset(); if (v) t.utc_offset_minutes = *v; break;
      case 'j':
        v = c.digits(1, 3);
        if (v) day_of_year = *v;
        break;
      case 'a': v = c.name(kDaysLong, kDays); break;
      case 'b': v = c.name(kMonthsLong, kMonths); if (v) t.month = *v + 1; break;
      case '%': v = c.literal('%') ? std::optional<int>(0) : std::nullopt; break;
      default: return std::nullopt;
    }
    if (!v) return std::nullopt;
  }
  if (!c.done()) return std::nullopt;
  if (day_of_year) {
    if (*day_of_year < 1 || *day_of_year > (leap(t.year) ? 366 : 365)) return std::nullopt;
    int rem = *day_of_year;
    int m = 1;
    while (rem > days_in_month(t.year, m)) rem -= days_in_month(t.year, m++);
    t.month = m;
    t.day = rem;
  }
  if (!valid(t)) return std::nullopt;
  return t;
}

std::optional<CivilDateTime> parse_iso_date(std::string_view text) {
  if (text.size() == 10) return parse_with_format(text, "%Y-%m-%d");
  if (text.size() == 8) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    }
    CivilDateTime t;
    t.year = std::stoi(std::string(text.substr(0, 4)));
    t.month = std::stoi(std::string(text.substr(4, 2)));
    t.day = std::stoi(std::string(text.substr(6, 2)));
    if (!valid(t)) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

std::optional<CivilDateTime> parse_iso_time(std::string_view text) {
  CivilDateTime t;
  Cursor c(text);
  auto h = c.digits(2, 2);
  if (!h) return std::nullopt;
  t.hour = *h;
  if (c.literal(':')) {
    auto m = c.digits(2, 2);
    if (!m) return std::nullopt;
    t.minute = *m;
    if (c.literal(':')) {
      auto s = c.digits(2, 2);
      if (!s) return std::nullopt;
      t.second = *s;
      if (c.literal('.')) {
        auto f = c.fraction();
        if (!f) return std::nullopt;
        t.microsecond = *f;
      }
    }
  }
  if (!c.done()) {
    auto off = c.utc_offset();
    if (!off || !c.done()) return std::nullopt;
    t.utc_offset_minutes = *off;
  }
  if (!valid(t)) return std::nullopt;
  return t;
}

}  // namespace dsdl
