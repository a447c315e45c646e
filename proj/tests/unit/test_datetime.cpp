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

#include "dsdl/datetime.hpp"
#include "dsdl/typed_value.hpp"

namespace dsdl {
namespace {

TEST(DateFormat, DirectiveSubset) {
  for (const char* ok : {"%Y-%m-%d", "%H:%M", "%H:%M:%S.%f%z", "%j/%Y", "%a %b %d", "100%%"}) {
    EXPECT_FALSE(check_format(ok)) << ok;
  }
  for (const char* bad : {"%Q", "%y", "%", "%H:%"}) {
    EXPECT_TRUE(check_format(bad)) << bad;
  }
}

TEST(DateFormat, HourMinute) {
  auto t = parse_with_format("15:32", "%H:%M");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->hour, 15);
  EXPECT_EQ(t->minute, 32);
  EXPECT_FALSE(parse_with_format("25:00", "%H:%M"));
  EXPECT_FALSE(parse_with_format("15:32:00", "%H:%M"));
  EXPECT_FALSE(parse_with_format("15:3", "%H:%M:%S"));
}

TEST(DateFormat, FullTimestamp) {
  auto t = parse_with_format("2022-11-05 08:09:10.250000+0130", "%Y-%m-%d %H:%M:%S.%f%z");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->year, 2022);
  EXPECT_EQ(t->month, 11);
  EXPECT_EQ(t->day, 5);
  EXPECT_EQ(t->second, 10);
  EXPECT_EQ(t->microsecond, 250000);
  EXPECT_EQ(t->utc_offset_minutes, 90);
}

TEST(DateFormat, DayOfYearAndNames) {
  auto d = parse_with_format("2024 060", "%Y %j");
  ASSERT_TRUE(d);
  EXPECT_EQ(d->month, 2);
  EXPECT_EQ(d->day, 29);
  auto n = parse_with_format("Mon Jan 02 2023", "%a %b %d %Y");
  ASSERT_TRUE(n);
  EXPECT_EQ(n->month, 1);
  EXPECT_EQ(n->day, 2);
}

TEST(DateFormat, CalendarValidity) {
  EXPECT_TRUE(parse_with_format("2024-02-29", "%Y-%m-%d"));
  EXPECT_FALSE(parse_with_format("2023-02-29", "%Y-%m-%d"));
  EXPECT_FALSE(parse_with_format("1900-02-29", "%Y-%m-%d"));
  EXPECT_TRUE(parse_with_format("2000-02-29", "%Y-%m-%d"));
  EXPECT_FALSE(parse_with_format("2023-13-01", "%Y-%m-%d"));
}

TEST(IsoDate, Forms) {
  auto a = parse_iso_date("2023-07-14");
  auto b = parse_iso_date("20230714");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_FALSE(parse_iso_date("2023-7-14"));
  EXPECT_FALSE(parse_iso_date("2023-06-31"));
  EXPECT_EQ(format_date(*a), "2023-07-14");
}

TEST(IsoTime, Forms) {
  auto t = parse_iso_time("08:30:15.5Z");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->hour, 8);
  EXPECT_EQ(t->minute, 30);
  EXPECT_EQ(t->second, 15);
  EXPECT_EQ(t->microsecond, 500000);
  EXPECT_EQ(t->utc_offset_minutes, 0);
  auto h = parse_iso_time("08");
  ASSERT_TRUE(h);
  EXPECT_EQ(h->minute, 0);
  auto o = parse_iso_time("23:59-05:00");
  ASSERT_TRUE(o);
  EXPECT_EQ(o->utc_offset_minutes, -300);
  EXPECT_FALSE(parse_iso_time("24:00"));
  EXPECT_FALSE(parse_iso_time("8:30"));
  EXPECT_FALSE(parse_iso_time(""));
}

}  // namespace
}  // namespace dsdl
