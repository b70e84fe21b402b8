// Copyright 2026 The smarthome-benefits Authors
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

#include "smarthome/occupancy.hpp"

#include <gtest/gtest.h>

#include "smarthome/error.hpp"

namespace smarthome::occupancy {
namespace {

TEST(Occupancy, DefaultProfileHas720VacationHours) {
  const auto p = build_profile({});
  EXPECT_EQ(p.size(), 8760u);
  EXPECT_EQ(p.count(Occupancy::Vacation), 720u);
}

TEST(Occupancy, VacationDaysAreWholeAndConsecutive) {
  const auto p = build_profile({});
  int vacation_days = 0;
  int runs = 0;
  bool prev = false;
  for (int day = 0; day < 365; ++day) {
    const bool first = p[day * 24] == Occupancy::Vacation;
    for (int h = 0; h < 24; ++h) ASSERT_EQ(p[day * 24 + h] == Occupancy::Vacation, first) << "day " << day;
    vacation_days += first;
    if (first && !prev) ++runs;
    prev = first;
  }
  EXPECT_EQ(vacation_days, 30);
  EXPECT_EQ(runs, 2);
  EXPECT_EQ(p[9 * 24], Occupancy::Vacation);   // day-of-year 10
  EXPECT_NE(p[8 * 24], Occupancy::Vacation);
  EXPECT_EQ(p[199 * 24], Occupancy::Vacation);  // day-of-year 200
  EXPECT_NE(p[214 * 24], Occupancy::Vacation);
}

TEST(Occupancy, WeekdayWorkBlocksAreAway) {
  const auto p = build_profile({});
  for (int day = 0; day < 365; ++day) {
    if (is_weekend(day) || p[day * 24] == Occupancy::Vacation) continue;
    for (int h = 0; h < 24; ++h) {
      const auto expected = (h >= 8 && h < 18) ? Occupancy::Away : Occupancy::Occupied;
      ASSERT_EQ(p[day * 24 + h], expected) << "day " << day << " hour " << h;
    }
  }
}

TEST(Occupancy, YearStartsOnMonday) {
  EXPECT_FALSE(is_weekend(0));
  EXPECT_TRUE(is_weekend(5));
  EXPECT_TRUE(is_weekend(6));
  EXPECT_FALSE(is_weekend(7));
}

TEST(Occupancy, WeekendNightsAtHomeAndDaytimeMixed) {
  const auto p = build_profile({});
  int away = 0, total = 0;
  for (int day = 0; day < 365; ++day) {
    if (!is_weekend(day) || p[day * 24] == Occupancy::Vacation) continue;
    for (int h = 0; h < 24; ++h) {
      const auto s = p[day * 24 + h];
      if (h < 8 || h >= 20) {
        ASSERT_EQ(s, Occupancy::Occupied);
      } else {
        ++total;
        away += s == Occupancy::Away;
        if (h % 2 == 1) ASSERT_EQ(s, p[day * 24 + h - 1]) << "blocks are two hours";
      }
    }
  }
  const double away_share = static_cast<double>(away) / total;
  EXPECT_NEAR(away_share, 0.4, 0.1);
}

TEST(Occupancy, Deterministic) {
  EXPECT_EQ(build_profile({}), build_profile({}));
  OccupancyOptions other;
  other.seed = 7;
  EXPECT_NE(build_profile({}).states().size(), 0u);
  EXPECT_FALSE(build_profile({}) == build_profile(other));
}

TEST(Occupancy, DegenerateScheduleIsAlwaysHome) {
  OccupancyOptions o;
  o.away_start_hour = o.away_end_hour = 12;
  o.weekend_p_occupied = 1.0;
  const auto p = build_profile(o);
  EXPECT_EQ(p.count(Occupancy::Away), 0u);
  EXPECT_EQ(p.count(Occupancy::Occupied), 8760u - 720u);
}

TEST(Occupancy, OverlappingVacationsRejected) {
  OccupancyOptions o;
  o.summer_vacation_start = o.winter_vacation_start + 14;
  try {
    build_profile(o);
    FAIL();
  } catch (const SemanticError& e) {
    EXPECT_NE(std::string(e.what()).find("OverlappingVacations"), std::string::npos);
  }
  o.summer_vacation_start = o.winter_vacation_start + 15;
  EXPECT_NO_THROW(build_profile(o));
}

TEST(Occupancy, InvalidRangesRejected) {
  OccupancyOptions o;
  o.away_end_hour = 25;
  EXPECT_THROW(build_profile(o), SemanticError);
  o = {};
  o.summer_vacation_start = 360;
  EXPECT_THROW(build_profile(o), SemanticError);
  o = {};
  o.weekend_p_occupied = 1.5;
  EXPECT_THROW(build_profile(o), SemanticError);
}

TEST(Occupancy, ScheduledAbsenceExcludesRandomWeekendAbsence) {
  const auto p = build_profile({});
  for (std::size_t h = 0; h < p.size(); ++h) {
    if (p.scheduled_absence(h)) {
      ASSERT_NE(p[h], Occupancy::Occupied);
    }
    if (is_weekend(static_cast<int>(h / 24)) && p[h] == Occupancy::Away) {
      ASSERT_FALSE(p.scheduled_absence(h));
    }
  }
}

TEST(Occupancy, CsvExport) {
  const auto csv = build_profile({}).to_csv();
  EXPECT_EQ(csv.rfind("hour,state\n0,occupied\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8761);
}

}  // namespace
}  // namespace smarthome::occupancy
