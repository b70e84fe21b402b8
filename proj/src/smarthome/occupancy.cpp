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

#include <algorithm>
#include <cstdlib>

#include "smarthome/error.hpp"
#include "smarthome/rng.hpp"
#include "smarthome/weather.hpp"

namespace smarthome::occupancy {

namespace {

bool in_vacation(const OccupancyOptions& o, int day_index) {
  const int doy = day_index + 1;
  const auto inside = [&](int start) { return doy >= start && doy < start + o.vacation_days; };
  return inside(o.winter_vacation_start) || inside(o.summer_vacation_start);
}

bool in_work_block(const OccupancyOptions& o, int day_index, int hod) {
  return !is_weekend(day_index) && hod >= o.away_start_hour && hod < o.away_end_hour;
}

}  // namespace

const char* to_string(Occupancy state) {
  switch (state) {
    case Occupancy::Occupied: return "occupied";
    case Occupancy::Away: return "away";
    case Occupancy::Vacation: return "vacation";
  }
  return "unknown";
}

void OccupancyOptions::validate() const {
  const auto hour_ok = [](int h) { return h >= 0 && h <= 24; };
  if (!hour_ok(away_start_hour) || !hour_ok(away_end_hour) || away_start_hour > away_end_hour) {
    throw SemanticError("occupancy: workday away range must satisfy 0 <= start <= end <= 24");
  }
  if (!hour_ok(weekend_day_start_hour) || !hour_ok(weekend_day_end_hour) ||
      weekend_day_start_hour > weekend_day_end_hour) {
    throw SemanticError("occupancy: weekend daytime range must satisfy 0 <= start <= end <= 24");
  }
  if (vacation_days != 15) {
    throw SemanticError("occupancy: each vacation lasts exactly 15 days");
  }
  for (int start : {winter_vacation_start, summer_vacation_start}) {
    if (start < 1 || start + vacation_days - 1 > weather::kDaysPerYear) {
      throw SemanticError("occupancy: vacation starting on day " + std::to_string(start) +
                          " does not fit in the year");
    }
  }
  if (std::abs(winter_vacation_start - summer_vacation_start) < vacation_days) {
    throw SemanticError("OverlappingVacations: windows starting on days " +
                        std::to_string(winter_vacation_start) + " and " +
                        std::to_string(summer_vacation_start) + " overlap");
  }
  if (!(weekend_p_occupied >= 0.0 && weekend_p_occupied <= 1.0)) {
    throw SemanticError("occupancy: weekend_p_occupied must lie in [0, 1]");
  }
  if (weekend_block_hours < 1 || weekend_block_hours > 24) {
    throw SemanticError("occupancy: weekend_block_hours must lie in 1..24");
  }
}

OccupancyProfile::OccupancyProfile(std::vector<Occupancy> states, OccupancyOptions options)
    : states_(std::move(states)), options_(std::move(options)) {
  if (states_.size() != static_cast<std::size_t>(weather::kHoursPerYear)) {
    throw SemanticError("occupancy profile must cover 8760 hours");
  }
}

bool OccupancyProfile::scheduled_absence(std::size_t hour) const {
  const int day = static_cast<int>(hour / 24);
  const int hod = static_cast<int>(hour % 24);
  return in_vacation(options_, day) || in_work_block(options_, day, hod);
}

std::size_t OccupancyProfile::count(Occupancy state) const {
  return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), state));
}

std::string OccupancyProfile::to_csv() const {
  std::string out = "hour,state\n";
  for (std::size_t h = 0; h < states_.size(); ++h) {
    out += std::to_string(h);
    out += ',';
    out += to_string(states_[h]);
    out += '\n';
  }
  return out;
}

OccupancyProfile build_profile(const OccupancyOptions& options) {
  options.validate();
  SplitStream rng(options.seed);
  std::vector<Occupancy> states(weather::kHoursPerYear, Occupancy::Occupied);

  for (int day = 0; day < weather::kDaysPerYear; ++day) {
    const bool vacation = in_vacation(options, day);
    bool block_present = true;
    for (int hod = 0; hod < 24; ++hod) {
      auto& s = states[day * 24 + hod];
      // Draws happen on every weekend regardless of vacation so the random
      // stream does not depend on the vacation placement.
      const bool weekend_daytime = is_weekend(day) && hod >= options.weekend_day_start_hour &&
                                   hod < options.weekend_day_end_hour;
      if (weekend_daytime && (hod - options.weekend_day_start_hour) % options.weekend_block_hours == 0) {
        block_present = rng.bernoulli(options.weekend_p_occupied);
      }
      if (vacation) {
        s = Occupancy::Vacation;
      } else if (in_work_block(options, day, hod)) {
        s = Occupancy::Away;
      } else if (weekend_daytime && !block_present) {
        s = Occupancy::Away;
      }
    }
  }
  return OccupancyProfile(std::move(states), options);
}

}  // namespace smarthome::occupancy
