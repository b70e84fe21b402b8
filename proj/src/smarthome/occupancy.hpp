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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace smarthome::occupancy {

enum class Occupancy : std::uint8_t { Occupied, Away, Vacation };

const char* to_string(Occupancy state);

struct OccupancyOptions {
  std::uint64_t seed = 42;
  // Weekday absence [away_start_hour, away_end_hour); equal values disable it.
  int away_start_hour = 8;
  int away_end_hour = 18;
  // 1-based day of year on which each 15-day vacation starts.
  int winter_vacation_start = 10;
  int summer_vacation_start = 200;
  int vacation_days = 15;
  // Weekend daytime presence, drawn once per block.
  double weekend_p_occupied = 0.6;
  int weekend_block_hours = 2;
  int weekend_day_start_hour = 8;
  int weekend_day_end_hour = 20;

  void validate() const;
  bool operator==(const OccupancyOptions&) const = default;
};

// Day 0 (Jan 1) is a Monday.
inline bool is_weekend(int day_index) { return day_index % 7 >= 5; }

class OccupancyProfile {
 public:
  OccupancyProfile(std::vector<Occupancy> states, OccupancyOptions options);

  std::span<const Occupancy> states() const noexcept { return states_; }
  Occupancy operator[](std::size_t hour) const { return states_[hour]; }
  std::size_t size() const noexcept { return states_.size(); }
  const OccupancyOptions& options() const noexcept { return options_; }
  std::uint64_t seed() const noexcept { return options_.seed; }

  // The recurring family schedule: weekday work hours and vacations. Random
  // weekend absences are not part of it.
  bool scheduled_absence(std::size_t hour) const;

  std::size_t count(Occupancy state) const;
  std::string to_csv() const;

  bool operator==(const OccupancyProfile&) const = default;

 private:
  std::vector<Occupancy> states_;
  OccupancyOptions options_;
};

// Throws SemanticError("OverlappingVacations ...") for overlapping windows.
OccupancyProfile build_profile(const OccupancyOptions& options);

}  // namespace smarthome::occupancy
