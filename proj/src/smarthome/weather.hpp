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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "smarthome/error.hpp"

namespace smarthome::weather {

inline constexpr int kHoursPerYear = 8760;
inline constexpr int kDaysPerYear = 365;

struct WeatherRecord {
  int hour_of_year = 0;
  double outdoor_temp_c = 0.0;
  double ghi_wm2 = 0.0;

  bool operator==(const WeatherRecord&) const = default;
};

// Raised by the CSV loader. The message names the offending line.
class WeatherError : public SchemaError {
 public:
  enum class Kind { MissingColumn, NonMonotonicHours, RecordCountNot8760, UnparsableNumber };

  WeatherError(Kind kind, int line, const std::string& detail);
  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

// One simulated year of hourly weather. Immutable after construction; the
// constructor enforces the record invariants.
class WeatherSeries {
 public:
  explicit WeatherSeries(std::vector<WeatherRecord> records);

  std::span<const WeatherRecord> records() const noexcept { return records_; }
  const WeatherRecord& operator[](std::size_t hour) const { return records_[hour]; }
  std::size_t size() const noexcept { return records_.size(); }
  double mean_temp_c() const;

  bool operator==(const WeatherSeries&) const = default;

 private:
  std::vector<WeatherRecord> records_;
};

struct ClimatePreset {
  std::string name;
  double mean_annual_temp_c = 10.0;
  double seasonal_amplitude_k = 8.0;
  double diurnal_amplitude_k = 4.0;
  double peak_ghi_wm2 = 1000.0;
  int coldest_day = 15;        // day of year (1-based) of the seasonal minimum
  double latitude_deg = 45.0;  // drives day length and solar elevation
  double noise_sigma_k = 1.5;

  void validate() const;
  bool operator==(const ClimatePreset&) const = default;
};

ClimatePreset algiers_csa();
ClimatePreset stuttgart_cfb();

// Double sinusoid (seasonal + diurnal) plus seeded Gaussian noise, and a
// clear-sky GHI scaled by a per-day cloudiness draw in [0.3, 1.0].
// The noise is re-centred so the annual mean equals the preset mean.
WeatherSeries synthesize_weather(const ClimatePreset& preset, std::uint64_t seed);

// Header `hour,temp_c,ghi_wm2`, exactly 8760 data rows.
WeatherSeries load_weather_csv(const std::filesystem::path& path);
WeatherSeries parse_weather_csv(const std::string& text);
std::string to_csv(const WeatherSeries& series);
void write_weather_csv(const WeatherSeries& series, const std::filesystem::path& path);

}  // namespace smarthome::weather
