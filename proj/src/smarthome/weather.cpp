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

#include "smarthome/weather.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "smarthome/rng.hpp"
#include "smarthome/text.hpp"

namespace smarthome::weather {

namespace {

const char* kind_name(WeatherError::Kind kind) {
  switch (kind) {
    case WeatherError::Kind::MissingColumn: return "MissingColumn";
    case WeatherError::Kind::NonMonotonicHours: return "NonMonotonicHours";
    case WeatherError::Kind::RecordCountNot8760: return "RecordCountNot8760";
    case WeatherError::Kind::UnparsableNumber: return "UnparsableNumber";
  }
  return "WeatherError";
}

constexpr double kMinTemp = -60.0;
constexpr double kMaxTemp = 60.0;

void check_record(const WeatherRecord& r) {
  if (!(r.ghi_wm2 >= 0.0) || !std::isfinite(r.ghi_wm2)) {
    throw SemanticError("weather hour " + std::to_string(r.hour_of_year) + ": ghi must be >= 0");
  }
  if (!(r.outdoor_temp_c >= kMinTemp && r.outdoor_temp_c <= kMaxTemp)) {
    throw SemanticError("weather hour " + std::to_string(r.hour_of_year) +
                        ": outdoor temperature outside [-60, 60] C");
  }
}

}  // namespace

WeatherError::WeatherError(Kind kind, int line, const std::string& detail)
    : SchemaError(std::string(kind_name(kind)) + " at line " + std::to_string(line) + ": " + detail),
      kind_(kind),
      line_(line) {}

WeatherSeries::WeatherSeries(std::vector<WeatherRecord> records) : records_(std::move(records)) {
  if (records_.size() != static_cast<std::size_t>(kHoursPerYear)) {
    throw SemanticError("weather series must hold exactly 8760 hourly records, got " +
                        std::to_string(records_.size()));
  }
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].hour_of_year != static_cast<int>(i)) {
      throw SemanticError("weather hours must run 0..8759 without gaps (index " + std::to_string(i) +
                          " holds hour " + std::to_string(records_[i].hour_of_year) + ")");
    }
    check_record(records_[i]);
  }
}

double WeatherSeries::mean_temp_c() const {
  double sum = 0.0;
  for (const auto& r : records_) sum += r.outdoor_temp_c;
  return sum / static_cast<double>(records_.size());
}

void ClimatePreset::validate() const {
  if (seasonal_amplitude_k < 0.0 || diurnal_amplitude_k < 0.0 || noise_sigma_k < 0.0) {
    throw SemanticError("climate preset '" + name + "': amplitudes must be >= 0");
  }
  if (!(peak_ghi_wm2 > 0.0)) {
    throw SemanticError("climate preset '" + name + "': peak_ghi must be > 0");
  }
  if (coldest_day < 1 || coldest_day > kDaysPerYear) {
    throw SemanticError("climate preset '" + name + "': coldest_day must be in 1..365");
  }
  if (latitude_deg < -66.0 || latitude_deg > 66.0) {
    throw SemanticError("climate preset '" + name + "': latitude must be within the polar circles");
  }
  const double extreme = seasonal_amplitude_k + diurnal_amplitude_k + 6.0 * noise_sigma_k;
  if (mean_annual_temp_c - extreme < kMinTemp || mean_annual_temp_c + extreme > kMaxTemp) {
    throw SemanticError("climate preset '" + name + "': temperature range exceeds [-60, 60] C");
  }
}

ClimatePreset algiers_csa() {
  ClimatePreset p;
  p.name = "algiers-csa";
  p.mean_annual_temp_c = 18.4;
  p.seasonal_amplitude_k = 7.5;
  p.diurnal_amplitude_k = 4.5;
  p.peak_ghi_wm2 = 1000.0;
  p.coldest_day = 25;
  p.latitude_deg = 36.7;
  return p;
}

ClimatePreset stuttgart_cfb() {
  ClimatePreset p;
  p.name = "stuttgart-cfb";
  p.mean_annual_temp_c = 9.5;
  p.seasonal_amplitude_k = 9.0;
  p.diurnal_amplitude_k = 4.0;
  p.peak_ghi_wm2 = 950.0;
  p.coldest_day = 15;
  p.latitude_deg = 48.8;
  return p;
}

WeatherSeries synthesize_weather(const ClimatePreset& preset, std::uint64_t seed) {
  preset.validate();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double lat = preset.latitude_deg * std::numbers::pi / 180.0;

  SplitStream rng(seed);
  std::vector<double> noise(kHoursPerYear);
  for (auto& n : noise) n = preset.noise_sigma_k * rng.normal();
  const double noise_mean = std::accumulate(noise.begin(), noise.end(), 0.0) / kHoursPerYear;

  std::vector<WeatherRecord> records(kHoursPerYear);
  double cloudiness = 1.0;
  for (int h = 0; h < kHoursPerYear; ++h) {
    const int day = h / 24;  // 0-based
    const int hod = h % 24;
    if (hod == 0) cloudiness = 0.3 + 0.7 * rng.uniform();

    const double t_days = day + 1 + hod / 24.0;
    const double seasonal = -preset.seasonal_amplitude_k *
                            std::cos(two_pi * (t_days - preset.coldest_day) / kDaysPerYear);
    const double diurnal = -preset.diurnal_amplitude_k * std::cos(two_pi * (hod - 5.0) / 24.0);

    const double declination =
        23.44 * std::numbers::pi / 180.0 * std::sin(two_pi * (284.0 + day + 1) / kDaysPerYear);
    const double hour_angle = (hod + 0.5 - 12.0) * 15.0 * std::numbers::pi / 180.0;
    const double sin_elevation = std::sin(lat) * std::sin(declination) +
                                 std::cos(lat) * std::cos(declination) * std::cos(hour_angle);

    auto& r = records[h];
    r.hour_of_year = h;
    r.outdoor_temp_c = preset.mean_annual_temp_c + seasonal + diurnal + (noise[h] - noise_mean);
    r.ghi_wm2 = sin_elevation > 0.0 ? preset.peak_ghi_wm2 * sin_elevation * cloudiness : 0.0;
  }
  return WeatherSeries(std::move(records));
}

WeatherSeries parse_weather_csv(const std::string& text) {
  using Kind = WeatherError::Kind;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw WeatherError(Kind::MissingColumn, 1, "empty file");
  ++line_no;
  const auto header = text::split(text::trim(line), ',');
  int col_hour = -1, col_temp = -1, col_ghi = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = text::trim(header[i]);
    if (name == "hour") col_hour = static_cast<int>(i);
    if (name == "temp_c") col_temp = static_cast<int>(i);
    if (name == "ghi_wm2") col_ghi = static_cast<int>(i);
  }
  for (auto [col, name] : {std::pair{col_hour, "hour"}, {col_temp, "temp_c"}, {col_ghi, "ghi_wm2"}}) {
    if (col < 0) throw WeatherError(Kind::MissingColumn, 1, std::string("header lacks column '") + name + "'");
  }
  const std::size_t width = header.size();

  std::vector<WeatherRecord> records;
  records.reserve(kHoursPerYear);
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty()) continue;
    const auto fields = text::split(trimmed, ',');
    if (fields.size() != width) {
      throw WeatherError(Kind::MissingColumn, line_no,
                         "expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    }
    const auto number = [&](int col) {
      const auto field = text::trim(fields[col]);
      const auto value = text::parse_double(field);
      if (!value) throw WeatherError(Kind::UnparsableNumber, line_no, "cannot parse '" + std::string(field) + "'");
      return *value;
    };
    WeatherRecord r;
    const double hour = number(col_hour);
    r.outdoor_temp_c = number(col_temp);
    r.ghi_wm2 = number(col_ghi);
    if (hour != std::floor(hour)) {
      throw WeatherError(Kind::UnparsableNumber, line_no, "hour must be an integer");
    }
    r.hour_of_year = static_cast<int>(hour);
    if (r.hour_of_year != static_cast<int>(records.size())) {
      throw WeatherError(Kind::NonMonotonicHours, line_no,
                         "expected hour " + std::to_string(records.size()) + ", got " +
                             std::to_string(r.hour_of_year));
    }
    if (r.ghi_wm2 < 0.0) {
      throw WeatherError(Kind::UnparsableNumber, line_no, "ghi_wm2 must be >= 0");
    }
    if (r.outdoor_temp_c < kMinTemp || r.outdoor_temp_c > kMaxTemp) {
      throw WeatherError(Kind::UnparsableNumber, line_no, "temp_c outside [-60, 60]");
    }
    records.push_back(r);
  }
  if (records.size() != static_cast<std::size_t>(kHoursPerYear)) {
    throw WeatherError(Kind::RecordCountNot8760, line_no,
                       "expected 8760 data rows, got " + std::to_string(records.size()));
  }
  return WeatherSeries(std::move(records));
}

WeatherSeries load_weather_csv(const std::filesystem::path& path) {
  return parse_weather_csv(text::read_file(path));
}

std::string to_csv(const WeatherSeries& series) {
  std::string out = "hour,temp_c,ghi_wm2\n";
  out.reserve(series.size() * 32);
  for (const auto& r : series.records()) {
    out += std::to_string(r.hour_of_year);
    out += ',';
    out += text::shortest(r.outdoor_temp_c);
    out += ',';
    out += text::shortest(r.ghi_wm2);
    out += '\n';
  }
  return out;
}

void write_weather_csv(const WeatherSeries& series, const std::filesystem::path& path) {
  text::write_file(path, to_csv(series));
}

}  // namespace smarthome::weather
