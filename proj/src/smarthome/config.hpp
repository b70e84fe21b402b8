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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "smarthome/control.hpp"
#include "smarthome/indicators.hpp"
#include "smarthome/occupancy.hpp"
#include "smarthome/tariff.hpp"
#include "smarthome/thermal.hpp"
#include "smarthome/weather.hpp"

namespace smarthome::config {

using Json = nlohmann::ordered_json;

// Exactly one of preset / csv is set.
struct WeatherSource {
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> csv;

  std::string label() const;
  bool operator==(const WeatherSource&) const = default;
};

struct Config {
  std::uint64_t seed = 42;
  std::map<std::string, weather::ClimatePreset> weather_presets;
  thermal::BuildingParams building;
  occupancy::OccupancyOptions occupancy;
  control::ControlOptions control;
  std::map<std::string, tariff::PriceBook> price_books;
  std::map<std::string, std::string> city_price_books;  // weather preset -> price book
  indicators::EconParams economics;  // investment comes from the scenario
  indicators::EmissionFactorTable emission_factors;

  // Run selection.
  WeatherSource weather;
  std::vector<control::ScenarioKind> scenarios;
  std::optional<std::string> price_book;

  const weather::ClimatePreset& preset(const std::string& name) const;
  const tariff::PriceBook& book(const std::string& name) const;
  // Explicit run.price_book, else the city's default, else germany-2019.
  const tariff::PriceBook& book_for(const WeatherSource& source) const;

  std::uint64_t weather_seed() const { return seed; }
  std::uint64_t occupancy_seed() const { return seed ^ 0x9E3779B97F4A7C15ULL; }
  occupancy::OccupancyOptions occupancy_options() const;

  void validate() const;
};

Config defaults();

Json to_json(const Config& config);
// Strict: unknown keys and wrong types are SchemaErrors naming the field.
Config from_json(const Json& json);
// RFC 7386 merge of `patch` onto `base`, then parsed strictly.
Config merged(const Config& base, const Json& patch);

Json parse_json_text(const std::string& text, const std::string& origin);
Config load_file(const std::filesystem::path& path);

// Field-level converters reused by request parsing.
Json to_json(const weather::ClimatePreset& p);
Json to_json(const thermal::BuildingParams& p);
Json to_json(const occupancy::OccupancyOptions& o);
Json to_json(const control::ControlOptions& c);
Json to_json(const tariff::PriceBook& b);
Json to_json(const indicators::EconParams& e);
Json to_json(const indicators::EmissionFactorTable& t);

weather::ClimatePreset preset_from_json(const Json& j, const std::string& name, const std::string& path);
thermal::BuildingParams building_from_json(const Json& j, thermal::BuildingParams base, const std::string& path);
occupancy::OccupancyOptions occupancy_from_json(const Json& j, occupancy::OccupancyOptions base,
                                                const std::string& path);
control::ControlOptions control_from_json(const Json& j, control::ControlOptions base, const std::string& path);
tariff::PriceBook price_book_from_json(const Json& j, const std::string& name, const std::string& path);
indicators::EconParams economics_from_json(const Json& j, indicators::EconParams base, const std::string& path);

}  // namespace smarthome::config
