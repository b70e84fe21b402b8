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

#include <string>
#include <vector>

#include "smarthome/config.hpp"
#include "smarthome/indicators.hpp"
#include "smarthome/thermal.hpp"
#include "smarthome/weather.hpp"

namespace smarthome::engine {

inline constexpr const char* kEngineVersion = "1.0.0";

weather::WeatherSeries load_weather(const config::Config& cfg, const config::WeatherSource& source);

thermal::SimulationResult run_scenario(const config::Config& cfg, const weather::WeatherSeries& weather,
                                       control::ScenarioKind scenario, bool keep_trace = false);

struct ScenarioRun {
  std::string city;
  control::ScenarioKind scenario;
  thermal::SimulationResult result;
};

// All requested scenarios for one weather source; runs share the weather and
// occupancy data and execute concurrently.
std::vector<ScenarioRun> run_scenarios(const config::Config& cfg, const config::WeatherSource& source,
                                       const std::vector<control::ScenarioKind>& scenarios);

enum class CompareSource { Simulated, Published };

struct CompareRow {
  std::string city;
  std::string scenario;
  std::string indicator;
  double value;
  bool defined;
  std::string unit;
};

std::vector<CompareRow> compare(const config::Config& cfg, const std::vector<std::string>& cities,
                                CompareSource source);
// `city,scenario,indicator,value,unit`
std::string compare_csv(const std::vector<CompareRow>& rows);

}  // namespace smarthome::engine
