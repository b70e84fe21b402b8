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

namespace smarthome::report {

using config::Json;

// Annual totals of one run. Full double precision; see the CSV writers for
// the fixed-decimal presentation.
Json simulation_to_json(const thermal::SimulationResult& result, const std::string& scenario,
                        const std::string& weather);
// Accepts the object above, or a simulate response wrapping it in "result".
thermal::SimulationResult simulation_from_json(const Json& j, const std::string& path);
std::string simulation_csv_header();
std::string simulation_csv_row(const thermal::SimulationResult& result, const std::string& scenario,
                               const std::string& weather);

Json indicators_to_json(const indicators::IndicatorReport& report);
// One summary row followed by one row per pollutant.
std::string indicators_to_csv(const indicators::IndicatorReport& report);

// Payback as a homeowner would say it: "~2.5 months", "~2 years, 4 months".
std::string describe_payback(const indicators::Payback& payback);

}  // namespace smarthome::report
