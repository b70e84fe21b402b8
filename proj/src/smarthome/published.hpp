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

namespace smarthome::published {

// Annual savings of the reference study's EnergyPlus runs and the economic
// indicators it reported for them (rounded in the source).
struct ReferenceCase {
  std::string city;        // weather preset name
  std::string city_label;  // "Algiers", "Stuttgart"
  control::ScenarioKind scenario;
  indicators::EnergySavings savings;
  double total_kwh;        // as printed; equals the sum of end uses
  double cumulated_mwh;    // 10-year column
  std::string payback_text;
  double payback_years;    // payback_text in years
  double npv_eur;
  double irr_percent;
};

std::vector<ReferenceCase> reference_cases();

// Reported CO2 certificate figures for the extended installation, in tonnes.
// The labels are taken as printed; the arithmetic matches them swapped.
struct ReportedCo2 {
  std::string city_label;
  double tonnes;
};
std::vector<ReportedCo2> reported_extended_co2();

struct Comparison {
  ReferenceCase reference;
  indicators::IndicatorReport computed;       // with the city's own price book
  indicators::IndicatorReport other_tariff;   // same savings, the other country's book
};

// Runs every reference case through the indicator pipeline with the
// configured price books and economics.
std::vector<Comparison> compare_with_reference(const config::Config& cfg);

std::string comparison_table(const std::vector<Comparison>& rows);
config::Json comparison_json(const std::vector<Comparison>& rows);

}  // namespace smarthome::published
