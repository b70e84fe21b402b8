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

#include "smarthome/engine.hpp"

#include <future>

#include "smarthome/error.hpp"
#include "smarthome/occupancy.hpp"
#include "smarthome/published.hpp"
#include "smarthome/text.hpp"

namespace smarthome::engine {

using control::ScenarioKind;

weather::WeatherSeries load_weather(const config::Config& cfg, const config::WeatherSource& source) {
  if (source.preset) return weather::synthesize_weather(cfg.preset(*source.preset), cfg.weather_seed());
  if (source.csv) return weather::load_weather_csv(*source.csv);
  throw SchemaError("no weather source given");
}

thermal::SimulationResult run_scenario(const config::Config& cfg, const weather::WeatherSeries& weather,
                                       ScenarioKind scenario, bool keep_trace) {
  const auto profile = occupancy::build_profile(cfg.occupancy_options());
  const auto policy = control::make_policy(scenario, cfg.control);
  return thermal::simulate_year(weather, profile, policy, cfg.building, {.keep_trace = keep_trace});
}

std::vector<ScenarioRun> run_scenarios(const config::Config& cfg, const config::WeatherSource& source,
                                       const std::vector<ScenarioKind>& scenarios) {
  const auto weather = load_weather(cfg, source);
  const auto profile = occupancy::build_profile(cfg.occupancy_options());
  std::vector<std::future<thermal::SimulationResult>> jobs;
  for (auto kind : scenarios) {
    jobs.push_back(std::async(std::launch::async, [&cfg, &weather, &profile, kind] {
      return thermal::simulate_year(weather, profile, control::make_policy(kind, cfg.control), cfg.building);
    }));
  }
  std::vector<ScenarioRun> out;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    out.push_back({source.label(), scenarios[i], jobs[i].get()});
  }
  return out;
}

namespace {

void append_report(std::vector<CompareRow>& rows, const std::string& city, const std::string& scenario,
                   const indicators::IndicatorReport& r) {
  const auto add = [&](const std::string& name, double value, const std::string& unit, bool defined = true) {
    rows.push_back({city, scenario, name, value, defined, unit});
  };
  add("delta_e_heating_kwh", r.delta_e.heating_kwh, "kWh/a");
  add("delta_e_cooling_kwh", r.delta_e.cooling_kwh, "kWh/a");
  add("delta_e_lighting_kwh", r.delta_e.lighting_kwh, "kWh/a");
  add("delta_e_annual_kwh", r.delta_e_annual_kwh, "kWh/a");
  add("delta_e_lifetime_kwh", r.delta_e_lifetime_kwh, "kWh");
  add("annual_cost_saving_eur", r.annual_cost_saving_eur, "EUR/a");
  add("payback_years", r.payback.years, "a", r.payback.status == indicators::PaybackStatus::Ok);
  add("npv_eur", r.npv_eur, "EUR");
  add("irr_per_year", r.irr_per_year.value_or(0.0), "1/a", r.irr_per_year.has_value());
  add("adi_eur", r.adi_eur, "EUR");
  for (const auto& e : r.emissions) {
    add("emission_" + e.key + "_annual", e.annual, e.mass_unit + "/a");
    add("emission_" + e.key + "_lifetime", e.lifetime, e.mass_unit);
  }
  if (const auto* co2 = r.emission("co2")) add("co2_annual_t", co2->annual / 1000.0, "t/a");
}

}  // namespace

std::vector<CompareRow> compare(const config::Config& cfg, const std::vector<std::string>& cities,
                                CompareSource source) {
  std::vector<CompareRow> rows;
  if (source == CompareSource::Published) {
    const auto cases = published::reference_cases();
    for (const auto& city : cities) {
      cfg.preset(city);
      const auto& book = cfg.book_for(config::WeatherSource{city, std::nullopt});
      for (auto kind : control::kAllScenarios) {
        indicators::EnergySavings savings;
        for (const auto& c : cases) {
          if (c.city == city && c.scenario == kind) savings = c.savings;
        }
        const auto spec = control::scenario(kind, cfg.control);
        append_report(rows, city, std::string(control::to_string(kind)),
                      indicators::report_from_savings(savings, spec, book, cfg.economics, cfg.emission_factors));
      }
    }
    return rows;
  }

  std::vector<std::future<std::vector<ScenarioRun>>> jobs;
  for (const auto& city : cities) {
    cfg.preset(city);
    jobs.push_back(std::async(std::launch::async, [&cfg, city] {
      return run_scenarios(cfg, config::WeatherSource{city, std::nullopt},
                           {control::kAllScenarios.begin(), control::kAllScenarios.end()});
    }));
  }
  for (std::size_t i = 0; i < cities.size(); ++i) {
    const auto runs = jobs[i].get();
    const auto& book = cfg.book_for(config::WeatherSource{cities[i], std::nullopt});
    const auto& baseline = runs.front().result;
    for (const auto& run : runs) {
      const std::string scenario(control::to_string(run.scenario));
      rows.push_back({cities[i], scenario, "heating_kwh", run.result.heating_kwh, true, "kWh/a"});
      rows.push_back({cities[i], scenario, "cooling_kwh", run.result.cooling_kwh, true, "kWh/a"});
      rows.push_back({cities[i], scenario, "lighting_kwh", run.result.lighting_kwh, true, "kWh/a"});
      const auto spec = control::scenario(run.scenario, cfg.control);
      append_report(rows, cities[i], scenario,
                    indicators::full_report(baseline, run.result, spec, book, cfg.economics, cfg.emission_factors));
    }
  }
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::string out = "city,scenario,indicator,value,unit\n";
  for (const auto& r : rows) {
    int decimals = 3;
    if (r.unit.starts_with("kWh")) decimals = 0;
    if (r.unit.starts_with("EUR")) decimals = 2;
    out += r.city + ',' + r.scenario + ',' + r.indicator + ',' + (r.defined ? text::fixed(r.value, decimals) : "NA") +
           ',' + r.unit + '\n';
  }
  return out;
}

}  // namespace smarthome::engine
