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

#include "smarthome/report.hpp"

#include <cmath>

#include "smarthome/error.hpp"
#include "smarthome/text.hpp"

namespace smarthome::report {

using text::fixed;

Json simulation_to_json(const thermal::SimulationResult& r, const std::string& scenario,
                        const std::string& weather) {
  return Json{{"scenario", scenario},
              {"weather", weather},
              {"heating_kwh", r.heating_kwh},
              {"cooling_kwh", r.cooling_kwh},
              {"lighting_kwh", r.lighting_kwh},
              {"electricity_kwh", r.electricity_kwh()},
              {"gas_kwh", r.gas_kwh()},
              {"total_kwh", r.total_kwh()}};
}

thermal::SimulationResult simulation_from_json(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("result")) return simulation_from_json(j.at("result"), path + ".result");
  if (!j.is_object()) throw SchemaError("'" + path + "': expected a simulation result object");
  thermal::SimulationResult r;
  const auto number = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw SchemaError("'" + path + "." + key + "': required number");
    }
    const double v = j.at(key).get<double>();
    if (v < 0.0) throw SemanticError("'" + path + "." + key + "': energy must be >= 0");
    return v;
  };
  r.heating_kwh = number("heating_kwh");
  r.cooling_kwh = number("cooling_kwh");
  r.lighting_kwh = number("lighting_kwh");
  return r;
}

std::string simulation_csv_header() { return "scenario,weather,heating_kwh,cooling_kwh,lighting_kwh,total_kwh\n"; }

std::string simulation_csv_row(const thermal::SimulationResult& r, const std::string& scenario,
                               const std::string& weather) {
  return scenario + ',' + weather + ',' + fixed(r.heating_kwh, 0) + ',' + fixed(r.cooling_kwh, 0) + ',' +
         fixed(r.lighting_kwh, 0) + ',' + fixed(r.total_kwh(), 0) + '\n';
}

Json indicators_to_json(const indicators::IndicatorReport& r) {
  Json emissions = Json::array();
  for (const auto& e : r.emissions) {
    emissions.push_back(Json{{"pollutant", e.key},
                             {"name", e.pollutant},
                             {"unit", e.mass_unit},
                             {"annual", e.annual},
                             {"lifetime", e.lifetime}});
  }
  Json j;
  j["scenario"] = r.scenario;
  j["price_book"] = r.price_book;
  j["investment_eur"] = r.econ.investment_eur;
  j["discount_rate"] = r.econ.discount_rate;
  j["horizon_years"] = r.econ.horizon_years;
  j["delta_e_by_end_use"] = Json{{"heating_kwh", r.delta_e.heating_kwh},
                                 {"cooling_kwh", r.delta_e.cooling_kwh},
                                 {"lighting_kwh", r.delta_e.lighting_kwh}};
  j["delta_e_annual_kwh"] = r.delta_e_annual_kwh;
  j["delta_e_lifetime_kwh"] = r.delta_e_lifetime_kwh;
  j["annual_cost_saving_eur"] = r.annual_cost_saving_eur;
  j["payback_years"] = r.payback.status == indicators::PaybackStatus::ZeroSavings ? Json(nullptr)
                                                                                 : Json(r.payback.years);
  j["payback_status"] = indicators::to_string(r.payback.status);
  j["npv_eur"] = r.npv_eur;
  j["irr_per_year"] = r.irr_per_year ? Json(*r.irr_per_year) : Json(nullptr);
  j["irr_status"] = r.irr_per_year ? "ok" : "NotDefined";
  j["adi_eur"] = r.adi_eur;
  j["emissions"] = emissions;
  j["degenerate"] = r.degenerate();
  return j;
}

std::string indicators_to_csv(const indicators::IndicatorReport& r) {
  std::string out =
      "row,scenario,price_book,delta_e_annual_kwh,delta_e_lifetime_kwh,annual_cost_saving_eur,payback_years,"
      "payback_status,npv_eur,irr_per_year,adi_eur,pollutant,unit,annual,lifetime\n";
  out += "summary," + r.scenario + ',' + r.price_book + ',' + fixed(r.delta_e_annual_kwh, 0) + ',' +
         fixed(r.delta_e_lifetime_kwh, 0) + ',' + fixed(r.annual_cost_saving_eur, 2) + ',' +
         (r.payback.status == indicators::PaybackStatus::ZeroSavings ? "" : fixed(r.payback.years, 3)) + ',' +
         indicators::to_string(r.payback.status) + ',' + fixed(r.npv_eur, 2) + ',' +
         (r.irr_per_year ? fixed(*r.irr_per_year, 3) : "NotDefined") + ',' + fixed(r.adi_eur, 2) + ",,,,\n";
  for (const auto& e : r.emissions) {
    out += "emission," + r.scenario + ',' + r.price_book + ",,,,,,,,," + e.key + ',' + e.mass_unit + ',' +
           fixed(e.annual, 3) + ',' + fixed(e.lifetime, 3) + '\n';
  }
  return out;
}

std::string describe_payback(const indicators::Payback& p) {
  if (p.status == indicators::PaybackStatus::ZeroSavings) return "no savings";
  if (p.status == indicators::PaybackStatus::NeverPaysBack) return "never";
  if (p.years < 1.0) return "~" + fixed(p.years * 12.0, 1) + " months";
  int years = static_cast<int>(std::floor(p.years));
  int months = static_cast<int>(std::lround((p.years - years) * 12.0));
  if (months == 12) {
    ++years;
    months = 0;
  }
  std::string out = "~" + std::to_string(years) + (years == 1 ? " year" : " years");
  if (months > 0) out += ", " + std::to_string(months) + (months == 1 ? " month" : " months");
  return out;
}

}  // namespace smarthome::report
