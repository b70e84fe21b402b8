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

#include "smarthome/published.hpp"

#include <cstdio>

#include "smarthome/report.hpp"
#include "smarthome/text.hpp"

namespace smarthome::published {

using control::ScenarioKind;

std::vector<ReferenceCase> reference_cases() {
  return {
      {"algiers-csa", "Algiers", ScenarioKind::LowCost, {3281, 3243, 0}, 6523, 65,
       "~2 years, 4 months", 2.0 + 4.0 / 12.0, 834, 50},
      {"algiers-csa", "Algiers", ScenarioKind::Extended, {3539, 6071, 1410}, 11020, 110,
       "~1 year, 9 months", 1.0 + 9.0 / 12.0, 1969, 58},
      {"stuttgart-cfb", "Stuttgart", ScenarioKind::LowCost, {7403, 2689, 0}, 10092, 100,
       "~2.5 months", 2.5 / 12.0, 15026, 481},
      {"stuttgart-cfb", "Stuttgart", ScenarioKind::Extended, {8393, 4466, 1363}, 14222, 142,
       "~2.5 months", 2.5 / 12.0, 23918, 439},
  };
}

std::vector<ReportedCo2> reported_extended_co2() { return {{"Algiers", 7.3}, {"Stuttgart", 5.7}}; }

std::vector<Comparison> compare_with_reference(const config::Config& cfg) {
  std::vector<Comparison> out;
  for (const auto& ref : reference_cases()) {
    const auto spec = control::scenario(ref.scenario, cfg.control);
    const auto& own = cfg.book(cfg.city_price_books.at(ref.city));
    const auto& other = cfg.book(ref.city == "algiers-csa" ? "germany-2019" : "algeria-2019");
    out.push_back({ref,
                   indicators::report_from_savings(ref.savings, spec, own, cfg.economics, cfg.emission_factors),
                   indicators::report_from_savings(ref.savings, spec, other, cfg.economics, cfg.emission_factors)});
  }
  return out;
}

std::string comparison_table(const std::vector<Comparison>& rows) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-10s %-9s %-13s | %-20s %-30s | %9s %9s | %7s %7s | %8s %8s | %s\n", "city",
                "scenario", "book", "payback (reported)", "payback (computed)", "NPV rep", "NPV comp", "IRR rep",
                "IRR cmp", "dE_T rep", "dE_T cmp", "PB other book");
  out += line;
  out += std::string(170, '-') + '\n';
  for (const auto& row : rows) {
    const auto& c = row.computed;
    const std::string computed_pb = report::describe_payback(c.payback) + " (" + text::fixed(c.payback.years, 3) + " a)";
    const std::string irr = c.irr_per_year ? text::fixed(*c.irr_per_year * 100.0, 0) + "%" : "n/a";
    const std::string other_pb = row.other_tariff.price_book + ": " + text::fixed(row.other_tariff.payback.years, 3) + " a";
    std::snprintf(line, sizeof line, "%-10s %-9s %-13s | %-20s %-30s | %9.0f %9.2f | %6.0f%% %7s | %8.0f %8.1f | %s\n",
                  row.reference.city_label.c_str(), std::string(control::to_string(row.reference.scenario)).c_str(),
                  c.price_book.c_str(), row.reference.payback_text.c_str(), computed_pb.c_str(),
                  row.reference.npv_eur, c.npv_eur, row.reference.irr_percent, irr.c_str(),
                  row.reference.cumulated_mwh, c.delta_e_lifetime_kwh / 1000.0, other_pb.c_str());
    out += line;
  }
  return out;
}

config::Json comparison_json(const std::vector<Comparison>& rows) {
  config::Json out = config::Json::array();
  for (const auto& row : rows) {
    const auto& r = row.reference;
    out.push_back(config::Json{
        {"city", r.city},
        {"scenario", std::string(control::to_string(r.scenario))},
        {"reported",
         {{"payback", r.payback_text},
          {"payback_years", r.payback_years},
          {"npv_eur", r.npv_eur},
          {"irr_per_year", r.irr_percent / 100.0},
          {"delta_e_annual_kwh", r.total_kwh},
          {"delta_e_lifetime_mwh", r.cumulated_mwh}}},
        {"computed", report::indicators_to_json(row.computed)},
        {"other_tariff", report::indicators_to_json(row.other_tariff)},
    });
  }
  return out;
}

}  // namespace smarthome::published
