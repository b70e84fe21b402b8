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

#include "smarthome/tariff.hpp"

#include <algorithm>
#include <cmath>

#include "smarthome/error.hpp"
#include "smarthome/text.hpp"

namespace smarthome::tariff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

const char* carrier_name(Carrier c) { return c == Carrier::Electricity ? "electricity" : "gas"; }

void check_rate(double rate, Carrier c) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw SemanticError(std::string("tariff (") + carrier_name(c) + "): rates must be >= 0");
  }
}

}  // namespace

void Tariff::validate() const {
  std::visit(overloaded{
                 [&](const FlatRate& f) { check_rate(f.rate_eur_per_kwh, carrier); },
                 [&](const BlockRate& b) {
                   check_rate(b.low_rate_eur_per_kwh, carrier);
                   check_rate(b.high_rate_eur_per_kwh, carrier);
                   if (b.low_rate_eur_per_kwh > b.high_rate_eur_per_kwh) {
                     throw SemanticError(std::string("tariff (") + carrier_name(carrier) +
                                         "): low_rate must not exceed high_rate");
                   }
                   if (!(b.threshold_kwh > 0.0)) {
                     throw SemanticError(std::string("tariff (") + carrier_name(carrier) +
                                         "): block threshold must be > 0");
                   }
                   if (b.periods_per_year < 1) {
                     throw SemanticError(std::string("tariff (") + carrier_name(carrier) +
                                         "): periods_per_year must be >= 1");
                   }
                 },
             },
             structure);
}

double Tariff::top_block_start_kwh() const {
  return std::visit(overloaded{
                        [](const FlatRate&) { return 0.0; },
                        [](const BlockRate& b) { return b.threshold_kwh * b.periods_per_year; },
                    },
                    structure);
}

void PriceBook::validate() const {
  if (electricity.carrier != Carrier::Electricity || gas.carrier != Carrier::Gas) {
    throw SemanticError("price book '" + name + "': one tariff per carrier required");
  }
  electricity.validate();
  gas.validate();
}

PriceBook germany_2019() {
  return PriceBook{"germany-2019", "Germany",
                   Tariff{Carrier::Electricity, FlatRate{0.3048}},
                   Tariff{Carrier::Gas, FlatRate{0.0609}}};
}

PriceBook algeria_2019() {
  return PriceBook{"algeria-2019", "Algeria",
                   Tariff{Carrier::Electricity, BlockRate{125.0, 0.014, 0.033, 1}},
                   Tariff{Carrier::Gas, BlockRate{1125.0, 0.0012, 0.0024, 1}}};
}

double annual_cost(double consumption_kwh, const Tariff& tariff) {
  if (consumption_kwh < 0.0) {
    throw SemanticError(std::string("NegativeConsumption: ") + carrier_name(tariff.carrier) + " consumption " +
                        text::shortest(consumption_kwh) + " kWh");
  }
  return std::visit(overloaded{
                        [&](const FlatRate& f) { return f.rate_eur_per_kwh * consumption_kwh; },
                        [&](const BlockRate& b) {
                          const double per_period = consumption_kwh / b.periods_per_year;
                          const double low = std::min(per_period, b.threshold_kwh);
                          const double high = per_period - low;
                          return b.periods_per_year *
                                 (low * b.low_rate_eur_per_kwh + high * b.high_rate_eur_per_kwh);
                        },
                    },
                    tariff.structure);
}

double annual_cost(const EnergyByCarrier& consumption, const PriceBook& book) {
  return annual_cost(consumption.electricity_kwh, book.electricity) + annual_cost(consumption.gas_kwh, book.gas);
}

double annual_cost_saving(const EnergyByCarrier& baseline, const EnergyByCarrier& scenario,
                          const PriceBook& book) {
  return annual_cost(baseline, book) - annual_cost(scenario, book);
}

double marginal_cost_saving(const EnergyByCarrier& savings, const PriceBook& book) {
  const auto one = [](double saved, const Tariff& t) {
    // The scenario consumption sits at the top block start (or above it for
    // negative savings), so the difference is billed entirely at the top rate.
    const double scenario = t.top_block_start_kwh() + std::max(0.0, -saved);
    return annual_cost(scenario + saved, t) - annual_cost(scenario, t);
  };
  return one(savings.electricity_kwh, book.electricity) + one(savings.gas_kwh, book.gas);
}

}  // namespace smarthome::tariff
