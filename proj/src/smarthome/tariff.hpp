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
#include <string_view>
#include <variant>

namespace smarthome::tariff {

enum class Carrier { Electricity, Gas };

struct FlatRate {
  double rate_eur_per_kwh = 0.0;
  bool operator==(const FlatRate&) const = default;
};

// Increasing block: the first `threshold_kwh` of each billing period at the
// low rate, the remainder at the high rate. Annual consumption is spread
// evenly over the periods.
struct BlockRate {
  double threshold_kwh = 0.0;
  double low_rate_eur_per_kwh = 0.0;
  double high_rate_eur_per_kwh = 0.0;
  int periods_per_year = 1;
  bool operator==(const BlockRate&) const = default;
};

struct Tariff {
  Carrier carrier = Carrier::Electricity;
  std::variant<FlatRate, BlockRate> structure;

  void validate() const;
  // Consumption beyond which every further kWh is billed at the top rate.
  double top_block_start_kwh() const;
  bool operator==(const Tariff&) const = default;
};

struct EnergyByCarrier {
  double electricity_kwh = 0.0;
  double gas_kwh = 0.0;
  bool operator==(const EnergyByCarrier&) const = default;
};

struct PriceBook {
  std::string name;
  std::string country;
  Tariff electricity;
  Tariff gas;

  void validate() const;
  bool operator==(const PriceBook&) const = default;
};

PriceBook germany_2019();
PriceBook algeria_2019();

// Throws SemanticError("NegativeConsumption ...") for consumption < 0.
double annual_cost(double consumption_kwh, const Tariff& tariff);
double annual_cost(const EnergyByCarrier& consumption, const PriceBook& book);

// cost(baseline) - cost(scenario); negative savings are returned as is.
double annual_cost_saving(const EnergyByCarrier& baseline, const EnergyByCarrier& scenario,
                          const PriceBook& book);

// Values a saving against a baseline that sits in the top block after the
// saving, i.e. every saved kWh at the marginal (highest) rate. Used when only
// savings are known.
double marginal_cost_saving(const EnergyByCarrier& savings, const PriceBook& book);

}  // namespace smarthome::tariff
