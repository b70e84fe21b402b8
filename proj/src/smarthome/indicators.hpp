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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smarthome/control.hpp"
#include "smarthome/tariff.hpp"
#include "smarthome/thermal.hpp"

namespace smarthome::indicators {

struct EconParams {
  double discount_rate = 0.05;
  int horizon_years = 10;
  double investment_eur = 0.0;

  void validate() const;
  bool operator==(const EconParams&) const = default;
};

struct EmissionFactor {
  std::string key;        // e.g. "co2"
  std::string pollutant;  // human-readable
  std::string mass_unit;  // "g", "kg" or "mg" per kWh
  double coefficient = 0.0;
  bool operator==(const EmissionFactor&) const = default;
};

using EmissionFactorTable = std::vector<EmissionFactor>;

// German electricity mix, 2016.
EmissionFactorTable default_emission_factors();
void validate(const EmissionFactorTable& table);

// Annual savings by end use; heating is gas, cooling and lighting electricity.
struct EnergySavings {
  double heating_kwh = 0.0;
  double cooling_kwh = 0.0;
  double lighting_kwh = 0.0;

  double total_kwh() const { return heating_kwh + cooling_kwh + lighting_kwh; }
  tariff::EnergyByCarrier by_carrier() const { return {cooling_kwh + lighting_kwh, heating_kwh}; }
  bool operator==(const EnergySavings&) const = default;
};

// E_ref - E_i per end use; may be negative.
EnergySavings annual_energy_savings(const thermal::SimulationResult& reference,
                                    const thermal::SimulationResult& candidate);

double lifetime_energy_savings(double annual_savings_kwh, int horizon_years);
double lifetime_energy_savings(std::span<const double> yearly_savings_kwh);

enum class PaybackStatus { Ok, ZeroSavings, NeverPaysBack };
const char* to_string(PaybackStatus status);

struct Payback {
  PaybackStatus status = PaybackStatus::Ok;
  double years = 0.0;  // investment / saving; meaningless for ZeroSavings
};

Payback payback_period(double investment_eur, double annual_saving_eur);

// Sum of flows[t-1] / (1+r)^t for t = 1..T, minus the investment.
double net_present_value(double investment_eur, std::span<const double> flows, double rate);
double additional_disposable_income(std::span<const double> flows, double rate);

inline constexpr double kIrrLowerBound = -0.99;
inline constexpr double kIrrUpperBound = 1.0e4;  // 10^6 %
inline constexpr double kIrrTolerance = 1.0e-6;  // EUR

// Rate at which the NPV vanishes, found by bisection on the bounds above.
// nullopt when the NPV does not change sign there.
std::optional<double> internal_rate_of_return(double investment_eur, std::span<const double> flows);

struct EmissionSaving {
  std::string key;
  std::string pollutant;
  std::string mass_unit;
  double annual = 0.0;
  double lifetime = 0.0;
};

std::vector<EmissionSaving> emission_savings(double annual_savings_kwh, double lifetime_savings_kwh,
                                             const EmissionFactorTable& table);
double emission_mass(double savings_kwh, const EmissionFactor& factor);

struct IndicatorReport {
  std::string scenario;
  std::string price_book;
  EconParams econ;
  EnergySavings delta_e;
  double delta_e_annual_kwh = 0.0;
  double delta_e_lifetime_kwh = 0.0;
  double annual_cost_saving_eur = 0.0;
  Payback payback;
  double npv_eur = 0.0;
  std::optional<double> irr_per_year;
  double adi_eur = 0.0;
  std::vector<EmissionSaving> emissions;

  bool degenerate() const { return payback.status != PaybackStatus::Ok; }
  const EmissionSaving* emission(std::string_view key) const;
};

// Builds every indicator from annual savings and a constant yearly cash flow.
IndicatorReport compose_report(const EnergySavings& savings, double annual_cost_saving_eur,
                               const EconParams& econ, const EmissionFactorTable& table);

// Savings from two simulations, money from the full tariff on both.
IndicatorReport full_report(const thermal::SimulationResult& reference,
                            const thermal::SimulationResult& candidate, const control::ScenarioSpec& spec,
                            const tariff::PriceBook& book, EconParams econ, const EmissionFactorTable& table);

// Savings known without the underlying consumption: valued at marginal rates.
IndicatorReport report_from_savings(const EnergySavings& savings, const control::ScenarioSpec& spec,
                                    const tariff::PriceBook& book, EconParams econ,
                                    const EmissionFactorTable& table);

}  // namespace smarthome::indicators
