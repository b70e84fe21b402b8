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

#include "smarthome/indicators.hpp"

#include <cmath>
#include <numeric>

#include "smarthome/error.hpp"

namespace smarthome::indicators {

void EconParams::validate() const {
  if (!(discount_rate > -1.0) || !std::isfinite(discount_rate)) {
    throw SemanticError("economics: discount rate must be > -1");
  }
  if (horizon_years < 1) throw SemanticError("economics: horizon must be >= 1 year");
  if (!(investment_eur >= 0.0) || !std::isfinite(investment_eur)) {
    throw SemanticError("economics: investment must be >= 0");
  }
}

EmissionFactorTable default_emission_factors() {
  return {
      {"so2", "Sulfur dioxide", "g", 0.290},
      {"no2", "Nitrogen dioxide", "g", 0.440},
      {"particulate_matter", "Particulate matter", "g", 0.017},
      {"pm10", "PM10", "g", 0.015},
      {"co", "Carbon monoxide", "g", 0.230},
      {"co2", "CO2", "kg", 0.516},
      {"no", "NO", "g", 0.013},
      {"ch4", "CH4 (methane)", "g", 0.184},
      {"voc", "Volatile organic compounds", "g", 0.017},
      {"hg", "Mercury", "mg", 0.010},
  };
}

void validate(const EmissionFactorTable& table) {
  for (const auto& f : table) {
    if (!(f.coefficient >= 0.0) || !std::isfinite(f.coefficient)) {
      throw SemanticError("emission factor '" + f.key + "' must be >= 0");
    }
    if (f.mass_unit != "g" && f.mass_unit != "kg" && f.mass_unit != "mg") {
      throw SemanticError("emission factor '" + f.key + "': unit must be g, kg or mg per kWh");
    }
  }
}

EnergySavings annual_energy_savings(const thermal::SimulationResult& reference,
                                    const thermal::SimulationResult& candidate) {
  return {reference.heating_kwh - candidate.heating_kwh, reference.cooling_kwh - candidate.cooling_kwh,
          reference.lighting_kwh - candidate.lighting_kwh};
}

double lifetime_energy_savings(double annual_savings_kwh, int horizon_years) {
  if (horizon_years < 1) throw SemanticError("horizon must be >= 1 year");
  return annual_savings_kwh * horizon_years;
}

double lifetime_energy_savings(std::span<const double> yearly_savings_kwh) {
  if (yearly_savings_kwh.empty()) throw SemanticError("horizon must be >= 1 year");
  return std::accumulate(yearly_savings_kwh.begin(), yearly_savings_kwh.end(), 0.0);
}

const char* to_string(PaybackStatus status) {
  switch (status) {
    case PaybackStatus::Ok: return "ok";
    case PaybackStatus::ZeroSavings: return "ZeroSavings";
    case PaybackStatus::NeverPaysBack: return "NeverPaysBack";
  }
  return "unknown";
}

Payback payback_period(double investment_eur, double annual_saving_eur) {
  if (annual_saving_eur == 0.0) return {PaybackStatus::ZeroSavings, 0.0};
  const double years = investment_eur / annual_saving_eur;
  if (annual_saving_eur < 0.0) return {PaybackStatus::NeverPaysBack, years};
  return {PaybackStatus::Ok, years};
}

double additional_disposable_income(std::span<const double> flows, double rate) {
  if (flows.empty()) throw SemanticError("horizon must be >= 1 year");
  if (!(rate > -1.0)) throw SemanticError("discount rate must be > -1");
  double present = 0.0;
  double annuity = 0.0;
  double discount = 1.0;
  bool constant = true;
  for (double flow : flows) {
    discount *= 1.0 + rate;
    present += flow / discount;
    annuity += 1.0 / discount;
    constant = constant && flow == flows.front();
  }
  // Constant flows use the annuity factor, which is exactly T at r = 0.
  return constant ? flows.front() * annuity : present;
}

double net_present_value(double investment_eur, std::span<const double> flows, double rate) {
  return additional_disposable_income(flows, rate) - investment_eur;
}

std::optional<double> internal_rate_of_return(double investment_eur, std::span<const double> flows) {
  if (flows.empty()) throw SemanticError("horizon must be >= 1 year");
  double lo = kIrrLowerBound;
  double hi = kIrrUpperBound;
  double npv_lo = net_present_value(investment_eur, flows, lo);
  const double npv_hi = net_present_value(investment_eur, flows, hi);
  if (npv_lo == 0.0 && npv_hi == 0.0) return std::nullopt;  // identically zero: every rate is a root
  if (npv_lo == 0.0) return lo;
  if (npv_hi == 0.0) return hi;
  if (std::signbit(npv_lo) == std::signbit(npv_hi)) return std::nullopt;

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 2000; ++iter) {
    mid = 0.5 * (lo + hi);
    const double npv_mid = net_present_value(investment_eur, flows, mid);
    if (std::abs(npv_mid) < kIrrTolerance) break;
    if (mid <= lo || mid >= hi) break;  // interval exhausted at double precision
    if (std::signbit(npv_mid) == std::signbit(npv_lo)) {
      lo = mid;
      npv_lo = npv_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double emission_mass(double savings_kwh, const EmissionFactor& factor) { return factor.coefficient * savings_kwh; }

std::vector<EmissionSaving> emission_savings(double annual_savings_kwh, double lifetime_savings_kwh,
                                             const EmissionFactorTable& table) {
  std::vector<EmissionSaving> out;
  out.reserve(table.size());
  for (const auto& f : table) {
    out.push_back({f.key, f.pollutant, f.mass_unit, emission_mass(annual_savings_kwh, f),
                   emission_mass(lifetime_savings_kwh, f)});
  }
  return out;
}

const EmissionSaving* IndicatorReport::emission(std::string_view key) const {
  for (const auto& e : emissions) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

IndicatorReport compose_report(const EnergySavings& savings, double annual_cost_saving_eur,
                               const EconParams& econ, const EmissionFactorTable& table) {
  econ.validate();
  validate(table);
  IndicatorReport r;
  r.econ = econ;
  r.delta_e = savings;
  r.delta_e_annual_kwh = savings.total_kwh();
  r.delta_e_lifetime_kwh = lifetime_energy_savings(r.delta_e_annual_kwh, econ.horizon_years);
  r.annual_cost_saving_eur = annual_cost_saving_eur;
  r.payback = payback_period(econ.investment_eur, annual_cost_saving_eur);

  const std::vector<double> flows(static_cast<std::size_t>(econ.horizon_years), annual_cost_saving_eur);
  r.npv_eur = net_present_value(econ.investment_eur, flows, econ.discount_rate);
  r.irr_per_year = internal_rate_of_return(econ.investment_eur, flows);
  r.adi_eur = additional_disposable_income(flows, econ.discount_rate);
  r.emissions = emission_savings(r.delta_e_annual_kwh, r.delta_e_lifetime_kwh, table);
  return r;
}

IndicatorReport full_report(const thermal::SimulationResult& reference,
                            const thermal::SimulationResult& candidate, const control::ScenarioSpec& spec,
                            const tariff::PriceBook& book, EconParams econ, const EmissionFactorTable& table) {
  book.validate();
  econ.investment_eur = spec.investment_eur;
  const auto savings = annual_energy_savings(reference, candidate);
  const double saving_eur = tariff::annual_cost_saving({reference.electricity_kwh(), reference.gas_kwh()},
                                                       {candidate.electricity_kwh(), candidate.gas_kwh()}, book);
  auto r = compose_report(savings, saving_eur, econ, table);
  r.scenario = std::string(control::to_string(spec.policy.kind));
  r.price_book = book.name;
  return r;
}

IndicatorReport report_from_savings(const EnergySavings& savings, const control::ScenarioSpec& spec,
                                    const tariff::PriceBook& book, EconParams econ,
                                    const EmissionFactorTable& table) {
  book.validate();
  econ.investment_eur = spec.investment_eur;
  auto r = compose_report(savings, tariff::marginal_cost_saving(savings.by_carrier(), book), econ, table);
  r.scenario = std::string(control::to_string(spec.policy.kind));
  r.price_book = book.name;
  return r;
}

}  // namespace smarthome::indicators
