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
#include <string>
#include <vector>

#include "smarthome/control.hpp"
#include "smarthome/occupancy.hpp"
#include "smarthome/weather.hpp"

namespace smarthome::thermal {

struct BuildingParams {
  double floor_area_m2 = 150.0;
  double ua_w_per_k = 340.0;
  double capacitance_j_per_k = 40.0e6;
  double window_solar_area_m2 = 6.0;
  double internal_gain_per_person_w = 90.0;
  int occupants = 4;
  double heater_efficiency = 0.9;  // gas
  double cooling_cop = 3.0;        // electric
  double lighting_power_density_w_m2 = 10.0;
  double hvac_capacity_w = 12000.0;
  double daylight_threshold_wm2 = 120.0;
  // Nobody needs light while asleep, [sleep_start_hour, 24) U [0, sleep_end_hour).
  int sleep_start_hour = 23;
  int sleep_end_hour = 6;
  double comfort_cooling_limit_c = 25.0;

  void validate() const;
  double installed_lighting_w() const { return lighting_power_density_w_m2 * floor_area_m2; }
  bool operator==(const BuildingParams&) const = default;
};

enum class HvacMode { Off, Heat, Cool };

struct ZoneState {
  double indoor_temp_c = 20.0;
  HvacMode hvac_mode = HvacMode::Off;
  double delivered_heat_wh = 0.0;  // > 0 heating, < 0 cooling
};

// Advances the zone by one hour using the exact solution of
//   C dT/dt = UA (T_out - T) + Q_solar + Q_internal + Q_hvac
// with piecewise-constant inputs. Q_hvac is the idealised power that brings
// the zone back to the violated setpoint at the end of the hour, clipped at
// the HVAC capacity. Q_solar is GHI times the effective solar aperture.
ZoneState step_zone(const ZoneState& state, const weather::WeatherRecord& weather,
                    const control::Setpoints& setpoints, const BuildingParams& params,
                    double internal_gains_w);

// Strictly warmer than the limit and somebody present.
bool comfort_cooling_demand(double indoor_temp_c, bool occupied, double limit_c = 25.0);

// Presence as perceived by each control policy: the baseline thermostat is
// presence-blind, low-cost trusts the learned schedule, extended the sensors.
bool comfort_cooling_demand(const control::ControlPolicy& policy, double indoor_temp_c,
                            const control::HourContext& hour, double limit_c = 25.0);

struct LightingContext {
  occupancy::Occupancy state = occupancy::Occupancy::Occupied;
  bool scheduled_absence = false;
  int hour_of_day = 20;
};

// Electric lighting power in W.
//  Manual: full power in dark waking hours unless the family is on vacation or
//          at work; lights left on during unplanned weekend absences.
//  Scheduled: full power in dark waking hours the learned schedule marks as home.
//  SensorDaylight: only when actually occupied, dimmed linearly to zero as GHI
//          rises to the daylight threshold.
double lighting_demand(double ghi_wm2, const LightingContext& ctx, control::LightingMode mode,
                       const BuildingParams& params);

struct HourlyRecord {
  int hour = 0;
  double temp_start_c = 0.0;
  double temp_in_c = 0.0;  // end of hour
  double temp_out_c = 0.0;
  double solar_w = 0.0;
  double internal_w = 0.0;
  double hvac_w = 0.0;  // delivered thermal power, signed
  double heat_wh = 0.0;   // gas
  double cool_wh = 0.0;   // electricity
  double light_wh = 0.0;  // electricity

  bool operator==(const HourlyRecord&) const = default;
};

struct SimulationResult {
  double heating_kwh = 0.0;  // gas, site
  double cooling_kwh = 0.0;  // electricity
  double lighting_kwh = 0.0; // electricity
  std::vector<HourlyRecord> trace;  // empty unless requested

  double electricity_kwh() const { return cooling_kwh + lighting_kwh; }
  double gas_kwh() const { return heating_kwh; }
  double total_kwh() const { return heating_kwh + cooling_kwh + lighting_kwh; }

  bool operator==(const SimulationResult&) const = default;
};

// `hour,temp_in_c,heat_wh,cool_wh,light_wh`
std::string trace_to_csv(const std::vector<HourlyRecord>& trace);

struct SimulationOptions {
  bool keep_trace = false;
  int warmup_hours = 168;
};

SimulationResult simulate_year(const weather::WeatherSeries& weather,
                               const occupancy::OccupancyProfile& profile,
                               const control::ControlPolicy& policy, const BuildingParams& params,
                               const SimulationOptions& options = {});

}  // namespace smarthome::thermal
