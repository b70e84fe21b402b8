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

#include "smarthome/thermal.hpp"

#include <algorithm>
#include <cmath>

#include "smarthome/error.hpp"
#include "smarthome/text.hpp"

namespace smarthome::thermal {

using occupancy::Occupancy;

namespace {

constexpr double kSecondsPerHour = 3600.0;

// End-of-hour temperature for a constant net gain (W) besides conduction.
double end_temp(double t0, double t_out, double gains_w, double ua, double decay) {
  return t0 + (t_out + gains_w / ua - t0) * decay;
}

// Constant gain that makes the zone finish the hour exactly at `target`.
double gains_for_target(double t0, double t_out, double target, double ua, double decay) {
  return ua * ((target - t0) / decay + t0 - t_out);
}

bool asleep(const BuildingParams& p, int hod) {
  if (p.sleep_start_hour == p.sleep_end_hour) return false;
  if (p.sleep_start_hour > p.sleep_end_hour) return hod >= p.sleep_start_hour || hod < p.sleep_end_hour;
  return hod >= p.sleep_start_hour && hod < p.sleep_end_hour;
}

}  // namespace

void BuildingParams::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw SemanticError(std::string("building: ") + name + " must be > 0");
    }
  };
  positive(floor_area_m2, "floor_area");
  positive(ua_w_per_k, "ua");
  positive(capacitance_j_per_k, "capacitance");
  positive(window_solar_area_m2, "window_solar_area");
  positive(internal_gain_per_person_w, "internal_gain_per_person");
  positive(heater_efficiency, "heater_efficiency");
  positive(cooling_cop, "cooling_cop");
  positive(lighting_power_density_w_m2, "lighting_power_density");
  positive(hvac_capacity_w, "hvac_capacity");
  positive(daylight_threshold_wm2, "daylight_threshold");
  if (occupants < 1) throw SemanticError("building: occupants must be >= 1");
  if (heater_efficiency > 1.0) throw SemanticError("building: heater_efficiency must be <= 1");
  if (cooling_cop < 1.0) throw SemanticError("building: cooling_cop must be >= 1");
  for (int h : {sleep_start_hour, sleep_end_hour}) {
    if (h < 0 || h > 23) throw SemanticError("building: sleep hours must lie in 0..23");
  }
}

ZoneState step_zone(const ZoneState& state, const weather::WeatherRecord& weather,
                    const control::Setpoints& setpoints, const BuildingParams& params,
                    double internal_gains_w) {
  if (!(setpoints.heat_c < setpoints.cool_c)) {
    throw SemanticError("InvalidSetpoints: heat setpoint " + text::shortest(setpoints.heat_c) +
                        " must be below cool setpoint " + text::shortest(setpoints.cool_c));
  }
  const double ua = params.ua_w_per_k;
  // 1 - exp(-UA t / C), accurate for tiny UA.
  const double decay = -std::expm1(-ua * kSecondsPerHour / params.capacitance_j_per_k);
  const double t0 = state.indoor_temp_c;
  const double t_out = weather.outdoor_temp_c;
  const double free_gains = weather.ghi_wm2 * params.window_solar_area_m2 + internal_gains_w;

  ZoneState next;
  const double t_free = end_temp(t0, t_out, free_gains, ua, decay);
  double q_hvac = 0.0;
  if (t_free < setpoints.heat_c) {
    q_hvac = std::clamp(gains_for_target(t0, t_out, setpoints.heat_c, ua, decay) - free_gains, 0.0,
                        params.hvac_capacity_w);
    next.hvac_mode = HvacMode::Heat;
  } else if (t_free > setpoints.cool_c) {
    q_hvac = std::clamp(gains_for_target(t0, t_out, setpoints.cool_c, ua, decay) - free_gains,
                        -params.hvac_capacity_w, 0.0);
    next.hvac_mode = HvacMode::Cool;
  }
  next.indoor_temp_c = next.hvac_mode == HvacMode::Off ? t_free : end_temp(t0, t_out, free_gains + q_hvac, ua, decay);
  next.delivered_heat_wh = q_hvac * (kSecondsPerHour / 3600.0);
  return next;
}

bool comfort_cooling_demand(double indoor_temp_c, bool occupied, double limit_c) {
  return occupied && indoor_temp_c > limit_c;
}

bool comfort_cooling_demand(const control::ControlPolicy& policy, double indoor_temp_c,
                            const control::HourContext& hour, double limit_c) {
  bool present = true;
  switch (policy.kind) {
    case control::ScenarioKind::Baseline: present = true; break;
    case control::ScenarioKind::LowCost: present = !hour.scheduled_absence; break;
    case control::ScenarioKind::Extended: present = hour.state == Occupancy::Occupied; break;
  }
  return comfort_cooling_demand(indoor_temp_c, present, limit_c);
}

double lighting_demand(double ghi_wm2, const LightingContext& ctx, control::LightingMode mode,
                       const BuildingParams& params) {
  if (asleep(params, ctx.hour_of_day)) return 0.0;
  const double full = params.installed_lighting_w();
  const bool dark = ghi_wm2 < params.daylight_threshold_wm2;
  switch (mode) {
    case control::LightingMode::Manual:
      // Nobody turns the lights on from the office or the beach; forgotten
      // lights during unplanned absences keep burning.
      if (ctx.state == Occupancy::Vacation || ctx.scheduled_absence) return 0.0;
      return dark ? full : 0.0;
    case control::LightingMode::Scheduled:
      return dark && !ctx.scheduled_absence ? full : 0.0;
    case control::LightingMode::SensorDaylight: {
      if (ctx.state != Occupancy::Occupied) return 0.0;
      const double fraction = std::clamp(1.0 - ghi_wm2 / params.daylight_threshold_wm2, 0.0, 1.0);
      return full * fraction;
    }
  }
  return 0.0;
}

std::string trace_to_csv(const std::vector<HourlyRecord>& trace) {
  std::string out = "hour,temp_in_c,heat_wh,cool_wh,light_wh\n";
  for (const auto& r : trace) {
    out += std::to_string(r.hour) + ',' + text::fixed(r.temp_in_c, 3) + ',' + text::fixed(r.heat_wh, 3) + ',' +
           text::fixed(r.cool_wh, 3) + ',' + text::fixed(r.light_wh, 3) + '\n';
  }
  return out;
}

SimulationResult simulate_year(const weather::WeatherSeries& weather,
                               const occupancy::OccupancyProfile& profile,
                               const control::ControlPolicy& policy, const BuildingParams& params,
                               const SimulationOptions& options) {
  if (weather.size() != profile.size()) {
    throw SemanticError("LengthMismatch: weather has " + std::to_string(weather.size()) +
                        " hours, occupancy profile " + std::to_string(profile.size()));
  }
  params.validate();
  policy.validate();

  const std::size_t hours = weather.size();
  const int warmup = std::clamp(options.warmup_hours, 0, static_cast<int>(hours));

  SimulationResult result;
  if (options.keep_trace) result.trace.reserve(hours);

  ZoneState zone;
  zone.indoor_temp_c = 0.5 * (policy.heat_setpoint_c + policy.cool_setpoint_c);
  int away_streak = 0;
  double heat_wh = 0.0, cool_wh = 0.0, light_wh = 0.0;

  // Warm-up replays the first `warmup` hours to settle the thermal mass.
  for (std::size_t i = 0; i < hours + static_cast<std::size_t>(warmup); ++i) {
    const bool recording = i >= static_cast<std::size_t>(warmup);
    const std::size_t h = recording ? i - warmup : i;
    if (h == 0) away_streak = 0;

    const auto& w = weather[h];
    const Occupancy state = profile[h];
    away_streak = state == Occupancy::Occupied ? 0 : away_streak + 1;

    control::HourContext ctx{state, away_streak, profile.scheduled_absence(h)};
    control::Setpoints sp = control::effective_setpoints(policy, ctx);
    if (comfort_cooling_demand(policy, zone.indoor_temp_c, ctx, params.comfort_cooling_limit_c)) {
      sp.cool_c = std::max(std::min(sp.cool_c, params.comfort_cooling_limit_c), sp.heat_c + 0.5);
    }

    const double internal_w =
        state == Occupancy::Occupied ? params.occupants * params.internal_gain_per_person_w : 0.0;
    const double t_start = zone.indoor_temp_c;
    zone = step_zone(zone, w, sp, params, internal_w);
    if (!recording) continue;

    HourlyRecord rec;
    rec.hour = static_cast<int>(h);
    rec.temp_start_c = t_start;
    rec.temp_in_c = zone.indoor_temp_c;
    rec.temp_out_c = w.outdoor_temp_c;
    rec.solar_w = w.ghi_wm2 * params.window_solar_area_m2;
    rec.internal_w = internal_w;
    rec.hvac_w = zone.delivered_heat_wh;
    rec.heat_wh = zone.delivered_heat_wh > 0.0 ? zone.delivered_heat_wh / params.heater_efficiency : 0.0;
    rec.cool_wh = zone.delivered_heat_wh < 0.0 ? -zone.delivered_heat_wh / params.cooling_cop : 0.0;
    const LightingContext lctx{state, ctx.scheduled_absence, static_cast<int>(h % 24)};
    rec.light_wh = lighting_demand(w.ghi_wm2, lctx, policy.lighting_mode, params);

    heat_wh += rec.heat_wh;
    cool_wh += rec.cool_wh;
    light_wh += rec.light_wh;
    if (options.keep_trace) result.trace.push_back(rec);
  }

  result.heating_kwh = heat_wh / 1000.0;
  result.cooling_kwh = cool_wh / 1000.0;
  result.lighting_kwh = light_wh / 1000.0;
  return result;
}

}  // namespace smarthome::thermal
