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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "smarthome/error.hpp"

namespace smarthome::thermal {
namespace {

using control::ScenarioKind;
using occupancy::Occupancy;

weather::WeatherSeries constant_weather(double temp_c, double ghi) {
  std::vector<weather::WeatherRecord> r(weather::kHoursPerYear);
  for (int h = 0; h < weather::kHoursPerYear; ++h) r[h] = {h, temp_c, ghi};
  return weather::WeatherSeries(std::move(r));
}

struct Fixture {
  weather::WeatherSeries stuttgart = weather::synthesize_weather(weather::stuttgart_cfb(), 42);
  weather::WeatherSeries algiers = weather::synthesize_weather(weather::algiers_csa(), 42);
  occupancy::OccupancyProfile profile = occupancy::build_profile({});
  BuildingParams params;
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

// C dT/dt = UA (T_out - T) + Q integrated independently: the analytic
// trajectory sampled by composite Simpson quadrature.
double integrated_net_flow_j(double t0, double t_out, double q_w, const BuildingParams& p) {
  const double tau = p.capacitance_j_per_k / p.ua_w_per_k;
  const double t_inf = t_out + q_w / p.ua_w_per_k;
  const auto net = [&](double t) {
    const double temp = t_inf + (t0 - t_inf) * std::exp(-t / tau);
    return p.ua_w_per_k * (t_out - temp) + q_w;
  };
  constexpr int n = 2000;
  const double h = 3600.0 / n;
  double sum = net(0.0) + net(3600.0);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * net(i * h);
  return sum * h / 3.0;
}

TEST(StepZone, EquilibriumIsStationary) {
  BuildingParams p;
  const auto next = step_zone({22.0}, {0, 22.0, 0.0}, {20.0, 24.0}, p, 0.0);
  EXPECT_DOUBLE_EQ(next.indoor_temp_c, 22.0);
  EXPECT_EQ(next.delivered_heat_wh, 0.0);
  EXPECT_EQ(next.hvac_mode, HvacMode::Off);
}

TEST(StepZone, AdiabaticLimit) {
  BuildingParams p;
  p.ua_w_per_k = 1e-12;
  const auto next = step_zone({22.0}, {0, -10.0, 0.0}, {20.0, 24.0}, p, 0.0);
  EXPECT_NEAR(next.indoor_temp_c, 22.0, 1e-9);
  EXPECT_EQ(next.hvac_mode, HvacMode::Off);
}

TEST(StepZone, SteadyStateHeatEqualsUaTimesDeltaT) {
  BuildingParams p;
  p.hvac_capacity_w = 1e9;
  ZoneState z{20.0};
  for (int i = 0; i < 200; ++i) z = step_zone(z, {0, 0.0, 0.0}, {20.0, 24.0}, p, 0.0);
  EXPECT_NEAR(z.delivered_heat_wh, p.ua_w_per_k * 20.0, 1e-6);
  EXPECT_NEAR(z.indoor_temp_c, 20.0, 1e-9);
  EXPECT_EQ(z.hvac_mode, HvacMode::Heat);
}

TEST(StepZone, CapacityClipsAndZoneDrifts) {
  BuildingParams p;
  p.hvac_capacity_w = 1000.0;
  const auto z = step_zone({20.0}, {0, -20.0, 0.0}, {20.0, 24.0}, p, 0.0);
  EXPECT_DOUBLE_EQ(z.delivered_heat_wh, 1000.0);
  EXPECT_LT(z.indoor_temp_c, 20.0);
  const auto c = step_zone({24.0}, {0, 45.0, 1000.0}, {20.0, 24.0}, p, 0.0);
  EXPECT_DOUBLE_EQ(c.delivered_heat_wh, -1000.0);
  EXPECT_GT(c.indoor_temp_c, 24.0);
}

TEST(StepZone, InvalidSetpoints) {
  BuildingParams p;
  try {
    step_zone({20.0}, {0, 0.0, 0.0}, {24.0, 24.0}, p, 0.0);
    FAIL();
  } catch (const SemanticError& e) {
    EXPECT_NE(std::string(e.what()).find("InvalidSetpoints"), std::string::npos);
  }
}

TEST(StepZone, EnergyBalanceAgainstQuadrature) {
  BuildingParams p;
  for (double t0 : {12.0, 20.0, 27.0}) {
    for (double t_out : {-15.0, 5.0, 35.0}) {
      for (double ghi : {0.0, 400.0}) {
        const auto z = step_zone({t0}, {0, t_out, ghi}, {20.0, 24.0}, p, 360.0);
        const double q = ghi * p.window_solar_area_m2 + 360.0 + z.delivered_heat_wh;
        const double stored = p.capacitance_j_per_k * (z.indoor_temp_c - t0);
        const double flow = integrated_net_flow_j(t0, t_out, q, p);
        const double scale = std::max({std::abs(stored), std::abs(flow), p.ua_w_per_k * 3600.0});
        EXPECT_LT(std::abs(stored - flow) / scale, 1e-6) << t0 << " " << t_out << " " << ghi;
      }
    }
  }
}

TEST(Comfort, StrictThreshold) {
  EXPECT_TRUE(comfort_cooling_demand(26.0, true));
  EXPECT_FALSE(comfort_cooling_demand(25.0, true));
  EXPECT_FALSE(comfort_cooling_demand(26.0, false));
}

TEST(Comfort, PresenceAsSeenByPolicy) {
  const control::HourContext away{Occupancy::Away, 5, true};
  EXPECT_TRUE(comfort_cooling_demand(control::make_policy(ScenarioKind::Baseline), 30.0, away));
  EXPECT_FALSE(comfort_cooling_demand(control::make_policy(ScenarioKind::LowCost), 30.0, away));
  EXPECT_FALSE(comfort_cooling_demand(control::make_policy(ScenarioKind::Extended), 30.0, away));
  const control::HourContext home{Occupancy::Occupied, 0, false};
  EXPECT_TRUE(comfort_cooling_demand(control::make_policy(ScenarioKind::Extended), 25.5, home));
}

TEST(Lighting, Examples) {
  BuildingParams p;
  const double full = p.lighting_power_density_w_m2 * p.floor_area_m2;
  const LightingContext evening{Occupancy::Occupied, false, 20};
  EXPECT_DOUBLE_EQ(lighting_demand(0.0, evening, control::LightingMode::Manual, p), full);
  EXPECT_DOUBLE_EQ(lighting_demand(p.daylight_threshold_wm2, evening, control::LightingMode::SensorDaylight, p), 0.0);
  EXPECT_DOUBLE_EQ(lighting_demand(500.0, evening, control::LightingMode::SensorDaylight, p), 0.0);
  EXPECT_DOUBLE_EQ(lighting_demand(p.daylight_threshold_wm2 / 2, evening, control::LightingMode::SensorDaylight, p),
                   0.5 * full);
}

TEST(Lighting, AbsenceRules) {
  BuildingParams p;
  const double full = p.installed_lighting_w();
  const LightingContext vacation{Occupancy::Vacation, true, 20};
  const LightingContext work{Occupancy::Away, true, 17};
  const LightingContext unplanned{Occupancy::Away, false, 19};
  const LightingContext asleep{Occupancy::Occupied, false, 2};
  for (auto mode : {control::LightingMode::Manual, control::LightingMode::Scheduled,
                    control::LightingMode::SensorDaylight}) {
    EXPECT_EQ(lighting_demand(0.0, vacation, mode, p), 0.0);
    EXPECT_EQ(lighting_demand(0.0, work, mode, p), 0.0);
    EXPECT_EQ(lighting_demand(0.0, asleep, mode, p), 0.0);
  }
  // Forgotten lights burn when the schedule expects somebody home.
  EXPECT_EQ(lighting_demand(0.0, unplanned, control::LightingMode::Manual, p), full);
  EXPECT_EQ(lighting_demand(0.0, unplanned, control::LightingMode::Scheduled, p), full);
  EXPECT_EQ(lighting_demand(0.0, unplanned, control::LightingMode::SensorDaylight, p), 0.0);
}

TEST(SimulateYear, NoDemandInMildBrightWeather) {
  BuildingParams p;
  p.window_solar_area_m2 = 1e-3;
  const auto r = simulate_year(constant_weather(22.0, 150.0), fixture().profile,
                               control::make_policy(ScenarioKind::Baseline), p);
  EXPECT_EQ(r.heating_kwh, 0.0);
  EXPECT_EQ(r.cooling_kwh, 0.0);
  EXPECT_EQ(r.lighting_kwh, 0.0);
}

TEST(SimulateYear, TraceSumsMatchTotalsAndNoSimultaneousHvac) {
  const auto& f = fixture();
  for (auto kind : control::kAllScenarios) {
    const auto r = simulate_year(f.algiers, f.profile, control::make_policy(kind), f.params, {.keep_trace = true});
    ASSERT_EQ(r.trace.size(), 8760u);
    double heat = 0, cool = 0, light = 0;
    for (const auto& h : r.trace) {
      ASSERT_FALSE(h.heat_wh > 0.0 && h.cool_wh > 0.0) << "hour " << h.hour;
      ASSERT_LE(std::abs(h.hvac_w), f.params.hvac_capacity_w);
      ASSERT_GE(h.light_wh, 0.0);
      heat += h.heat_wh;
      cool += h.cool_wh;
      light += h.light_wh;
    }
    EXPECT_NEAR(heat / 1000.0, r.heating_kwh, 1e-6 * std::max(1.0, r.heating_kwh));
    EXPECT_NEAR(cool / 1000.0, r.cooling_kwh, 1e-6 * std::max(1.0, r.cooling_kwh));
    EXPECT_NEAR(light / 1000.0, r.lighting_kwh, 1e-6 * std::max(1.0, r.lighting_kwh));
  }
}

TEST(SimulateYear, EveryStepBalancesEnergy) {
  const auto& f = fixture();
  const auto r = simulate_year(f.stuttgart, f.profile, control::make_policy(ScenarioKind::Extended), f.params,
                               {.keep_trace = true});
  double worst = 0.0;
  for (const auto& h : r.trace) {
    const double q = h.solar_w + h.internal_w + h.hvac_w;
    const double stored = f.params.capacitance_j_per_k * (h.temp_in_c - h.temp_start_c);
    const double flow = integrated_net_flow_j(h.temp_start_c, h.temp_out_c, q, f.params);
    const double scale = std::max({std::abs(stored), std::abs(flow), f.params.ua_w_per_k * 3600.0});
    worst = std::max(worst, std::abs(stored - flow) / scale);
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(SimulateYear, Deterministic) {
  const auto& f = fixture();
  const auto policy = control::make_policy(ScenarioKind::Extended);
  EXPECT_EQ(simulate_year(f.stuttgart, f.profile, policy, f.params, {.keep_trace = true}),
            simulate_year(f.stuttgart, f.profile, policy, f.params, {.keep_trace = true}));
}

TEST(SimulateYear, LowerHeatSetpointNeverHeatsMore) {
  const auto& f = fixture();
  for (auto kind : control::kAllScenarios) {
    for (double heat : {21.0, 20.0, 19.0}) {
      control::ControlOptions hi, lo;
      hi.comfort_heat_c = heat;
      lo.comfort_heat_c = heat - 1.0;
      const auto a = simulate_year(f.stuttgart, f.profile, control::make_policy(kind, hi), f.params);
      const auto b = simulate_year(f.stuttgart, f.profile, control::make_policy(kind, lo), f.params);
      EXPECT_LE(b.heating_kwh, a.heating_kwh) << control::to_string(kind) << " " << heat;
    }
  }
}

TEST(SimulateYear, ClimateOrdering) {
  const auto& f = fixture();
  const auto policy = control::make_policy(ScenarioKind::Baseline);
  const auto s = simulate_year(f.stuttgart, f.profile, policy, f.params);
  const auto a = simulate_year(f.algiers, f.profile, policy, f.params);
  EXPECT_GT(s.heating_kwh, a.heating_kwh);
  EXPECT_GT(a.cooling_kwh, s.cooling_kwh);
}

TEST(SimulateYear, SavingsOrderingPerCity) {
  const auto& f = fixture();
  for (const auto* w : {&f.stuttgart, &f.algiers}) {
    const auto b = simulate_year(*w, f.profile, control::make_policy(ScenarioKind::Baseline), f.params);
    const auto l = simulate_year(*w, f.profile, control::make_policy(ScenarioKind::LowCost), f.params);
    const auto e = simulate_year(*w, f.profile, control::make_policy(ScenarioKind::Extended), f.params);
    EXPECT_LT(l.total_kwh(), b.total_kwh());
    EXPECT_LT(e.total_kwh(), l.total_kwh());
    EXPECT_EQ(l.lighting_kwh, b.lighting_kwh);
    EXPECT_LT(e.lighting_kwh, l.lighting_kwh);
  }
}

TEST(SimulateYear, InvalidBuildingRejected) {
  const auto& f = fixture();
  BuildingParams p;
  p.heater_efficiency = 1.2;
  EXPECT_THROW(simulate_year(f.stuttgart, f.profile, control::make_policy(ScenarioKind::Baseline), p),
               SemanticError);
  p = {};
  p.cooling_cop = 0.5;
  EXPECT_THROW(simulate_year(f.stuttgart, f.profile, control::make_policy(ScenarioKind::Baseline), p),
               SemanticError);
}

TEST(TraceCsv, Header) {
  const auto& f = fixture();
  const auto r = simulate_year(f.stuttgart, f.profile, control::make_policy(ScenarioKind::Baseline), f.params,
                               {.keep_trace = true});
  const auto csv = trace_to_csv(r.trace);
  EXPECT_EQ(csv.rfind("hour,temp_in_c,heat_wh,cool_wh,light_wh\n0,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8761);
}

}  // namespace
}  // namespace smarthome::thermal
