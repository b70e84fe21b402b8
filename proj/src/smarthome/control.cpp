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

#include "smarthome/control.hpp"

#include "smarthome/error.hpp"

namespace smarthome::control {

using occupancy::Occupancy;

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Baseline: return "baseline";
    case ScenarioKind::LowCost: return "low-cost";
    case ScenarioKind::Extended: return "extended";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) {
  for (auto kind : kAllScenarios) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string scenario_names() { return "baseline, low-cost, extended"; }

std::string_view to_string(LightingMode mode) {
  switch (mode) {
    case LightingMode::Manual: return "manual";
    case LightingMode::Scheduled: return "scheduled";
    case LightingMode::SensorDaylight: return "sensor-daylight";
  }
  return "unknown";
}

void ControlPolicy::validate() const {
  if (!(heat_setpoint_c < cool_setpoint_c)) {
    throw SemanticError("control: heat setpoint must be below cool setpoint");
  }
  if (setback_heat_c > heat_setpoint_c) {
    throw SemanticError("control: setback_heat must not exceed the heat setpoint");
  }
  if (setback_cool_c < cool_setpoint_c) {
    throw SemanticError("control: setback_cool must not be below the cool setpoint");
  }
  if (auto_away_delay_h < 0) throw SemanticError("control: auto_away_delay must be >= 0");
  if (suggestion_offset_k < 0.0) throw SemanticError("control: suggestion_offset must be >= 0");
  if (kind == ScenarioKind::Extended &&
      !(heat_setpoint_c - suggestion_offset_k < cool_setpoint_c + suggestion_offset_k)) {
    throw SemanticError("control: suggestion offset collapses the deadband");
  }
}

Setpoints effective_setpoints(const ControlPolicy& policy, const HourContext& hour) {
  const Setpoints comfort{policy.heat_setpoint_c, policy.cool_setpoint_c};
  const Setpoints setback{policy.setback_heat_c, policy.setback_cool_c};

  switch (policy.kind) {
    case ScenarioKind::Baseline:
      return comfort;
    case ScenarioKind::LowCost:
      return hour.scheduled_absence ? setback : comfort;
    case ScenarioKind::Extended: {
      // Keeps the learned schedule of the low-cost thermostat and adds
      // auto-away on sensed absence plus accepted setpoint suggestions.
      if (hour.scheduled_absence || hour.state == Occupancy::Vacation) return setback;
      if (hour.state == Occupancy::Away && hour.away_streak_h >= policy.auto_away_delay_h) return setback;
      if (hour.state == Occupancy::Occupied) {
        return {comfort.heat_c - policy.suggestion_offset_k, comfort.cool_c + policy.suggestion_offset_k};
      }
      return comfort;
    }
  }
  return comfort;
}

ControlPolicy make_policy(ScenarioKind kind, const ControlOptions& options) {
  ControlPolicy p;
  p.kind = kind;
  p.heat_setpoint_c = options.comfort_heat_c;
  p.cool_setpoint_c = options.comfort_cool_c;
  p.setback_heat_c = options.setback_heat_c;
  p.setback_cool_c = options.setback_cool_c;
  p.auto_away_delay_h = options.auto_away_delay_h;
  p.suggestion_offset_k = options.suggestion_offset_k;
  switch (kind) {
    case ScenarioKind::Baseline: p.lighting_mode = LightingMode::Manual; break;
    case ScenarioKind::LowCost: p.lighting_mode = LightingMode::Scheduled; break;
    case ScenarioKind::Extended: p.lighting_mode = LightingMode::SensorDaylight; break;
  }
  p.validate();
  return p;
}

ScenarioSpec scenario(ScenarioKind kind, const ControlOptions& options) {
  ScenarioSpec spec;
  spec.policy = make_policy(kind, options);
  switch (kind) {
    case ScenarioKind::Baseline:
      spec.investment_eur = 0.0;
      spec.operation = "Manual control";
      break;
    case ScenarioKind::LowCost:
      spec.investment_eur = 268.93;
      spec.devices = {"thermostat", "lamp"};
      spec.operation = "Fixed schedule control";
      break;
    case ScenarioKind::Extended:
      spec.investment_eur = 528.35;
      spec.devices = {"thermostat", "lamp", "hub", "motion sensor", "light sensor"};
      spec.operation = "Sensor-based control";
      break;
  }
  return spec;
}

std::vector<ScenarioSpec> scenario_catalog(const ControlOptions& options) {
  std::vector<ScenarioSpec> out;
  for (auto kind : kAllScenarios) out.push_back(scenario(kind, options));
  return out;
}

}  // namespace smarthome::control
