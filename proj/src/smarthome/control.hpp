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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smarthome/occupancy.hpp"

namespace smarthome::control {

enum class ScenarioKind { Baseline, LowCost, Extended };
enum class LightingMode { Manual, Scheduled, SensorDaylight };

inline constexpr std::array<ScenarioKind, 3> kAllScenarios = {
    ScenarioKind::Baseline, ScenarioKind::LowCost, ScenarioKind::Extended};

// CLI/API names: "baseline", "low-cost", "extended".
std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario(std::string_view name);
std::string scenario_names();  // "baseline, low-cost, extended"
std::string_view to_string(LightingMode mode);

struct Setpoints {
  double heat_c = 20.0;
  double cool_c = 24.0;
  bool operator==(const Setpoints&) const = default;
};

struct ControlPolicy {
  ScenarioKind kind = ScenarioKind::Baseline;
  double heat_setpoint_c = 20.0;
  double cool_setpoint_c = 24.0;
  double setback_heat_c = 16.0;
  double setback_cool_c = 28.0;
  int auto_away_delay_h = 2;
  double suggestion_offset_k = 1.0;
  LightingMode lighting_mode = LightingMode::Manual;

  void validate() const;
  bool operator==(const ControlPolicy&) const = default;
};

// Everything effective_setpoints may look at for one hour.
struct HourContext {
  occupancy::Occupancy state = occupancy::Occupancy::Occupied;
  int away_streak_h = 0;           // consecutive unoccupied hours up to and including this one
  bool scheduled_absence = false;  // the learned family schedule says nobody is home
};

Setpoints effective_setpoints(const ControlPolicy& policy, const HourContext& hour);

struct ScenarioSpec {
  ControlPolicy policy;
  double investment_eur = 0.0;
  std::vector<std::string> devices;
  std::string operation;
};

// Tunable knobs shared by the three policies.
struct ControlOptions {
  double comfort_heat_c = 20.0;
  double comfort_cool_c = 24.0;
  double setback_heat_c = 16.0;
  double setback_cool_c = 28.0;
  int auto_away_delay_h = 2;
  double suggestion_offset_k = 1.0;

  bool operator==(const ControlOptions&) const = default;
};

ControlPolicy make_policy(ScenarioKind kind, const ControlOptions& options = {});

// Baseline / LowCost / Extended in that order.
std::vector<ScenarioSpec> scenario_catalog(const ControlOptions& options = {});
ScenarioSpec scenario(ScenarioKind kind, const ControlOptions& options = {});

}  // namespace smarthome::control
