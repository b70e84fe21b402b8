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
#include <vector>

#include "smarthome/config.hpp"
#include "smarthome/indicators.hpp"
#include "smarthome/thermal.hpp"

namespace smarthome::service {

using config::Json;

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct IndicatorsOutcome {
  Json response;
  indicators::IndicatorReport report;
};

struct SimulateOutcome {
  Json response;
  std::vector<thermal::HourlyRecord> trace;
};

// Request handling shared by the CLI and the HTTP server. Holds only
// immutable configuration, so one instance may serve concurrent requests.
class Service {
 public:
  explicit Service(config::Config base, bool allow_local_files = false);

  const config::Config& base() const noexcept { return base_; }

  // Routes /healthz and /api/v1/*; never throws.
  Response handle(const std::string& method, const std::string& path, const std::string& body) const;

  // The operations behind the routes. These throw smarthome::Error.
  SimulateOutcome simulate(const Json& request, bool keep_trace = false) const;
  IndicatorsOutcome evaluate_indicators(const Json& request) const;
  Json indicators(const Json& request) const { return evaluate_indicators(request).response; }
  std::string compare_csv(const Json& request) const;
  Json presets() const;
  Json schema() const;
  Json reference_comparison() const;
  std::string reference_comparison_table() const;

 private:
  config::Config base_;
  bool allow_local_files_;
};

// Status and body for an error escaping one of the operations.
Response error_response(const std::exception& e);

}  // namespace smarthome::service
