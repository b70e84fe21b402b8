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

#include "smarthome/smarthome.h"

#include <cstring>
#include <memory>
#include <string>

#include "smarthome/config.hpp"
#include "smarthome/engine.hpp"
#include "smarthome/error.hpp"
#include "smarthome/indicators.hpp"
#include "smarthome/report.hpp"
#include "smarthome/service.hpp"
#include "smarthome/tariff.hpp"
#include "smarthome/text.hpp"

using namespace smarthome;

struct shb_engine {
  service::Service service;
};

struct shb_run {
  std::string response;
  std::string scenario;
  std::string weather;
  thermal::SimulationResult result;
};

namespace {

thread_local std::string last_error;

shb_status fail(shb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
shb_status guarded(F&& body) {
  try {
    body();
    return SHB_OK;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Schema: return fail(SHB_ERR_SCHEMA, e.what());
      case ErrorKind::Semantic: return fail(SHB_ERR_SEMANTIC, e.what());
      case ErrorKind::Io: return fail(SHB_ERR_IO, e.what());
    }
    return fail(SHB_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(SHB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SHB_ERR_INTERNAL, "unknown error");
  }
}

config::Json parse_request(const char* json) {
  return config::parse_json_text(json == nullptr || *json == '\0' ? "{}" : json, "request");
}

#define SHB_REQUIRE(cond)                                          \
  do {                                                             \
    if (!(cond)) return fail(SHB_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* shb_version(void) { return engine::kEngineVersion; }

const char* shb_last_error(void) { return last_error.c_str(); }

void shb_free_string(char* s) { std::free(s); }

shb_status shb_engine_create(const char* config_path, const char* overrides_json, int allow_local_files,
                             shb_engine** out) {
  SHB_REQUIRE(out != nullptr);
  *out = nullptr;
  return guarded([&] {
    config::Config cfg = config_path != nullptr ? config::load_file(config_path) : config::defaults();
    if (overrides_json != nullptr && *overrides_json != '\0') {
      cfg = config::merged(cfg, config::parse_json_text(overrides_json, "overrides"));
    }
    *out = new shb_engine{service::Service(std::move(cfg), allow_local_files != 0)};
  });
}

void shb_engine_destroy(shb_engine* engine) { delete engine; }

shb_status shb_engine_config(const shb_engine* engine, char** out_json) {
  SHB_REQUIRE(engine != nullptr && out_json != nullptr);
  return guarded([&] { *out_json = copy_string(config::to_json(engine->service.base()).dump(2) + "\n"); });
}

shb_status shb_default_config(char** out_json) {
  SHB_REQUIRE(out_json != nullptr);
  return guarded([&] { *out_json = copy_string(config::to_json(config::defaults()).dump(2) + "\n"); });
}

shb_status shb_simulate(const shb_engine* engine, const char* request_json, int keep_trace, shb_run** out) {
  SHB_REQUIRE(engine != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    auto outcome = engine->service.simulate(parse_request(request_json), keep_trace != 0);
    auto run = std::make_unique<shb_run>();
    const auto& result = outcome.response.at("result");
    run->response = outcome.response.dump(2) + "\n";
    run->scenario = result.at("scenario").get<std::string>();
    run->weather = result.at("weather").get<std::string>();
    run->result = report::simulation_from_json(result, "result");
    run->result.trace = std::move(outcome.trace);
    *out = run.release();
  });
}

void shb_run_destroy(shb_run* run) { delete run; }

const char* shb_run_response(const shb_run* run) { return run != nullptr ? run->response.c_str() : ""; }
double shb_run_heating_kwh(const shb_run* run) { return run != nullptr ? run->result.heating_kwh : 0.0; }
double shb_run_cooling_kwh(const shb_run* run) { return run != nullptr ? run->result.cooling_kwh : 0.0; }
double shb_run_lighting_kwh(const shb_run* run) { return run != nullptr ? run->result.lighting_kwh : 0.0; }
size_t shb_run_trace_length(const shb_run* run) { return run != nullptr ? run->result.trace.size() : 0; }

shb_status shb_run_write_trace_csv(const shb_run* run, const char* path) {
  SHB_REQUIRE(run != nullptr && path != nullptr);
  if (run->result.trace.empty()) return fail(SHB_ERR_SEMANTIC, "run was simulated without a trace");
  return guarded([&] { text::write_file(path, thermal::trace_to_csv(run->result.trace)); });
}

shb_status shb_runs_csv(const shb_run* const* runs, size_t count, char** out_csv) {
  SHB_REQUIRE(runs != nullptr && out_csv != nullptr);
  return guarded([&] {
    std::string csv = report::simulation_csv_header();
    for (size_t i = 0; i < count; ++i) {
      if (runs[i] == nullptr) throw SemanticError("null run handle");
      csv += report::simulation_csv_row(runs[i]->result, runs[i]->scenario, runs[i]->weather);
    }
    *out_csv = copy_string(csv);
  });
}

shb_status shb_indicators(const shb_engine* engine, const char* request_json, const char* format, char** out) {
  SHB_REQUIRE(engine != nullptr && out != nullptr);
  const std::string fmt = format != nullptr ? format : "json";
  if (fmt != "json" && fmt != "csv") return fail(SHB_ERR_SCHEMA, "format must be json or csv");
  return guarded([&] {
    const auto outcome = engine->service.evaluate_indicators(parse_request(request_json));
    *out = copy_string(fmt == "json" ? outcome.response.dump(2) + "\n" : report::indicators_to_csv(outcome.report));
  });
}

shb_status shb_compare(const shb_engine* engine, const char* request_json, char** out_csv) {
  SHB_REQUIRE(engine != nullptr && out_csv != nullptr);
  return guarded([&] { *out_csv = copy_string(engine->service.compare_csv(parse_request(request_json))); });
}

shb_status shb_reference_comparison(const shb_engine* engine, const char* format, char** out) {
  SHB_REQUIRE(engine != nullptr && out != nullptr);
  const std::string fmt = format != nullptr ? format : "table";
  if (fmt != "table" && fmt != "json") return fail(SHB_ERR_SCHEMA, "format must be table or json");
  return guarded([&] {
    *out = copy_string(fmt == "table" ? engine->service.reference_comparison_table()
                                      : engine->service.reference_comparison().dump(2) + "\n");
  });
}

shb_status shb_presets(const shb_engine* engine, char** out_json) {
  SHB_REQUIRE(engine != nullptr && out_json != nullptr);
  return guarded([&] { *out_json = copy_string(engine->service.presets().dump(2) + "\n"); });
}

shb_status shb_handle_request(const shb_engine* engine, const char* method, const char* path, const char* body,
                              int* out_http_status, char** out_body, char** out_content_type) {
  SHB_REQUIRE(engine != nullptr && method != nullptr && path != nullptr && out_http_status != nullptr &&
              out_body != nullptr);
  return guarded([&] {
    const auto response = engine->service.handle(method, path, body != nullptr ? body : "");
    *out_http_status = response.status;
    *out_body = copy_string(response.body);
    if (out_content_type != nullptr) *out_content_type = copy_string(response.content_type);
  });
}

shb_status shb_npv(double investment, const double* flows, size_t count, double rate, double* out) {
  SHB_REQUIRE(flows != nullptr && out != nullptr);
  return guarded([&] { *out = indicators::net_present_value(investment, {flows, count}, rate); });
}

shb_status shb_adi(const double* flows, size_t count, double rate, double* out) {
  SHB_REQUIRE(flows != nullptr && out != nullptr);
  return guarded([&] { *out = indicators::additional_disposable_income({flows, count}, rate); });
}

shb_status shb_irr(double investment, const double* flows, size_t count, double* out, int* out_defined) {
  SHB_REQUIRE(flows != nullptr && out != nullptr && out_defined != nullptr);
  return guarded([&] {
    const auto irr = indicators::internal_rate_of_return(investment, {flows, count});
    *out_defined = irr.has_value() ? 1 : 0;
    *out = irr.value_or(0.0);
  });
}

shb_status shb_payback(double investment, double annual_saving, double* out_years) {
  SHB_REQUIRE(out_years != nullptr);
  const auto pb = indicators::payback_period(investment, annual_saving);
  *out_years = pb.years;
  switch (pb.status) {
    case indicators::PaybackStatus::Ok: return SHB_OK;
    case indicators::PaybackStatus::ZeroSavings: return fail(SHB_ERR_SEMANTIC, "ZeroSavings");
    case indicators::PaybackStatus::NeverPaysBack: return fail(SHB_ERR_SEMANTIC, "NeverPaysBack");
  }
  return SHB_OK;
}

shb_status shb_block_cost(double consumption_kwh, double threshold_kwh, double low_rate, double high_rate,
                          int periods_per_year, double* out_eur) {
  SHB_REQUIRE(out_eur != nullptr);
  return guarded([&] {
    tariff::Tariff t{tariff::Carrier::Electricity,
                     tariff::BlockRate{threshold_kwh, low_rate, high_rate, periods_per_year}};
    t.validate();
    *out_eur = tariff::annual_cost(consumption_kwh, t);
  });
}

}  // extern "C"
