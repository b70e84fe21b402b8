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

#include "smarthome/service.hpp"

#include <set>

#include "smarthome/engine.hpp"
#include "smarthome/error.hpp"
#include "smarthome/published.hpp"
#include "smarthome/report.hpp"

namespace smarthome::service {

namespace {

// Tracks which request members were used so that unknown ones are rejected.
class Request {
 public:
  explicit Request(const Json& j) : json_(j) {
    if (!j.is_object()) throw SchemaError("request body must be a JSON object");
  }

  bool has(const char* key) const { return json_.contains(key) && !json_.at(key).is_null(); }

  const Json& take(const char* key) {
    used_.insert(key);
    return json_.at(key);
  }

  std::string string(const char* key) {
    const auto& v = take(key);
    if (!v.is_string()) throw SchemaError(std::string("'") + key + "': expected a string");
    return v.get<std::string>();
  }

  void ignore(const char* key) { used_.insert(key); }

  void finish() const {
    for (const auto& [key, value] : json_.items()) {
      if (!used_.contains(key)) throw SchemaError("'" + key + "': unknown field");
    }
  }

 private:
  const Json& json_;
  std::set<std::string> used_;
};

control::ScenarioKind scenario_field(Request& req, const char* key) {
  const auto name = req.string(key);
  const auto kind = control::parse_scenario(name);
  if (!kind) {
    throw SchemaError(std::string("'") + key + "': unknown scenario '" + name +
                      "' (valid: " + control::scenario_names() + ")");
  }
  return *kind;
}

// Applies seed, weather source and physical overrides of a request onto the
// base configuration. Returns true when the request names a weather source.
bool apply_run_fields(Request& req, config::Config& cfg, bool allow_files) {
  if (req.has("seed")) {
    const auto& v = req.take("seed");
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      throw SchemaError("'seed': expected a non-negative integer");
    }
    cfg.seed = v.get<std::uint64_t>();
  }
  if (req.has("building")) cfg.building = config::building_from_json(req.take("building"), cfg.building, "building");
  if (req.has("occupancy")) {
    cfg.occupancy = config::occupancy_from_json(req.take("occupancy"), cfg.occupancy, "occupancy");
  }
  if (req.has("control")) cfg.control = config::control_from_json(req.take("control"), cfg.control, "control");

  int sources = 0;
  config::WeatherSource source;
  for (const char* key : {"preset", "weather"}) {
    if (req.has(key)) {
      source.preset = req.string(key);
      ++sources;
    }
  }
  if (req.has("weather_csv")) {
    if (!allow_files) throw SchemaError("'weather_csv': local files are not accepted here");
    source.csv = req.string("weather_csv");
    ++sources;
  }
  if (sources > 1) throw SchemaError("give exactly one weather source ('preset' or 'weather_csv')");
  if (sources == 1) {
    if (source.preset) cfg.preset(*source.preset);
    cfg.weather = source;
  }
  cfg.building.validate();
  cfg.occupancy.validate();
  for (auto kind : control::kAllScenarios) control::make_policy(kind, cfg.control);
  return sources == 1;
}

Json run_echo(const config::Config& cfg) {
  Json weather = cfg.weather.preset ? Json{{"preset", *cfg.weather.preset}}
                                    : Json{{"csv", cfg.weather.csv ? cfg.weather.csv->string() : ""}};
  return Json{{"seed", cfg.seed},
              {"weather", weather},
              {"building", config::to_json(cfg.building)},
              {"occupancy", config::to_json(cfg.occupancy)},
              {"control", config::to_json(cfg.control)}};
}

indicators::EnergySavings savings_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("'savings': expected an object");
  indicators::EnergySavings s;
  std::set<std::string> known{"heating_kwh", "cooling_kwh", "lighting_kwh", "total_kwh"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw SchemaError("'savings." + key + "': unknown field");
    if (!value.is_number()) throw SchemaError("'savings." + key + "': expected a number");
  }
  s.heating_kwh = j.value("heating_kwh", 0.0);
  s.cooling_kwh = j.value("cooling_kwh", 0.0);
  s.lighting_kwh = j.value("lighting_kwh", 0.0);
  return s;
}

Json error_body(const std::string& kind, const std::string& message) {
  return Json{{"engine_version", engine::kEngineVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

Service::Service(config::Config base, bool allow_local_files)
    : base_(std::move(base)), allow_local_files_(allow_local_files) {
  base_.validate();
}

SimulateOutcome Service::simulate(const Json& body, bool keep_trace) const {
  Request req(body);
  config::Config cfg = base_;
  apply_run_fields(req, cfg, allow_local_files_);
  const auto kind = req.has("scenario") ? scenario_field(req, "scenario") : control::ScenarioKind::Baseline;
  req.finish();

  const auto weather = engine::load_weather(cfg, cfg.weather);
  auto result = engine::run_scenario(cfg, weather, kind, keep_trace);

  SimulateOutcome out;
  Json echo = run_echo(cfg);
  echo["scenario"] = std::string(control::to_string(kind));
  out.response = Json{{"engine_version", engine::kEngineVersion},
                      {"config", echo},
                      {"result", report::simulation_to_json(result, std::string(control::to_string(kind)),
                                                            cfg.weather.label())}};
  out.trace = std::move(result.trace);
  return out;
}

IndicatorsOutcome Service::evaluate_indicators(const Json& body) const {
  Request req(body);
  config::Config cfg = base_;
  const bool simulate = apply_run_fields(req, cfg, allow_local_files_);
  if (!req.has("scenario")) throw SchemaError("'scenario': required (valid: " + control::scenario_names() + ")");
  const auto kind = scenario_field(req, "scenario");

  indicators::EconParams econ = cfg.economics;
  auto spec = control::scenario(kind, cfg.control);
  if (req.has("economics")) {
    const auto& e = req.take("economics");
    econ.investment_eur = spec.investment_eur;
    econ = config::economics_from_json(e, econ, "economics");
    spec.investment_eur = econ.investment_eur;
  }
  econ.investment_eur = spec.investment_eur;
  econ.validate();

  tariff::PriceBook book;
  if (req.has("price_book")) {
    const auto& b = req.take("price_book");
    if (b.is_string()) {
      book = cfg.book(b.get<std::string>());
    } else {
      book = config::price_book_from_json(b, "custom", "price_book");
    }
  } else {
    book = cfg.book_for(cfg.weather);
  }
  book.validate();

  const bool has_savings = req.has("savings");
  const bool has_results = req.has("reference") || req.has("candidate");
  if (static_cast<int>(has_savings) + static_cast<int>(has_results) + static_cast<int>(simulate) != 1) {
    throw SchemaError("give exactly one energy source: 'savings', 'reference'+'candidate', or a weather 'preset'");
  }

  indicators::IndicatorReport report;
  std::string source;
  if (has_savings) {
    const auto savings = savings_from_json(req.take("savings"));
    if (req.has("baseline")) {
      const auto baseline = report::simulation_from_json(req.take("baseline"), "baseline");
      thermal::SimulationResult candidate = baseline;
      candidate.heating_kwh -= savings.heating_kwh;
      candidate.cooling_kwh -= savings.cooling_kwh;
      candidate.lighting_kwh -= savings.lighting_kwh;
      if (candidate.heating_kwh < 0 || candidate.cooling_kwh < 0 || candidate.lighting_kwh < 0) {
        throw SemanticError("'savings': exceed the given baseline consumption");
      }
      report = indicators::full_report(baseline, candidate, spec, book, econ, cfg.emission_factors);
      source = "savings+baseline";
    } else {
      report = indicators::report_from_savings(savings, spec, book, econ, cfg.emission_factors);
      source = "savings";
    }
  } else if (has_results) {
    if (!req.has("reference") || !req.has("candidate")) {
      throw SchemaError("'reference' and 'candidate' must be given together");
    }
    const auto reference = report::simulation_from_json(req.take("reference"), "reference");
    const auto candidate = report::simulation_from_json(req.take("candidate"), "candidate");
    report = indicators::full_report(reference, candidate, spec, book, econ, cfg.emission_factors);
    source = "results";
  } else {
    const auto runs = engine::run_scenarios(cfg, cfg.weather, {control::ScenarioKind::Baseline, kind});
    report = indicators::full_report(runs[0].result, runs[1].result, spec, book, econ, cfg.emission_factors);
    source = "simulation";
  }
  req.finish();
  report.price_book = book.name;

  Json echo{{"scenario", std::string(control::to_string(kind))},
            {"source", source},
            {"price_book", {{"name", book.name}, {"book", config::to_json(book)}}},
            {"economics", {{"discount_rate", econ.discount_rate},
                           {"horizon_years", econ.horizon_years},
                           {"investment_eur", econ.investment_eur}}}};
  if (simulate) echo["run"] = run_echo(cfg);
  Json response{{"engine_version", engine::kEngineVersion}, {"config", echo}, {"report", report::indicators_to_json(report)}};
  return {std::move(response), std::move(report)};
}

std::string Service::compare_csv(const Json& body) const {
  Request req(body);
  config::Config cfg = base_;
  apply_run_fields(req, cfg, false);
  engine::CompareSource source = engine::CompareSource::Simulated;
  if (req.has("source")) {
    const auto s = req.string("source");
    if (s == "published") {
      source = engine::CompareSource::Published;
    } else if (s != "simulated") {
      throw SchemaError("'source': expected \"simulated\" or \"published\"");
    }
  }
  std::vector<std::string> cities;
  if (req.has("cities")) {
    const auto& list = req.take("cities");
    if (!list.is_array()) throw SchemaError("'cities': expected an array of preset names");
    for (const auto& c : list) {
      if (!c.is_string()) throw SchemaError("'cities': expected preset names");
      cities.push_back(c.get<std::string>());
    }
  } else {
    for (const auto& [name, preset] : cfg.weather_presets) cities.push_back(name);
  }
  if (cities.size() < 1) throw SchemaError("'cities': at least one city required");
  if (req.has("economics")) cfg.economics = config::economics_from_json(req.take("economics"), cfg.economics, "economics");
  req.finish();
  return engine::compare_csv(engine::compare(cfg, cities, source));
}

Json Service::presets() const {
  Json scenarios = Json::array();
  for (const auto& s : control::scenario_catalog(base_.control)) {
    const auto& p = s.policy;
    scenarios.push_back(Json{{"name", std::string(control::to_string(p.kind))},
                             {"investment_eur", s.investment_eur},
                             {"devices", s.devices},
                             {"operation", s.operation},
                             {"lighting_mode", std::string(control::to_string(p.lighting_mode))},
                             {"policy",
                              {{"heat_setpoint_c", p.heat_setpoint_c},
                               {"cool_setpoint_c", p.cool_setpoint_c},
                               {"setback_heat_c", p.setback_heat_c},
                               {"setback_cool_c", p.setback_cool_c},
                               {"auto_away_delay_h", p.auto_away_delay_h},
                               {"suggestion_offset_k", p.suggestion_offset_k}}}});
  }
  const Json full = config::to_json(base_);
  return Json{{"engine_version", engine::kEngineVersion},
              {"weather_presets", full["weather_presets"]},
              {"price_books", full["price_books"]},
              {"city_price_books", full["city_price_books"]},
              {"scenarios", scenarios},
              {"emission_factors", full["emission_factors"]},
              {"defaults",
               {{"seed", base_.seed},
                {"building", full["building"]},
                {"occupancy", full["occupancy"]},
                {"control", full["control"]},
                {"economics", full["economics"]}}}};
}

Json Service::schema() const {
  const Json number{{"type", "number"}};
  const Json overrides{{"seed", {{"type", "integer"}, {"minimum", 0}}},
                       {"preset", {{"type", "string"}}},
                       {"weather", {{"type", "string"}, {"description", "alias of preset"}}},
                       {"building", {{"type", "object"}}},
                       {"occupancy", {{"type", "object"}}},
                       {"control", {{"type", "object"}}}};
  const Json scenario{{"type", "string"}, {"enum", {"baseline", "low-cost", "extended"}}};
  const Json energy{{"type", "object"},
                    {"properties", {{"heating_kwh", number}, {"cooling_kwh", number}, {"lighting_kwh", number}}},
                    {"additionalProperties", false}};

  Json simulate{{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                {"title", "SimulateRequest"},
                {"type", "object"},
                {"properties", overrides},
                {"additionalProperties", false}};
  simulate["properties"]["scenario"] = scenario;

  Json indicators{{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                  {"title", "IndicatorsRequest"},
                  {"type", "object"},
                  {"required", {"scenario"}},
                  {"properties", overrides},
                  {"additionalProperties", false}};
  indicators["properties"]["scenario"] = scenario;
  indicators["properties"]["savings"] = energy;
  indicators["properties"]["baseline"] = energy;
  indicators["properties"]["reference"] = energy;
  indicators["properties"]["candidate"] = energy;
  indicators["properties"]["price_book"] = Json{{"oneOf", {{{"type", "string"}}, {{"type", "object"}}}}};
  indicators["properties"]["economics"] =
      Json{{"type", "object"},
           {"properties", {{"discount_rate", number}, {"horizon_years", {{"type", "integer"}, {"minimum", 1}}},
                           {"investment_eur", number}}},
           {"additionalProperties", false}};

  const Json report{{"title", "IndicatorReport"},
                    {"type", "object"},
                    {"required",
                     {"delta_e_annual_kwh", "delta_e_lifetime_kwh", "annual_cost_saving_eur", "payback_years",
                      "npv_eur", "irr_per_year", "adi_eur", "emissions"}}};
  return Json{{"engine_version", engine::kEngineVersion},
              {"simulate_request", simulate},
              {"indicators_request", indicators},
              {"indicator_report", report}};
}

Json Service::reference_comparison() const {
  return published::comparison_json(published::compare_with_reference(base_));
}

std::string Service::reference_comparison_table() const {
  return published::comparison_table(published::compare_with_reference(base_));
}

Response error_response(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::Schema: return {400, error_body("schema", err->what()).dump()};
      case ErrorKind::Semantic: return {422, error_body("semantic", err->what()).dump()};
      case ErrorKind::Io: return {500, error_body("io", err->what()).dump()};
    }
  }
  return {500, error_body("internal", e.what()).dump()};
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) const {
  try {
    const auto parse_body = [&] { return config::parse_json_text(body.empty() ? "{}" : body, "request body"); };
    const auto only = [&](const char* allowed) -> std::optional<Response> {
      if (method == allowed) return std::nullopt;
      return Response{405, error_body("method", "use " + std::string(allowed) + " for " + path).dump()};
    };

    if (path == "/healthz") {
      if (auto r = only("GET")) return *r;
      return {200, Json{{"status", "ok"}, {"engine_version", engine::kEngineVersion}}.dump()};
    }
    if (path == "/api/v1/presets") {
      if (auto r = only("GET")) return *r;
      return {200, presets().dump()};
    }
    if (path == "/api/v1/schema") {
      if (auto r = only("GET")) return *r;
      return {200, schema().dump()};
    }
    if (path == "/api/v1/simulate") {
      if (auto r = only("POST")) return *r;
      return {200, simulate(parse_body()).response.dump()};
    }
    if (path == "/api/v1/indicators") {
      if (auto r = only("POST")) return *r;
      return {200, indicators(parse_body()).dump()};
    }
    if (path == "/api/v1/compare") {
      if (auto r = only("POST")) return *r;
      return {200, compare_csv(parse_body()), "text/csv"};
    }
    return {404, error_body("not_found", "no route for " + path).dump()};
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

}  // namespace smarthome::service
