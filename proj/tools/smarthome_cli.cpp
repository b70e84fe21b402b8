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

// Command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "server.hpp"
#include "smarthome/smarthome.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

// Thrown to unwind with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void raise_status(shb_status status) {
  const std::string message = shb_last_error();
  throw Exit{status == SHB_ERR_IO ? kExitIo : kExitConfig, message};
}

void check(shb_status status) {
  if (status != SHB_OK) raise_status(status);
}

struct EngineDeleter {
  void operator()(shb_engine* e) const { shb_engine_destroy(e); }
};
struct RunDeleter {
  void operator()(shb_run* r) const { shb_run_destroy(r); }
};
using EnginePtr = std::unique_ptr<shb_engine, EngineDeleter>;
using RunPtr = std::unique_ptr<shb_run, RunDeleter>;

// Takes ownership of a string returned by the C API.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  shb_free_string(s);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitIo, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw Exit{kExitConfig, path + ": " + e.what()};
  }
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Exit{kExitIo, "cannot write '" + out_path + "'"};
  out << content;
  if (!out) throw Exit{kExitIo, "failed writing '" + out_path + "'"};
}

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out;
};

EnginePtr make_engine(const GlobalOptions& g) {
  Json overrides = Json::object();
  if (g.seed) overrides["seed"] = *g.seed;
  shb_engine* engine = nullptr;
  check(shb_engine_create(g.config_path.empty() ? nullptr : g.config_path.c_str(), overrides.dump().c_str(), 1,
                          &engine));
  return EnginePtr(engine);
}

Json engine_config(const shb_engine* engine) {
  char* text = nullptr;
  check(shb_engine_config(engine, &text));
  return Json::parse(take(text));
}

// A --weather value names a preset or a CSV file.
void add_weather(Json& request, const shb_engine* engine, const std::string& weather) {
  if (weather.empty()) {
    const auto run = engine_config(engine)["run"]["weather"];
    if (run.contains("preset")) request["preset"] = run["preset"];
    if (run.contains("csv")) request["weather_csv"] = run["csv"];
    return;
  }
  const auto presets = engine_config(engine)["weather_presets"];
  if (presets.contains(weather)) {
    request["preset"] = weather;
  } else if (std::filesystem::exists(weather)) {
    request["weather_csv"] = weather;
  } else {
    std::string names;
    for (const auto& [name, value] : presets.items()) names += (names.empty() ? "" : ", ") + name;
    throw Exit{kExitConfig, "unknown weather '" + weather + "': not a preset (" + names + ") or an existing CSV file"};
  }
}

std::string trace_path_for(const std::string& base, const std::string& scenario, bool many) {
  if (!many) return base;
  const std::filesystem::path p(base);
  return (p.parent_path() / (p.stem().string() + "-" + scenario + p.extension().string())).string();
}

int cmd_simulate(const GlobalOptions& g, const std::string& weather, std::vector<std::string> scenarios,
                 const std::string& trace) {
  auto engine = make_engine(g);
  if (scenarios.empty()) {
    const Json cfg = engine_config(engine.get());
    for (const auto& s : cfg["run"]["scenarios"]) scenarios.push_back(s.get<std::string>());
  }
  if (scenarios.size() == 1 && scenarios.front() == "all") scenarios = {"baseline", "low-cost", "extended"};

  std::vector<RunPtr> runs;
  for (const auto& scenario : scenarios) {
    Json request = Json::object();
    add_weather(request, engine.get(), weather);
    request["scenario"] = scenario;
    shb_run* run = nullptr;
    check(shb_simulate(engine.get(), request.dump().c_str(), trace.empty() ? 0 : 1, &run));
    runs.emplace_back(run);
    if (!trace.empty()) check(shb_run_write_trace_csv(run, trace_path_for(trace, scenario, scenarios.size() > 1).c_str()));
  }

  std::string content;
  if (g.format == "csv") {
    std::vector<const shb_run*> handles;
    for (const auto& r : runs) handles.push_back(r.get());
    char* csv = nullptr;
    check(shb_runs_csv(handles.data(), handles.size(), &csv));
    content = take(csv);
  } else if (runs.size() == 1) {
    content = shb_run_response(runs.front().get());
  } else {
    Json all{{"engine_version", shb_version()}, {"runs", Json::array()}};
    for (const auto& r : runs) all["runs"].push_back(Json::parse(shb_run_response(r.get())));
    content = all.dump(2) + "\n";
  }
  emit(content, g.out);
  return kExitOk;
}

// Picks the result of `scenario` out of a simulate output file.
Json pick_run(const Json& doc, const std::string& scenario, const std::string& path) {
  if (doc.contains("runs")) {
    for (const auto& run : doc["runs"]) {
      if (run.contains("result") && run["result"].value("scenario", "") == scenario) return run["result"];
    }
    throw Exit{kExitConfig, path + ": no '" + scenario + "' run in file"};
  }
  return doc.contains("result") ? doc["result"] : doc;
}

struct IndicatorOptions {
  std::string weather;
  std::string scenario;
  std::string book;
  std::optional<double> discount_rate;
  std::optional<int> horizon;
  std::optional<double> investment;
  std::string inject;
  std::string inject_savings;
  std::string reference;
  std::string candidate;
  bool published_fixtures = false;
};

int cmd_indicators(const GlobalOptions& g, const IndicatorOptions& o) {
  auto engine = make_engine(g);
  if (o.published_fixtures) {
    char* out = nullptr;
    check(shb_reference_comparison(engine.get(), g.format == "json" ? "json" : "table", &out));
    emit(take(out), g.out);
    return kExitOk;
  }

  Json request = Json::object();
  request["scenario"] = o.scenario.empty() ? "low-cost" : o.scenario;
  if (!o.book.empty()) request["price_book"] = o.book;
  Json econ = Json::object();
  if (o.discount_rate) econ["discount_rate"] = *o.discount_rate;
  if (o.horizon) econ["horizon_years"] = *o.horizon;
  if (o.investment) econ["investment_eur"] = *o.investment;
  if (!econ.empty()) request["economics"] = econ;

  if (!o.inject_savings.empty()) {
    const std::string text = std::filesystem::exists(o.inject_savings) ? read_text(o.inject_savings) : o.inject_savings;
    try {
      request["savings"] = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Exit{kExitConfig, "--inject-savings: " + std::string(e.what())};
    }
    if (request["savings"].contains("savings")) request["savings"] = request["savings"]["savings"];
  } else if (!o.inject.empty()) {
    const Json doc = read_json(o.inject);
    request["reference"] = pick_run(doc, "baseline", o.inject);
    request["candidate"] = pick_run(doc, request["scenario"].get<std::string>(), o.inject);
  } else if (!o.reference.empty() || !o.candidate.empty()) {
    if (o.reference.empty() || o.candidate.empty()) {
      throw Exit{kExitConfig, "--reference and --candidate must be given together"};
    }
    request["reference"] = pick_run(read_json(o.reference), "baseline", o.reference);
    request["candidate"] = pick_run(read_json(o.candidate), request["scenario"].get<std::string>(), o.candidate);
  } else {
    add_weather(request, engine.get(), o.weather);
  }
  // Simulated results carry their weather; its city book applies unless --book says otherwise.
  if (o.book.empty() && request.contains("reference")) {
    const Json cfg = engine_config(engine.get());
    const std::string city = request["reference"].value("weather", "");
    if (cfg["city_price_books"].contains(city)) request["price_book"] = cfg["city_price_books"][city];
  }
  for (const char* key : {"reference", "candidate"}) {
    if (request.contains(key)) {
      Json trimmed;
      for (const char* field : {"heating_kwh", "cooling_kwh", "lighting_kwh"}) trimmed[field] = request[key][field];
      request[key] = trimmed;
    }
  }

  char* out = nullptr;
  check(shb_indicators(engine.get(), request.dump().c_str(), g.format == "csv" ? "csv" : "json", &out));
  const std::string content = take(out);
  if (content.find("ZeroSavings") != std::string::npos) {
    std::cerr << "note: ZeroSavings - no cost saving, payback undefined; report marked degenerate\n";
  }
  emit(content, g.out);
  return kExitOk;
}

int cmd_compare(const GlobalOptions& g, const std::vector<std::string>& cities, const std::string& source) {
  auto engine = make_engine(g);
  Json request{{"source", source}};
  if (!cities.empty()) request["cities"] = cities;
  char* csv = nullptr;
  check(shb_compare(engine.get(), request.dump().c_str(), &csv));
  emit(take(csv), g.out);
  return kExitOk;
}

int cmd_serve(const GlobalOptions& g, const std::string& host, int port, const std::string& cors_origin) {
  auto engine = make_engine(g);
  // Requests served over HTTP never read local files.
  shb_engine* service_engine = nullptr;
  const Json cfg = engine_config(engine.get());
  check(shb_engine_create(nullptr, cfg.dump().c_str(), 0, &service_engine));
  EnginePtr service_holder(service_engine);

  smarthome::http::Server server(service_engine, cors_origin);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Exit{kExitIo, "cannot bind " + host + ":" + std::to_string(port)};
  std::cerr << "serving on http://" << host << ":" << bound << " (engine " << shb_version() << ")\n";
  return server.listen_after_bind() ? kExitOk : kExitIo;
}

int cmd_config(const GlobalOptions& g, bool defaults) {
  char* text = nullptr;
  if (defaults) {
    check(shb_default_config(&text));
  } else {
    auto engine = make_engine(g);
    check(shb_engine_config(engine.get(), &text));
  }
  emit(take(text), g.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smart-home energy simulation and homeowner benefit indicators"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for all randomness (weather, occupancy)");
  app.add_option("--config", g.config_path, "Config file (JSON key-value tree); flags win over it");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output file (default: stdout)");

  auto* simulate = app.add_subcommand("simulate", "Simulate one year for one or more scenarios");
  std::string weather;
  std::vector<std::string> scenarios;
  std::string trace;
  simulate->add_option("--weather", weather, "Weather preset name or CSV file");
  simulate->add_option("--scenario", scenarios, "baseline, low-cost, extended or all (repeatable)");
  simulate->add_option("--trace", trace, "Write the hourly trace CSV here");

  auto* indicators = app.add_subcommand("indicators", "Compute homeowner benefit indicators");
  IndicatorOptions io;
  std::optional<double> rate;
  std::optional<int> horizon;
  std::optional<double> investment;
  indicators->add_option("--weather", io.weather, "Weather preset or CSV (simulates baseline and scenario)");
  indicators->add_option("--scenario", io.scenario, "Scenario whose investment is assessed (default low-cost)");
  indicators->add_option("--book", io.book, "Price book name");
  indicators->add_option("--discount-rate", rate, "Discount rate per year");
  indicators->add_option("--horizon", horizon, "Horizon in years");
  indicators->add_option("--investment", investment, "Override the scenario investment (EUR)");
  indicators->add_option("--inject-savings", io.inject_savings, "Annual savings JSON (file or inline)");
  indicators->add_option("--inject", io.inject, "Output of `simulate --scenario all`");
  indicators->add_option("--reference", io.reference, "Simulate output of the reference run");
  indicators->add_option("--candidate", io.candidate, "Simulate output of the assessed run");
  indicators->add_flag("--published-fixtures,--paper-fixtures", io.published_fixtures,
                       "Run the published reference savings through the pipeline and compare");

  auto* compare = app.add_subcommand("compare", "Long-format indicator data for several cities");
  std::vector<std::string> cities;
  std::string source = "simulated";
  compare->add_option("--cities", cities, "Weather presets (default: all)");
  compare->add_option("--source", source, "simulated or published")->check(CLI::IsMember({"simulated", "published"}));

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  int port = 8080;
  std::string host = "0.0.0.0";
  std::string cors = "*";
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--cors-origin", cors, "Allowed browser origin");

  auto* config_cmd = app.add_subcommand("config", "Print the effective configuration");
  bool defaults = false;
  config_cmd->add_flag("--defaults", defaults, "Print the built-in defaults instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  if (*seed_opt) g.seed = seed;
  io.discount_rate = rate;
  io.horizon = horizon;
  io.investment = investment;

  try {
    if (*simulate) return cmd_simulate(g, weather, scenarios, trace);
    if (*indicators) return cmd_indicators(g, io);
    if (*compare) return cmd_compare(g, cities, source);
    if (*serve) return cmd_serve(g, host, port, cors);
    if (*config_cmd) return cmd_config(g, defaults);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
