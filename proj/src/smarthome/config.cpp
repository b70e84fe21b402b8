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

#include "smarthome/config.hpp"

#include <set>

#include "smarthome/error.hpp"
#include "smarthome/text.hpp"

namespace smarthome::config {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Reads the members of one JSON object, remembering which keys were consumed
// so the rest can be rejected.
class Fields {
 public:
  Fields(const Json& j, std::string path) : json_(j), path_(std::move(path)) {
    if (!j.is_object()) throw SchemaError(where() + "expected an object");
  }

  bool has(const char* key) const { return json_.contains(key) && !json_.at(key).is_null(); }

  const Json& raw(const char* key) {
    seen_.insert(key);
    return json_.at(key);
  }

  void read(const char* key, double& out) {
    if (!mark(key)) return;
    const auto& v = json_.at(key);
    if (!v.is_number()) throw SchemaError(field(key) + "expected a number");
    out = v.get<double>();
  }

  void read(const char* key, int& out) {
    if (!mark(key)) return;
    const auto& v = json_.at(key);
    if (!v.is_number_integer()) throw SchemaError(field(key) + "expected an integer");
    out = v.get<int>();
  }

  void read(const char* key, std::uint64_t& out) {
    if (!mark(key)) return;
    const auto& v = json_.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw SchemaError(field(key) + "expected a non-negative integer");
    }
    out = v.get<std::uint64_t>();
  }

  void read(const char* key, std::string& out) {
    if (!mark(key)) return;
    const auto& v = json_.at(key);
    if (!v.is_string()) throw SchemaError(field(key) + "expected a string");
    out = v.get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : json_.items()) {
      if (!seen_.contains(key)) throw SchemaError(field(key.c_str()) + "unknown field");
    }
  }

  std::string child(const char* key) const { return join(path_, key); }

 private:
  bool mark(const char* key) {
    seen_.insert(key);
    return has(key);
  }
  std::string where() const { return path_.empty() ? "" : "'" + path_ + "': "; }
  std::string field(const char* key) const { return "'" + join(path_, key) + "': "; }

  const Json& json_;
  std::string path_;
  std::set<std::string> seen_;
};

tariff::Tariff tariff_from_json(const Json& j, tariff::Carrier carrier, const std::string& path) {
  Fields f(j, path);
  std::string type;
  f.read("type", type);
  tariff::Tariff t;
  t.carrier = carrier;
  if (type == "flat") {
    tariff::FlatRate flat;
    if (!f.has("rate")) throw SchemaError("'" + path + ".rate': required");
    f.read("rate", flat.rate_eur_per_kwh);
    t.structure = flat;
  } else if (type == "block") {
    tariff::BlockRate block;
    for (const char* key : {"threshold_kwh", "low_rate", "high_rate"}) {
      if (!f.has(key)) throw SchemaError("'" + join(path, key) + "': required");
    }
    f.read("threshold_kwh", block.threshold_kwh);
    f.read("low_rate", block.low_rate_eur_per_kwh);
    f.read("high_rate", block.high_rate_eur_per_kwh);
    f.read("periods_per_year", block.periods_per_year);
    t.structure = block;
  } else {
    throw SchemaError("'" + path + ".type': expected \"flat\" or \"block\"");
  }
  f.finish();
  return t;
}

Json tariff_to_json(const tariff::Tariff& t) {
  if (const auto* flat = std::get_if<tariff::FlatRate>(&t.structure)) {
    return Json{{"type", "flat"}, {"rate", flat->rate_eur_per_kwh}};
  }
  const auto& b = std::get<tariff::BlockRate>(t.structure);
  return Json{{"type", "block"},
              {"threshold_kwh", b.threshold_kwh},
              {"low_rate", b.low_rate_eur_per_kwh},
              {"high_rate", b.high_rate_eur_per_kwh},
              {"periods_per_year", b.periods_per_year}};
}

std::vector<control::ScenarioKind> scenarios_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError("'" + path + "': expected an array of scenario names");
  std::vector<control::ScenarioKind> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw SchemaError("'" + path + "': expected scenario names");
    const auto kind = control::parse_scenario(item.get<std::string>());
    if (!kind) {
      throw SchemaError("'" + path + "': unknown scenario '" + item.get<std::string>() +
                        "' (valid: " + control::scenario_names() + ")");
    }
    out.push_back(*kind);
  }
  return out;
}

}  // namespace

std::string WeatherSource::label() const {
  if (preset) return *preset;
  if (csv) return csv->string();
  return "";
}

const weather::ClimatePreset& Config::preset(const std::string& name) const {
  const auto it = weather_presets.find(name);
  if (it == weather_presets.end()) {
    std::string names;
    for (const auto& [key, value] : weather_presets) names += (names.empty() ? "" : ", ") + key;
    throw SchemaError("unknown weather preset '" + name + "' (valid: " + names + ")");
  }
  return it->second;
}

const tariff::PriceBook& Config::book(const std::string& name) const {
  const auto it = price_books.find(name);
  if (it == price_books.end()) {
    std::string names;
    for (const auto& [key, value] : price_books) names += (names.empty() ? "" : ", ") + key;
    throw SchemaError("unknown price book '" + name + "' (valid: " + names + ")");
  }
  return it->second;
}

const tariff::PriceBook& Config::book_for(const WeatherSource& source) const {
  if (price_book) return book(*price_book);
  if (source.preset) {
    const auto it = city_price_books.find(*source.preset);
    if (it != city_price_books.end()) return book(it->second);
  }
  return book("germany-2019");
}

occupancy::OccupancyOptions Config::occupancy_options() const {
  auto o = occupancy;
  o.seed = occupancy_seed();
  return o;
}

void Config::validate() const {
  for (const auto& [name, p] : weather_presets) p.validate();
  building.validate();
  occupancy.validate();
  for (auto kind : control::kAllScenarios) control::make_policy(kind, control);
  for (const auto& [name, b] : price_books) b.validate();
  for (const auto& [city, name] : city_price_books) {
    preset(city);
    book(name);
  }
  indicators::EconParams econ = economics;
  econ.investment_eur = 0.0;
  econ.validate();
  indicators::validate(emission_factors);
  if (weather.preset.has_value() == weather.csv.has_value()) {
    throw SchemaError("'run.weather': exactly one of 'preset' or 'csv' must be set");
  }
  if (weather.preset) preset(*weather.preset);
  if (price_book) book(*price_book);
  if (scenarios.empty()) throw SchemaError("'run.scenarios': at least one scenario required");
}

Config defaults() {
  Config c;
  for (const auto& p : {weather::algiers_csa(), weather::stuttgart_cfb()}) c.weather_presets[p.name] = p;
  for (const auto& b : {tariff::germany_2019(), tariff::algeria_2019()}) c.price_books[b.name] = b;
  c.city_price_books = {{"algiers-csa", "algeria-2019"}, {"stuttgart-cfb", "germany-2019"}};
  c.emission_factors = indicators::default_emission_factors();
  c.weather.preset = "stuttgart-cfb";
  c.scenarios = {control::kAllScenarios.begin(), control::kAllScenarios.end()};
  return c;
}

Json to_json(const weather::ClimatePreset& p) {
  return Json{{"mean_annual_temp_c", p.mean_annual_temp_c}, {"seasonal_amplitude_k", p.seasonal_amplitude_k},
              {"diurnal_amplitude_k", p.diurnal_amplitude_k}, {"peak_ghi_wm2", p.peak_ghi_wm2},
              {"coldest_day", p.coldest_day},                 {"latitude_deg", p.latitude_deg},
              {"noise_sigma_k", p.noise_sigma_k}};
}

Json to_json(const thermal::BuildingParams& p) {
  return Json{{"floor_area_m2", p.floor_area_m2},
              {"ua_w_per_k", p.ua_w_per_k},
              {"capacitance_j_per_k", p.capacitance_j_per_k},
              {"window_solar_area_m2", p.window_solar_area_m2},
              {"internal_gain_per_person_w", p.internal_gain_per_person_w},
              {"occupants", p.occupants},
              {"heater_efficiency", p.heater_efficiency},
              {"cooling_cop", p.cooling_cop},
              {"lighting_power_density_w_m2", p.lighting_power_density_w_m2},
              {"hvac_capacity_w", p.hvac_capacity_w},
              {"daylight_threshold_wm2", p.daylight_threshold_wm2},
              {"sleep_start_hour", p.sleep_start_hour},
              {"sleep_end_hour", p.sleep_end_hour},
              {"comfort_cooling_limit_c", p.comfort_cooling_limit_c}};
}

Json to_json(const occupancy::OccupancyOptions& o) {
  return Json{{"away_start_hour", o.away_start_hour},
              {"away_end_hour", o.away_end_hour},
              {"winter_vacation_start", o.winter_vacation_start},
              {"summer_vacation_start", o.summer_vacation_start},
              {"vacation_days", o.vacation_days},
              {"weekend_p_occupied", o.weekend_p_occupied},
              {"weekend_block_hours", o.weekend_block_hours},
              {"weekend_day_start_hour", o.weekend_day_start_hour},
              {"weekend_day_end_hour", o.weekend_day_end_hour}};
}

Json to_json(const control::ControlOptions& c) {
  return Json{{"comfort_heat_c", c.comfort_heat_c},       {"comfort_cool_c", c.comfort_cool_c},
              {"setback_heat_c", c.setback_heat_c},       {"setback_cool_c", c.setback_cool_c},
              {"auto_away_delay_h", c.auto_away_delay_h}, {"suggestion_offset_k", c.suggestion_offset_k}};
}

Json to_json(const tariff::PriceBook& b) {
  return Json{{"country", b.country}, {"electricity", tariff_to_json(b.electricity)}, {"gas", tariff_to_json(b.gas)}};
}

Json to_json(const indicators::EconParams& e) {
  return Json{{"discount_rate", e.discount_rate}, {"horizon_years", e.horizon_years}};
}

Json to_json(const indicators::EmissionFactorTable& t) {
  Json out = Json::array();
  for (const auto& f : t) {
    out.push_back(Json{{"key", f.key}, {"pollutant", f.pollutant}, {"unit", f.mass_unit + "/kWh"},
                       {"coefficient", f.coefficient}});
  }
  return out;
}

Json to_json(const Config& c) {
  Json j;
  j["seed"] = c.seed;
  j["weather_presets"] = Json::object();
  for (const auto& [name, p] : c.weather_presets) j["weather_presets"][name] = to_json(p);
  j["building"] = to_json(c.building);
  j["occupancy"] = to_json(c.occupancy);
  j["control"] = to_json(c.control);
  j["price_books"] = Json::object();
  for (const auto& [name, b] : c.price_books) j["price_books"][name] = to_json(b);
  j["city_price_books"] = Json::object();
  for (const auto& [city, book] : c.city_price_books) j["city_price_books"][city] = book;
  j["economics"] = to_json(c.economics);
  j["emission_factors"] = to_json(c.emission_factors);

  Json run;
  run["weather"] = c.weather.preset ? Json{{"preset", *c.weather.preset}} : Json{{"csv", c.weather.csv->string()}};
  run["scenarios"] = Json::array();
  for (auto kind : c.scenarios) run["scenarios"].push_back(std::string(control::to_string(kind)));
  run["price_book"] = c.price_book ? Json(*c.price_book) : Json(nullptr);
  j["run"] = run;
  return j;
}

weather::ClimatePreset preset_from_json(const Json& j, const std::string& name, const std::string& path) {
  Fields f(j, path);
  weather::ClimatePreset p;
  p.name = name;
  f.read("mean_annual_temp_c", p.mean_annual_temp_c);
  f.read("seasonal_amplitude_k", p.seasonal_amplitude_k);
  f.read("diurnal_amplitude_k", p.diurnal_amplitude_k);
  f.read("peak_ghi_wm2", p.peak_ghi_wm2);
  f.read("coldest_day", p.coldest_day);
  f.read("latitude_deg", p.latitude_deg);
  f.read("noise_sigma_k", p.noise_sigma_k);
  f.finish();
  return p;
}

thermal::BuildingParams building_from_json(const Json& j, thermal::BuildingParams p, const std::string& path) {
  Fields f(j, path);
  f.read("floor_area_m2", p.floor_area_m2);
  f.read("ua_w_per_k", p.ua_w_per_k);
  f.read("capacitance_j_per_k", p.capacitance_j_per_k);
  f.read("window_solar_area_m2", p.window_solar_area_m2);
  f.read("internal_gain_per_person_w", p.internal_gain_per_person_w);
  f.read("occupants", p.occupants);
  f.read("heater_efficiency", p.heater_efficiency);
  f.read("cooling_cop", p.cooling_cop);
  f.read("lighting_power_density_w_m2", p.lighting_power_density_w_m2);
  f.read("hvac_capacity_w", p.hvac_capacity_w);
  f.read("daylight_threshold_wm2", p.daylight_threshold_wm2);
  f.read("sleep_start_hour", p.sleep_start_hour);
  f.read("sleep_end_hour", p.sleep_end_hour);
  f.read("comfort_cooling_limit_c", p.comfort_cooling_limit_c);
  f.finish();
  return p;
}

occupancy::OccupancyOptions occupancy_from_json(const Json& j, occupancy::OccupancyOptions o,
                                                const std::string& path) {
  Fields f(j, path);
  f.read("away_start_hour", o.away_start_hour);
  f.read("away_end_hour", o.away_end_hour);
  f.read("winter_vacation_start", o.winter_vacation_start);
  f.read("summer_vacation_start", o.summer_vacation_start);
  f.read("vacation_days", o.vacation_days);
  f.read("weekend_p_occupied", o.weekend_p_occupied);
  f.read("weekend_block_hours", o.weekend_block_hours);
  f.read("weekend_day_start_hour", o.weekend_day_start_hour);
  f.read("weekend_day_end_hour", o.weekend_day_end_hour);
  f.finish();
  return o;
}

control::ControlOptions control_from_json(const Json& j, control::ControlOptions c, const std::string& path) {
  Fields f(j, path);
  f.read("comfort_heat_c", c.comfort_heat_c);
  f.read("comfort_cool_c", c.comfort_cool_c);
  f.read("setback_heat_c", c.setback_heat_c);
  f.read("setback_cool_c", c.setback_cool_c);
  f.read("auto_away_delay_h", c.auto_away_delay_h);
  f.read("suggestion_offset_k", c.suggestion_offset_k);
  f.finish();
  return c;
}

tariff::PriceBook price_book_from_json(const Json& j, const std::string& name, const std::string& path) {
  Fields f(j, path);
  tariff::PriceBook b;
  b.name = name;
  f.read("country", b.country);
  for (const char* key : {"electricity", "gas"}) {
    if (!f.has(key)) throw SchemaError("'" + f.child(key) + "': required");
  }
  b.electricity = tariff_from_json(f.raw("electricity"), tariff::Carrier::Electricity, f.child("electricity"));
  b.gas = tariff_from_json(f.raw("gas"), tariff::Carrier::Gas, f.child("gas"));
  f.finish();
  return b;
}

indicators::EconParams economics_from_json(const Json& j, indicators::EconParams e, const std::string& path) {
  Fields f(j, path);
  f.read("discount_rate", e.discount_rate);
  f.read("horizon_years", e.horizon_years);
  f.read("investment_eur", e.investment_eur);
  f.finish();
  return e;
}

Config from_json(const Json& j) {
  Fields f(j, "");
  Config c;
  f.read("seed", c.seed);
  if (f.has("weather_presets")) {
    const auto& presets = f.raw("weather_presets");
    if (!presets.is_object()) throw SchemaError("'weather_presets': expected an object");
    for (const auto& [name, value] : presets.items()) {
      c.weather_presets[name] = preset_from_json(value, name, "weather_presets." + name);
    }
  }
  if (f.has("building")) c.building = building_from_json(f.raw("building"), c.building, "building");
  if (f.has("occupancy")) c.occupancy = occupancy_from_json(f.raw("occupancy"), c.occupancy, "occupancy");
  if (f.has("control")) c.control = control_from_json(f.raw("control"), c.control, "control");
  if (f.has("price_books")) {
    const auto& books = f.raw("price_books");
    if (!books.is_object()) throw SchemaError("'price_books': expected an object");
    for (const auto& [name, value] : books.items()) {
      c.price_books[name] = price_book_from_json(value, name, "price_books." + name);
    }
  }
  if (f.has("city_price_books")) {
    const auto& cities = f.raw("city_price_books");
    if (!cities.is_object()) throw SchemaError("'city_price_books': expected an object");
    for (const auto& [city, value] : cities.items()) {
      if (!value.is_string()) throw SchemaError("'city_price_books." + city + "': expected a string");
      c.city_price_books[city] = value.get<std::string>();
    }
  }
  if (f.has("economics")) {
    c.economics = economics_from_json(f.raw("economics"), c.economics, "economics");
  }
  if (f.has("emission_factors")) {
    const auto& table = f.raw("emission_factors");
    if (!table.is_array()) throw SchemaError("'emission_factors': expected an array");
    for (std::size_t i = 0; i < table.size(); ++i) {
      Fields row(table[i], "emission_factors[" + std::to_string(i) + "]");
      indicators::EmissionFactor ef;
      std::string unit;
      row.read("key", ef.key);
      row.read("pollutant", ef.pollutant);
      row.read("unit", unit);
      row.read("coefficient", ef.coefficient);
      row.finish();
      if (!unit.ends_with("/kWh")) {
        throw SchemaError("'emission_factors[" + std::to_string(i) + "].unit': expected <mass>/kWh");
      }
      ef.mass_unit = unit.substr(0, unit.size() - 4);
      c.emission_factors.push_back(ef);
    }
  }
  if (f.has("run")) {
    Fields run(f.raw("run"), "run");
    if (run.has("weather")) {
      Fields w(run.raw("weather"), "run.weather");
      std::string preset, csv;
      w.read("preset", preset);
      w.read("csv", csv);
      w.finish();
      if (!preset.empty()) c.weather.preset = preset;
      if (!csv.empty()) c.weather.csv = csv;
    }
    if (run.has("scenarios")) c.scenarios = scenarios_from_json(run.raw("scenarios"), "run.scenarios");
    std::string book;
    run.read("price_book", book);
    if (!book.empty()) c.price_book = book;
    run.finish();
  }
  f.finish();
  if (c.economics.investment_eur != 0.0) {
    throw SchemaError("'economics.investment_eur': investment comes from the scenario catalog");
  }
  c.validate();
  return c;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(origin + ": " + e.what());
  }
}

Config merged(const Config& base, const Json& patch) {
  Json j = to_json(base);
  // A new weather source replaces the old one instead of merging with it.
  if (patch.contains("run") && patch["run"].is_object() && patch["run"].contains("weather")) {
    j["run"].erase("weather");
  }
  j.merge_patch(patch);
  return from_json(j);
}

Config load_file(const std::filesystem::path& path) {
  return merged(defaults(), parse_json_text(text::read_file(path), path.string()));
}

}  // namespace smarthome::config
