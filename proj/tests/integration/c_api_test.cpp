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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  shb_free_string(s);
  return out;
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(shb_engine_create(nullptr, nullptr, 1, &engine_), SHB_OK) << shb_last_error(); }
  void TearDown() override { shb_engine_destroy(engine_); }
  shb_engine* engine_ = nullptr;
};

TEST_F(CApi, VersionAndDefaults) {
  EXPECT_STREQ(shb_version(), "1.0.0");
  char* cfg = nullptr;
  ASSERT_EQ(shb_default_config(&cfg), SHB_OK);
  EXPECT_EQ(Json::parse(take(cfg))["seed"], 42);
}

TEST_F(CApi, NullArgumentsAreArgumentErrors) {
  EXPECT_EQ(shb_engine_create(nullptr, nullptr, 0, nullptr), SHB_ERR_ARGUMENT);
  EXPECT_EQ(shb_simulate(nullptr, "{}", 0, nullptr), SHB_ERR_ARGUMENT);
  EXPECT_NE(std::string(shb_last_error()).find("invalid argument"), std::string::npos);
  double out = 0;
  EXPECT_EQ(shb_npv(0, nullptr, 0, 0.05, &out), SHB_ERR_ARGUMENT);
}

TEST_F(CApi, EngineCreationErrors) {
  shb_engine* e = nullptr;
  EXPECT_EQ(shb_engine_create("/nonexistent.json", nullptr, 0, &e), SHB_ERR_IO);
  EXPECT_EQ(e, nullptr);
  EXPECT_EQ(shb_engine_create(nullptr, R"({"building": {"nope": 1}})", 0, &e), SHB_ERR_SCHEMA);
  EXPECT_EQ(shb_engine_create(nullptr, R"({"building": {"cooling_cop": 0.5}})", 0, &e), SHB_ERR_SEMANTIC);
  EXPECT_EQ(shb_engine_create(nullptr, "{broken", 0, &e), SHB_ERR_SCHEMA);
}

TEST_F(CApi, SimulateWithTrace) {
  shb_run* run = nullptr;
  ASSERT_EQ(shb_simulate(engine_, R"({"preset": "stuttgart-cfb", "scenario": "extended"})", 1, &run), SHB_OK)
      << shb_last_error();
  EXPECT_EQ(shb_run_trace_length(run), 8760u);
  EXPECT_GT(shb_run_heating_kwh(run), shb_run_cooling_kwh(run));
  const auto response = Json::parse(shb_run_response(run));
  EXPECT_EQ(response["result"]["heating_kwh"].get<double>(), shb_run_heating_kwh(run));

  const auto path = std::filesystem::temp_directory_path() / "smarthome_capi_trace.csv";
  ASSERT_EQ(shb_run_write_trace_csv(run, path.c_str()), SHB_OK);
  EXPECT_GT(std::filesystem::file_size(path), 8760u * 10);
  std::filesystem::remove(path);
  EXPECT_EQ(shb_run_write_trace_csv(run, "/nonexistent/dir/trace.csv"), SHB_ERR_IO);

  const shb_run* runs[] = {run, run};
  char* csv = nullptr;
  ASSERT_EQ(shb_runs_csv(runs, 2, &csv), SHB_OK);
  const auto text = take(csv);
  EXPECT_EQ(text.rfind("scenario,weather,heating_kwh,cooling_kwh,lighting_kwh,total_kwh\nextended,stuttgart-cfb,", 0),
            0u);
  shb_run_destroy(run);
}

TEST_F(CApi, SimulateWithoutTraceCannotWriteOne) {
  shb_run* run = nullptr;
  ASSERT_EQ(shb_simulate(engine_, "{}", 0, &run), SHB_OK);
  EXPECT_EQ(shb_run_trace_length(run), 0u);
  EXPECT_EQ(shb_run_write_trace_csv(run, "/tmp/x.csv"), SHB_ERR_SEMANTIC);
  shb_run_destroy(run);
}

TEST_F(CApi, IndicatorsJsonAndCsv) {
  const char* req =
      R"({"scenario": "extended", "price_book": "germany-2019", "savings": {"heating_kwh": 8393, "cooling_kwh": 4466, "lighting_kwh": 1363}})";
  char* out = nullptr;
  ASSERT_EQ(shb_indicators(engine_, req, "json", &out), SHB_OK) << shb_last_error();
  const auto j = Json::parse(take(out));
  EXPECT_NEAR(j["report"]["delta_e_annual_kwh"].get<double>(), 14222.0, 1e-9);
  ASSERT_EQ(shb_indicators(engine_, req, "csv", &out), SHB_OK);
  const auto csv = take(out);
  EXPECT_NE(csv.find("extended,germany-2019"), std::string::npos) << csv;
  EXPECT_EQ(shb_indicators(engine_, req, "xml", &out), SHB_ERR_SCHEMA);
  EXPECT_EQ(shb_indicators(engine_, R"({"scenario": "nope", "savings": {}})", "json", &out), SHB_ERR_SCHEMA);
}

TEST_F(CApi, FinancePrimitives) {
  const double flows[10] = {114.90, 114.90, 114.90, 114.90, 114.90, 114.90, 114.90, 114.90, 114.90, 114.90};
  double v = 0;
  ASSERT_EQ(shb_adi(flows, 10, 0.05, &v), SHB_OK);
  EXPECT_NEAR(v, 887.22, 0.01);
  ASSERT_EQ(shb_npv(268.93, flows, 10, 0.05, &v), SHB_OK);
  EXPECT_NEAR(v, 618.29, 0.01);
  int defined = -1;
  ASSERT_EQ(shb_irr(268.93, flows, 10, &v, &defined), SHB_OK);
  EXPECT_EQ(defined, 1);
  ASSERT_EQ(shb_irr(0.0, flows, 10, &v, &defined), SHB_OK);
  EXPECT_EQ(defined, 0);
  ASSERT_EQ(shb_payback(268.93, 1270.45, &v), SHB_OK);
  EXPECT_NEAR(v, 0.2117, 5e-5);
  EXPECT_EQ(shb_payback(268.93, 0.0, &v), SHB_ERR_SEMANTIC);
  EXPECT_STREQ(shb_last_error(), "ZeroSavings");
  EXPECT_EQ(shb_payback(268.93, -1.0, &v), SHB_ERR_SEMANTIC);
  EXPECT_STREQ(shb_last_error(), "NeverPaysBack");
  ASSERT_EQ(shb_block_cost(1125.0, 125.0, 0.014, 0.033, 1, &v), SHB_OK);
  EXPECT_NEAR(v, 34.75, 1e-12);
  EXPECT_EQ(shb_block_cost(-1.0, 125.0, 0.014, 0.033, 1, &v), SHB_ERR_SEMANTIC);
}

TEST_F(CApi, HandleRequestNeverFailsOnBadInput) {
  int status = 0;
  char* body = nullptr;
  char* type = nullptr;
  ASSERT_EQ(shb_handle_request(engine_, "POST", "/api/v1/simulate", "{bad", &status, &body, &type), SHB_OK);
  EXPECT_EQ(status, 400);
  EXPECT_EQ(take(type), "application/json");
  EXPECT_TRUE(Json::parse(take(body)).contains("error"));
}

TEST_F(CApi, ReferenceComparisonFormats) {
  char* out = nullptr;
  ASSERT_EQ(shb_reference_comparison(engine_, "json", &out), SHB_OK);
  EXPECT_EQ(Json::parse(take(out)).size(), 4u);
  ASSERT_EQ(shb_reference_comparison(engine_, "table", &out), SHB_OK);
  EXPECT_NE(take(out).find("Stuttgart"), std::string::npos);
}

}  // namespace
