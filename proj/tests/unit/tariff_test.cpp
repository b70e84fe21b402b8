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

#include "smarthome/tariff.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smarthome/error.hpp"

namespace smarthome::tariff {
namespace {

// kWh-by-kWh accumulation: each unit (and the final fraction) is billed at
// the rate of the block it falls into within its billing period.
double brute_force_cost(double consumption, const BlockRate& b) {
  const double per_period = consumption / b.periods_per_year;
  double period_cost = 0.0;
  double used = 0.0;
  while (used < per_period) {
    const double step = std::min(1.0, per_period - used);
    // A unit straddling the threshold is split at it.
    const double low_part = std::clamp(b.threshold_kwh - used, 0.0, step);
    period_cost += low_part * b.low_rate_eur_per_kwh + (step - low_part) * b.high_rate_eur_per_kwh;
    used += step;
  }
  return period_cost * b.periods_per_year;
}

TEST(Tariff, GermanyFlatElectricity) {
  EXPECT_NEAR(annual_cost(1000.0, germany_2019().electricity), 304.80, 1e-9);
}

TEST(Tariff, AlgeriaBlockExamples) {
  const Tariff t{Carrier::Electricity, BlockRate{125.0, 0.014, 0.033, 1}};
  EXPECT_NEAR(annual_cost(100.0, t), 1.40, 1e-12);
  EXPECT_NEAR(annual_cost(1125.0, t), 34.75, 1e-12);
  EXPECT_EQ(annual_cost(0.0, t), 0.0);
}

TEST(Tariff, PresetsMatchPublishedPrices) {
  const auto de = germany_2019();
  EXPECT_EQ(std::get<FlatRate>(de.electricity.structure).rate_eur_per_kwh, 0.3048);
  EXPECT_EQ(std::get<FlatRate>(de.gas.structure).rate_eur_per_kwh, 0.0609);
  const auto dz = algeria_2019();
  const auto& el = std::get<BlockRate>(dz.electricity.structure);
  const auto& gas = std::get<BlockRate>(dz.gas.structure);
  EXPECT_EQ(el, (BlockRate{125.0, 0.014, 0.033, 1}));
  EXPECT_EQ(gas, (BlockRate{1125.0, 0.0012, 0.0024, 1}));
}

TEST(Tariff, BlockMatchesBruteForce) {
  std::mt19937_64 rng(20190101);
  std::uniform_real_distribution<double> use(0.0, 20000.0);
  for (const auto& b : {BlockRate{125.0, 0.014, 0.033, 1}, BlockRate{1125.0, 0.0012, 0.0024, 1},
                        BlockRate{125.0, 0.014, 0.033, 4}}) {
    const Tariff t{Carrier::Electricity, b};
    for (int i = 0; i < 1000; ++i) {
      const double kwh = use(rng);
      ASSERT_NEAR(annual_cost(kwh, t), brute_force_cost(kwh, b), 1e-9) << kwh;
    }
  }
}

TEST(Tariff, CostIsMonotone) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> use(0.0, 5000.0);
  for (const auto& t : {germany_2019().electricity, algeria_2019().electricity, algeria_2019().gas}) {
    for (int i = 0; i < 500; ++i) {
      const double a = use(rng), b = use(rng);
      ASSERT_LE(annual_cost(std::min(a, b), t), annual_cost(std::max(a, b), t));
    }
  }
}

TEST(Tariff, FlatIsLinear) {
  const auto t = germany_2019().gas;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> use(0.0, 5000.0);
  for (int i = 0; i < 500; ++i) {
    const double a = use(rng), b = use(rng);
    ASSERT_NEAR(annual_cost(a + b, t), annual_cost(a, t) + annual_cost(b, t), 1e-9);
  }
}

TEST(Tariff, NegativeConsumptionRejected) {
  try {
    annual_cost(-1.0, germany_2019().electricity);
    FAIL();
  } catch (const SemanticError& e) {
    EXPECT_NE(std::string(e.what()).find("NegativeConsumption"), std::string::npos);
  }
}

TEST(Tariff, SavingsValuation) {
  EXPECT_NEAR(marginal_cost_saving({2689.0, 7403.0}, germany_2019()), 1270.4499, 1e-9);
  EXPECT_NEAR(marginal_cost_saving({3243.0, 3281.0}, algeria_2019()), 114.8934, 1e-9);
  EXPECT_EQ(marginal_cost_saving({0.0, 0.0}, algeria_2019()), 0.0);
  // Baselines above both thresholds: cost difference equals the marginal value.
  const EnergyByCarrier base{9000.0, 12000.0}, scen{5757.0, 8719.0};
  EXPECT_NEAR(annual_cost_saving(base, scen, algeria_2019()), 114.8934, 1e-9);
  EXPECT_EQ(annual_cost_saving(base, base, germany_2019()), 0.0);
}

TEST(Tariff, ValidationRejectsBadBlocks) {
  PriceBook book = algeria_2019();
  book.electricity.structure = BlockRate{-1.0, 0.014, 0.033, 1};
  EXPECT_THROW(book.validate(), SemanticError);
  book.electricity.structure = BlockRate{125.0, 0.014, 0.033, 0};
  EXPECT_THROW(book.validate(), SemanticError);
  book.electricity.structure = FlatRate{-0.1};
  EXPECT_THROW(book.validate(), SemanticError);
}

}  // namespace
}  // namespace smarthome::tariff
