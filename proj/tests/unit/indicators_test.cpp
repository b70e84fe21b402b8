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

#include "smarthome/indicators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "smarthome/error.hpp"

namespace smarthome::indicators {
namespace {

std::vector<double> constant(double value, int years) { return std::vector<double>(years, value); }

// Closed-form present value of a unit annuity, (1 - (1+r)^-T) / r.
double annuity_factor(double r, int years) { return (1.0 - std::pow(1.0 + r, -years)) / r; }

TEST(EnergySavings, PerEndUseDifference) {
  thermal::SimulationResult ref{10000.0, 4000.0, 3000.0, {}};
  thermal::SimulationResult cand{6719.0, 757.0, 3000.0, {}};
  const auto s = annual_energy_savings(ref, cand);
  EXPECT_DOUBLE_EQ(s.heating_kwh, 3281.0);
  EXPECT_DOUBLE_EQ(s.cooling_kwh, 3243.0);
  EXPECT_DOUBLE_EQ(s.lighting_kwh, 0.0);
  EXPECT_DOUBLE_EQ(s.total_kwh(), 6524.0);
  EXPECT_EQ(annual_energy_savings(ref, ref).total_kwh(), 0.0);
  EXPECT_LT(annual_energy_savings(cand, ref).total_kwh(), 0.0);
}

TEST(Lifetime, ConstantAndSequence) {
  EXPECT_EQ(lifetime_energy_savings(6523.0, 10), 65230.0);
  EXPECT_EQ(lifetime_energy_savings(14222.0, 10), 142220.0);
  EXPECT_EQ(lifetime_energy_savings(0.0, 10), 0.0);
  const std::vector<double> yearly{1.0, 2.0, 3.0};
  EXPECT_EQ(lifetime_energy_savings(yearly), 6.0);
  EXPECT_THROW(lifetime_energy_savings(1.0, 0), SemanticError);
}

TEST(Payback, Examples) {
  const auto a = payback_period(268.93, 1270.45);
  EXPECT_EQ(a.status, PaybackStatus::Ok);
  EXPECT_NEAR(a.years, 0.2117, 5e-5);
  EXPECT_NEAR(payback_period(268.93, 114.90).years, 2.34, 5e-3);
  EXPECT_EQ(payback_period(0.0, 50.0).years, 0.0);
  EXPECT_EQ(payback_period(100.0, 0.0).status, PaybackStatus::ZeroSavings);
  EXPECT_EQ(payback_period(100.0, -5.0).status, PaybackStatus::NeverPaysBack);
}

TEST(Npv, Examples) {
  EXPECT_EQ(net_present_value(500.0, constant(100.0, 10), 0.0), 500.0);
  EXPECT_NEAR(net_present_value(268.93, constant(114.90, 10), 0.05), 114.90 * annuity_factor(0.05, 10) - 268.93,
              1e-9);
  EXPECT_NEAR(net_present_value(268.93, constant(114.90, 10), 0.05), 618.29, 0.01);
}

TEST(Npv, ZeroRateIsPlainSum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> flow(0.0, 3000.0), inv(0.0, 1000.0);
  for (int i = 0; i < 200; ++i) {
    const double f = flow(rng), in = inv(rng);
    const int years = 1 + i % 30;
    ASSERT_EQ(net_present_value(in, constant(f, years), 0.0), years * f - in);
  }
}

TEST(Npv, StrictlyDecreasingInRate) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> flow(1.0, 3000.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> flows(1 + trial % 20);
    for (auto& f : flows) f = flow(rng);
    double prev = net_present_value(100.0, flows, -0.5);
    for (double r = -0.45; r < 2.0; r += 0.05) {
      const double npv = net_present_value(100.0, flows, r);
      ASSERT_LT(npv, prev) << "rate " << r;
      prev = npv;
    }
  }
}

TEST(Adi, Examples) {
  EXPECT_NEAR(additional_disposable_income(constant(114.90, 10), 0.05), 887.22, 0.01);
  const std::vector<double> flows{1.0, 2.0, 4.0};
  EXPECT_EQ(additional_disposable_income(flows, 0.0), 7.0);
}

TEST(Adi, DiffersFromNpvByInvestment) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> flow(0.0, 3000.0), inv(0.0, 1000.0), rate(0.0, 0.2);
  for (int i = 0; i < 200; ++i) {
    const auto flows = constant(flow(rng), 10);
    const double in = inv(rng), r = rate(rng);
    const double adi = additional_disposable_income(flows, r);
    const double npv = net_present_value(in, flows, r);
    ASSERT_EQ(npv, adi - in);
    ASSERT_LE(std::abs((adi - npv) - in), std::nextafter(adi, INFINITY) - adi);
  }
}

TEST(Irr, MatchesHandOracle) {
  const auto irr = internal_rate_of_return(268.93, constant(1270.45, 10));
  ASSERT_TRUE(irr.has_value());
  EXPECT_NEAR(*irr, 4.72, 0.01);
}

TEST(Irr, ConstructedFixedPoint) {
  for (double r : {0.05, 0.12, -0.03}) {
    const auto flows = constant(250.0, 10);
    const double investment = additional_disposable_income(flows, r);
    const auto irr = internal_rate_of_return(investment, flows);
    ASSERT_TRUE(irr.has_value());
    EXPECT_NEAR(*irr, r, 1e-6);
  }
}

TEST(Irr, NpvVanishesAtRoot) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> flow(1.0, 3000.0), inv(1.0, 5000.0);
  for (int i = 0; i < 200; ++i) {
    const auto flows = constant(flow(rng), 1 + i % 25);
    const double in = inv(rng);
    const auto irr = internal_rate_of_return(in, flows);
    ASSERT_TRUE(irr.has_value());
    ASSERT_LT(std::abs(net_present_value(in, flows, *irr)), kIrrTolerance);
  }
}

TEST(Irr, NotDefinedWithoutSignChange) {
  EXPECT_FALSE(internal_rate_of_return(0.0, constant(100.0, 10)).has_value());
  EXPECT_FALSE(internal_rate_of_return(100.0, constant(-5.0, 10)).has_value());
  EXPECT_FALSE(internal_rate_of_return(0.0, constant(0.0, 10)).has_value());
  EXPECT_FALSE(internal_rate_of_return(50.0, constant(0.0, 10)).has_value());
}

TEST(Emissions, Co2FromSavings) {
  const auto table = default_emission_factors();
  ASSERT_EQ(table.size(), 10u);
  const auto* co2 = &table[5];
  ASSERT_EQ(co2->key, "co2");
  EXPECT_NEAR(emission_mass(11020.0, *co2) / 1000.0, 5.69, 5e-3);
  EXPECT_NEAR(emission_mass(14222.0, *co2) / 1000.0, 7.34, 5e-3);
  for (const auto& e : emission_savings(0.0, 0.0, table)) {
    EXPECT_EQ(e.annual, 0.0);
    EXPECT_EQ(e.lifetime, 0.0);
  }
  const auto neg = emission_savings(-100.0, -1000.0, table);
  EXPECT_LT(neg[5].annual, 0.0);
}

TEST(Report, StuttgartLowCostFromSavings) {
  const EnergySavings savings{7403.0, 2689.0, 0.0};
  const auto r = report_from_savings(savings, control::scenario(control::ScenarioKind::LowCost),
                                     tariff::germany_2019(), {}, default_emission_factors());
  EXPECT_NEAR(r.payback.years, 0.212, 5e-4);
  EXPECT_EQ(r.delta_e_lifetime_kwh, 100920.0);
  EXPECT_EQ(r.scenario, "low-cost");
  EXPECT_EQ(r.price_book, "germany-2019");
  EXPECT_FALSE(r.degenerate());
}

TEST(Report, AlgiersExtendedCo2) {
  const EnergySavings savings{3539.0, 6071.0, 1410.0};
  const auto r = report_from_savings(savings, control::scenario(control::ScenarioKind::Extended),
                                     tariff::algeria_2019(), {}, default_emission_factors());
  ASSERT_NE(r.emission("co2"), nullptr);
  EXPECT_NEAR(r.emission("co2")->annual / 1000.0, 5.69, 5e-3);
  EXPECT_EQ(r.emission("unknown"), nullptr);
}

TEST(Report, BaselineAgainstItselfIsDegenerate) {
  const thermal::SimulationResult ref{10000.0, 1000.0, 3000.0, {}};
  const auto r = full_report(ref, ref, control::scenario(control::ScenarioKind::Baseline), tariff::germany_2019(),
                             {}, default_emission_factors());
  EXPECT_EQ(r.delta_e_annual_kwh, 0.0);
  EXPECT_EQ(r.annual_cost_saving_eur, 0.0);
  EXPECT_EQ(r.payback.status, PaybackStatus::ZeroSavings);
  EXPECT_EQ(r.npv_eur, 0.0);
  EXPECT_TRUE(r.degenerate());
}

TEST(Report, FullReportUsesCostDifference) {
  const thermal::SimulationResult ref{12000.0, 6000.0, 3000.0, {}};
  const thermal::SimulationResult cand{8719.0, 2757.0, 3000.0, {}};
  const auto r = full_report(ref, cand, control::scenario(control::ScenarioKind::LowCost), tariff::algeria_2019(),
                             {}, default_emission_factors());
  EXPECT_NEAR(r.annual_cost_saving_eur, 114.8934, 1e-9);
  EXPECT_DOUBLE_EQ(r.econ.investment_eur, 268.93);
  EXPECT_NEAR(r.adi_eur, 114.8934 * annuity_factor(0.05, 10), 1e-9);
}

TEST(Econ, Validation) {
  EconParams e;
  e.horizon_years = 0;
  EXPECT_THROW(e.validate(), SemanticError);
  e = {};
  e.discount_rate = -1.0;
  EXPECT_THROW(e.validate(), SemanticError);
  e = {};
  e.investment_eur = -1.0;
  EXPECT_THROW(e.validate(), SemanticError);
}

}  // namespace
}  // namespace smarthome::indicators
