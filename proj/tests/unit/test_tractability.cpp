#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "korobov/tractability.hpp"

using namespace korobov;

namespace {

SpaceDescriptor poly(std::size_t d, double alpha, double kappa) {
  return {d, alpha, WeightSchedule::polynomial(1.0, kappa)};
}

}  // namespace

TEST(ExponentAll, Examples) {
  EXPECT_DOUBLE_EQ(exponent_all(2.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(exponent_all(4.0, 1.0), 2.0);
  EXPECT_TRUE(std::isinf(exponent_all(2.0, 0.0)));
  EXPECT_TRUE(std::isinf(exponent_all(0.0, 1.0)));
  EXPECT_DOUBLE_EQ(exponent_all(poly(3, 2.0, 1.0)), 2.0);
  EXPECT_THROW(exponent_all(SpaceDescriptor(1, 2.0, WeightSchedule::explicit_weights({1.0}))),
               std::invalid_argument);
}

TEST(ExponentAll, MonotoneInKappaAndAlpha) {
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    double prev = INFINITY;
    for (double kappa : {0.25, 0.5, 1.0, 2.0, 8.0}) {
      EXPECT_LE(exponent_all(alpha, kappa), prev);
      prev = exponent_all(alpha, kappa);
    }
  }
  for (double kappa : {0.5, 1.0, 2.0}) {
    double prev = INFINITY;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
      EXPECT_LE(exponent_all(alpha, kappa), prev);
      prev = exponent_all(alpha, kappa);
    }
  }
}

TEST(Verdict, Examples) {
  const auto w_half = WeightSchedule::polynomial(1.0, 0.5);
  const auto ws = verdict(2.0, w_half, Setting::kWorstStd);
  EXPECT_FALSE(ws.tractable);
  const auto rs = verdict(2.0, w_half, Setting::kRandomizedStd);
  EXPECT_TRUE(rs.strongly_tractable);
  EXPECT_DOUBLE_EQ(rs.exponent_low, 4.0);
  EXPECT_DOUBLE_EQ(rs.exponent_high, 6.0);

  const auto strong = verdict(2.0, WeightSchedule::polynomial(1.0, 2.0), Setting::kWorstStd);
  EXPECT_TRUE(strong.strongly_tractable);
  EXPECT_DOUBLE_EQ(strong.exponent_low, 1.0);
  EXPECT_DOUBLE_EQ(strong.exponent_high, 3.0);

  const auto boundary = verdict(2.0, WeightSchedule::polynomial(1.0, 1.0), Setting::kWorstStd);
  EXPECT_TRUE(boundary.tractable);
  EXPECT_FALSE(boundary.strongly_tractable);

  for (Setting s : kAllSettings) {
    EXPECT_FALSE(verdict(2.0, WeightSchedule::constant(1.0), s).tractable) << to_string(s);
  }
  const auto q = verdict(2.0, WeightSchedule::polynomial(1.0, 1.0), Setting::kQuantumStd);
  EXPECT_TRUE(q.strongly_tractable);
  EXPECT_DOUBLE_EQ(q.exponent_high, 1.0 + 1.5 * 2.0);
  EXPECT_FALSE(verdict(0.5, WeightSchedule::polynomial(1.0, 1.0), Setting::kQuantumStd).tractable);
  EXPECT_FALSE(verdict(1.0, WeightSchedule::polynomial(1.0, 2.0), Setting::kWorstStd).tractable);
}

TEST(Verdict, ConsistencyAndEquivalences) {
  for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0, 4.0}) {
    for (double kappa : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
      const auto w = kappa == 0.0 ? WeightSchedule::constant(1.0) : WeightSchedule::polynomial(1.0, kappa);
      for (Setting s : kAllSettings) {
        const auto v = verdict(alpha, w, s);
        if (v.strongly_tractable) EXPECT_TRUE(v.tractable);
        EXPECT_LE(v.exponent_low, v.exponent_high);
        if (s == Setting::kWorstAll || s == Setting::kRandomizedStd) {
          EXPECT_EQ(v.strongly_tractable, v.tractable);
        }
      }
    }
  }
}

TEST(Verdict, SettingNames) {
  for (Setting s : kAllSettings) EXPECT_EQ(parse_setting(to_string(s)), s);
  EXPECT_THROW(parse_setting("nope"), std::invalid_argument);
}

TEST(GrowthStudy, SlopeMonotoneAndOneDimensional) {
  std::vector<double> eps;
  for (int k = 1; k <= 6; ++k) eps.push_back(std::ldexp(1.0, -k));
  const auto rows = growth_study(poly(3, 2.0, 2.0), eps, {1, 2, 3});
  ASSERT_EQ(rows.size(), 18u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].r_size.has_value());
    if (i % 6 != 0) EXPECT_GE(*rows[i].r_size, *rows[i - 1].r_size);
    if (i >= 6) EXPECT_GE(*rows[i].r_size, *rows[i - 6].r_size);
  }
  EXPECT_GE(rows[17].fitted_slope, 0.5);
  EXPECT_LE(rows[17].fitted_slope, 1.5);
  EXPECT_FALSE(rows[17].flagged);
  for (std::size_t i = 3; i < 6; ++i) {  // d = 1, eps <= 1/8
    const double est = 2.0 * std::pow(1.0, 0.5) / rows[i].epsilon;
    EXPECT_LE(*rows[i].r_size, 2.0 * est);
    EXPECT_GE(*rows[i].r_size, est / 2.0);
  }
  const auto capped = growth_study(poly(3, 0.5, 1.0), {0.5, 0.01}, {3}, {1000, false});
  EXPECT_TRUE(capped[0].r_size.has_value());
  EXPECT_FALSE(capped[1].r_size.has_value());
}

TEST(Speedup, PrefactorAndTrend) {
  EXPECT_DOUBLE_EQ(speedup_prefactor(7, EvalCost{}), 0.5);
  const auto table = speedup_table(poly(3, 2.0, 1.0), {0.25, 0.125, 0.0625}, EvalCost{});
  ASSERT_EQ(table.rows.size(), 3u);
  for (const auto& r : table.rows) EXPECT_NEAR(r.ratio, r.cost_rand / r.cost_quantum, 1e-12 * r.ratio);
  EXPECT_GT(table.ratio_slope, 0.0);
  // larger s_gamma, larger speedup exponent
  std::vector<double> eps;
  for (int k = 2; k <= 5; ++k) eps.push_back(std::ldexp(1.0, -k));
  const double big = speedup_table(poly(40, 2.0, 1.0), eps, EvalCost{}).ratio_slope;
  const double small = speedup_table(poly(40, 2.0, 4.0), eps, EvalCost{}).ratio_slope;
  EXPECT_GT(big, small);
}

TEST(Verdict, GoldenTable) {
  std::ifstream in(std::string(KOROBOV_GOLDEN_DIR) + "/verdicts.csv");
  ASSERT_TRUE(in) << "missing golden file";
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "setting,kappa,alpha,strongly_tractable,tractable,exponent_low,exponent_high");
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string setting, kappa, alpha, strong, tract, lo, hi;
    std::getline(ss, setting, ',');
    std::getline(ss, kappa, ',');
    std::getline(ss, alpha, ',');
    std::getline(ss, strong, ',');
    std::getline(ss, tract, ',');
    std::getline(ss, lo, ',');
    std::getline(ss, hi, ',');
    const double k = std::stod(kappa), a = std::stod(alpha);
    const auto w = k == 0.0 ? WeightSchedule::constant(1.0) : WeightSchedule::polynomial(1.0, k);
    const auto v = verdict(a, w, parse_setting(setting));
    EXPECT_EQ(v.strongly_tractable, strong == "true") << line;
    EXPECT_EQ(v.tractable, tract == "true") << line;
    EXPECT_EQ(v.exponent_low, std::stod(lo)) << line;
    EXPECT_EQ(v.exponent_high, std::stod(hi)) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 32);
}
