#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "korobov/rng.hpp"
#include "korobov/stats.hpp"

using namespace korobov;

TEST(PairwiseSum, MatchesLongDoubleReference) {
  SplitMix64 rng(11);
  std::vector<double> x(100'003);
  long double ref = 0.0L;
  for (auto& v : x) {
    v = rng.uniform() * 1e-3 + 1.0;
    ref += v;
  }
  EXPECT_NEAR(pairwise_sum(x), static_cast<double>(ref), 1e-9);
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
  EXPECT_EQ(pairwise_sum(std::vector<double>{2.5}), 2.5);
}

TEST(MeanWithError, SmallSample) {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  const auto m = mean_with_error(x);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  // sample sd sqrt(5/3), over sqrt(4)
  EXPECT_NEAR(m.std_err, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  EXPECT_THROW(mean_with_error(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Quantile, Interpolates) {
  const std::vector<double> x = {4.0, 1.0, 3.0, 2.0};
  EXPECT_DOUBLE_EQ(quantile(x, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(x, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(quantile(x, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile(x, 0.75), 3.25);
  EXPECT_THROW(quantile(x, 1.5), std::invalid_argument);
  EXPECT_THROW(quantile(std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST(FitLogLogSlope, RecoversPowerLaw) {
  std::vector<double> x, y;
  for (int k = 1; k <= 8; ++k) {
    x.push_back(std::ldexp(1.0, k));
    y.push_back(3.0 * std::pow(x.back(), 2.75));
  }
  EXPECT_NEAR(fit_loglog_slope(x, y), 2.75, 1e-12);
  EXPECT_THROW(fit_loglog_slope(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}),
               std::invalid_argument);
  EXPECT_THROW(fit_loglog_slope(x, std::vector<double>{1.0}), std::invalid_argument);
}
