#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "korobov/errors.hpp"
#include "korobov/rng.hpp"
#include "korobov/space.hpp"
#include "korobov/special_functions.hpp"
#include "oracles.hpp"

using namespace korobov;

namespace {

SpaceDescriptor one_d(double alpha, double gamma) {
  return {1, alpha, WeightSchedule::explicit_weights({gamma})};
}

const double kPi = std::numbers::pi;

}  // namespace

TEST(WeightSchedule, RejectsIncreasingOrOutOfRange) {
  EXPECT_THROW(WeightSchedule::explicit_weights({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::explicit_weights({1.5}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::explicit_weights({0.5, 0.0}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::polynomial(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::polynomial(1.0, -1.0), std::invalid_argument);
}

TEST(WeightSchedule, PolynomialFamily) {
  const auto w = WeightSchedule::polynomial(0.5, 2.0);
  EXPECT_DOUBLE_EQ(w.gamma(1), 0.5);
  EXPECT_DOUBLE_EQ(w.gamma(3), 0.5 / 9.0);
  EXPECT_FALSE(w.length().has_value());
  EXPECT_DOUBLE_EQ(WeightSchedule::constant(0.7).gamma(100), 0.7);
}

TEST(SpaceDescriptor, Validation) {
  EXPECT_THROW(SpaceDescriptor(0, 2.0, WeightSchedule::constant(1.0)), std::invalid_argument);
  EXPECT_THROW(SpaceDescriptor(1, -1.0, WeightSchedule::constant(1.0)), std::invalid_argument);
  // explicit schedule shorter than d
  EXPECT_THROW(SpaceDescriptor(3, 2.0, WeightSchedule::explicit_weights({1.0, 0.5})),
               std::invalid_argument);
  EXPECT_THROW(SpaceDescriptor(1, 1.0, WeightSchedule::constant(1.0)).require_kernel(), DomainError);
}

TEST(WeightFactor, Examples) {
  const auto sp = one_d(2.0, 0.5);
  EXPECT_DOUBLE_EQ(weight_factor(sp, 1, 3), 18.0);
  EXPECT_DOUBLE_EQ(weight_factor(sp, 1, 0), 1.0);
  EXPECT_DOUBLE_EQ(weight_factor(one_d(0.0, 0.5), 1, 7), 1.0);
}

TEST(WeightProduct, Examples) {
  const SpaceDescriptor ones(2, 2.0, WeightSchedule::constant(1.0));
  const std::int64_t h[] = {2, 3};
  EXPECT_DOUBLE_EQ(weight_product(ones, h), 36.0);
  const std::int64_t zero[] = {0, 0};
  EXPECT_DOUBLE_EQ(weight_product(ones, zero), 1.0);
  const SpaceDescriptor quarter(2, 2.0, WeightSchedule::explicit_weights({1.0, 0.25}));
  const std::int64_t one[] = {1, 1};
  EXPECT_DOUBLE_EQ(weight_product(quarter, one), 4.0);
}

TEST(WeightProduct, AtLeastOneSymmetricAndMatchesOracle) {
  const SpaceDescriptor sp(3, 1.7, WeightSchedule::polynomial(0.8, 1.0));
  SplitMix64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::int64_t h[3], neg[3];
    bool zero = true;
    for (int j = 0; j < 3; ++j) {
      h[j] = static_cast<std::int64_t>(rng.below(11)) - 5;
      neg[j] = -h[j];
      zero = zero && h[j] == 0;
    }
    const double r = weight_product(sp, h);
    EXPECT_GE(r, 1.0);
    EXPECT_EQ(r == 1.0, zero);
    EXPECT_DOUBLE_EQ(r, weight_product(sp, neg));
    EXPECT_NEAR(r, oracle::weight_product(sp, h), 1e-12 * r);
  }
}

TEST(Zeta, MatchesOracleAndClosedForms) {
  EXPECT_NEAR(zeta(2.0), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(zeta(4.0), std::pow(kPi, 4) / 90.0, 1e-14);
  EXPECT_NEAR(zeta(2.0), 1.644934066848, 1e-12);
  EXPECT_NEAR(zeta(4.0), 1.082323233711, 1e-12);
  for (double s : {1.1, 1.5, 2.5, 3.0, 7.25, 20.0}) {
    EXPECT_NEAR(zeta(s), oracle::zeta(s), 1e-12 * zeta(s)) << "s = " << s;
  }
  EXPECT_THROW(zeta(1.0), DomainError);
  EXPECT_THROW(zeta(0.5), DomainError);
}

TEST(HurwitzZeta, ReducesToRiemann) {
  EXPECT_NEAR(special::hurwitz_zeta(3.0, 1.0), zeta(3.0), 1e-13);
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  EXPECT_NEAR(special::hurwitz_zeta(2.5, 0.5), (std::pow(2.0, 2.5) - 1.0) * zeta(2.5), 1e-12);
  // zeta(s, q) = q^-s + zeta(s, q + 1)
  EXPECT_NEAR(special::hurwitz_zeta(1.5, 0.3),
              std::pow(0.3, -1.5) + special::hurwitz_zeta(1.5, 1.3), 1e-11);
}

TEST(CosineSeries, ClosedFormAndExpansionAgree) {
  for (double alpha : {2.0, 4.0, 6.0}) {
    const special::CosineSeries closed(alpha, special::CosineSeries::Method::kClosedForm);
    const special::CosineSeries series(alpha, special::CosineSeries::Method::kExpansion);
    for (double t = 0.0; t <= 1.0; t += 0.0625) {
      EXPECT_NEAR(closed(t), series(t), 1e-12) << alpha << " " << t;
    }
  }
}

TEST(CosineSeries, MatchesDirectSumWithinTailBound) {
  for (double alpha : {1.5, 2.5, 3.3}) {
    for (double t : {0.05, 0.2, 0.37, 0.5, 0.81}) {
      const auto ref = oracle::cosine_series(alpha, t, 400'000);
      EXPECT_NEAR(cosine_series(alpha, t), ref.value, ref.tail_bound + 1e-12)
          << alpha << " " << t;
    }
  }
}

TEST(Kernel, Examples) {
  const auto sp = one_d(2.0, 1.0);
  const double x[] = {0.3}, y[] = {0.8};
  EXPECT_NEAR(kernel_eval(sp, x, x), 1.0 + 2.0 * zeta(2.0), 1e-12);
  EXPECT_NEAR(kernel_eval(sp, x, x), 4.289868, 1e-6);
  EXPECT_NEAR(kernel_eval(sp, x, y), 1.0 + 2.0 * kPi * kPi * (0.25 - 0.5 + 1.0 / 6.0), 1e-12);
  EXPECT_NEAR(kernel_eval(sp, x, y), -0.644934, 1e-6);
  const SpaceDescriptor two(2, 2.0, WeightSchedule::constant(1.0));
  const double p[] = {0.1, 0.9};
  EXPECT_NEAR(kernel_eval(two, p, p), std::pow(1.0 + 2.0 * zeta(2.0), 2), 1e-10);
  EXPECT_NEAR(kernel_eval(two, p, p), 18.402, 1e-3);
  EXPECT_THROW(kernel_eval(one_d(1.0, 1.0), x, y), DomainError);
}

TEST(Kernel, TranslationInvarianceAndDiagonal) {
  for (double alpha : {1.5, 2.0, 3.7}) {
    const SpaceDescriptor sp(3, alpha, WeightSchedule::polynomial(1.0, 1.0));
    SplitMix64 rng(11);
    for (int t = 0; t < 100; ++t) {
      double x[3], y[3], xs[3], ys[3];
      for (int j = 0; j < 3; ++j) {
        x[j] = rng.uniform();
        y[j] = rng.uniform();
        const double shift = rng.uniform();
        xs[j] = x[j] + shift;
        ys[j] = y[j] + shift;
      }
      EXPECT_NEAR(kernel_eval(sp, x, y), kernel_eval(sp, xs, ys), 1e-8);
      EXPECT_NEAR(kernel_eval(sp, y, y), kernel_diag(sp), 1e-8);
    }
  }
}

TEST(Kernel, DiagExamples) {
  EXPECT_NEAR(kernel_diag(one_d(2.0, 1.0)), 4.289868, 1e-6);
  const SpaceDescriptor sp(3, 2.0, WeightSchedule::polynomial(1.0, 2.0));
  const double z2 = oracle::zeta(2.0);
  EXPECT_NEAR(kernel_diag(sp), (1 + 2 * z2) * (1 + 2 * z2 / 4) * (1 + 2 * z2 / 9), 1e-10);
  EXPECT_NEAR(kernel_diag(sp), 4.289868 * 1.822467 * 1.365541, 1e-5);
  EXPECT_DOUBLE_EQ(kernel_diag(2.0, {}), 1.0);
}

TEST(SupNormBound, Examples) {
  EXPECT_NEAR(sup_norm_bound(one_d(2.0, 1.0)), std::exp(oracle::zeta(2.0)), 1e-10);
  EXPECT_NEAR(sup_norm_bound(one_d(2.0, 1.0)), 5.1807, 1e-4);
  EXPECT_NEAR(sharp_sup_norm_bound(one_d(2.0, 1.0)), 2.0712, 1e-4);
  EXPECT_NEAR(sup_norm_bound(one_d(2.0, 1e-12)), 1.0, 1e-10);
  // the sharp bound is never worse
  const SpaceDescriptor sp(4, 1.5, WeightSchedule::polynomial(1.0, 1.0));
  EXPECT_LE(sharp_sup_norm_bound(sp), sup_norm_bound(sp));
}

TEST(AlgebraConstant, Examples) {
  EXPECT_NEAR(algebra_constant(one_d(2.0, 1.0)), 2.0 * std::sqrt(1 + 2 * oracle::zeta(2.0)), 1e-10);
  EXPECT_NEAR(algebra_constant(one_d(2.0, 1.0)), 4.1424, 1e-4);
  const SpaceDescriptor sp(2, 3.0, WeightSchedule::constant(1.0));
  EXPECT_NEAR(algebra_constant(sp), 8.0 * (1.0 + 2.0 * 1.2020569031595942), 1e-9);
  EXPECT_NEAR(algebra_constant(sp), 27.233, 1e-3);
  // log2 C(d) is linear in d for constant weights
  double prev = 0.0, step = 0.0;
  for (std::size_t d = 1; d <= 6; ++d) {
    const double lc = std::log2(algebra_constant(SpaceDescriptor(d, 2.0, WeightSchedule::constant(1.0))));
    if (d == 2) step = lc - prev;
    if (d > 2) EXPECT_NEAR(lc - prev, step, 1e-12);
    prev = lc;
  }
}

TEST(SumExponent, Examples) {
  EXPECT_DOUBLE_EQ(sum_exponent(WeightSchedule::polynomial(1.0, 2.0)), 0.5);
  EXPECT_DOUBLE_EQ(sum_exponent(WeightSchedule::polynomial(1.0, 1.0)), 1.0);
  EXPECT_TRUE(std::isinf(sum_exponent(WeightSchedule::constant(1.0))));
  EXPECT_THROW(sum_exponent(WeightSchedule::explicit_weights({1.0})), std::invalid_argument);
  double prev = INFINITY;
  for (double kappa : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double s = sum_exponent(WeightSchedule::polynomial(1.0, kappa));
    EXPECT_LE(s, prev);
    prev = s;
  }
}

TEST(ShiftedNormBound, ExamplesAndOracle) {
  const Frequency zero{0, 0};
  const SpaceDescriptor two(2, 2.0, WeightSchedule::explicit_weights({1.0, 0.1}));
  EXPECT_NEAR(shifted_norm_bound(two, zero), std::sqrt(4.0 * 1.0), 1e-12);

  const Frequency h1{1};
  EXPECT_NEAR(shifted_norm_bound(one_d(2.0, 1.0), h1), 2.0, 1e-12);
  EXPECT_NEAR(oracle::shifted_norm_ratio(one_d(2.0, 1.0), h1, 10'000), 2.0, 1e-12);

  const Frequency h2{2};
  EXPECT_NEAR(shifted_norm_bound(one_d(2.0, 0.1), h2), std::sqrt(40.0), 1e-12);
  EXPECT_LE(oracle::shifted_norm_ratio(one_d(2.0, 0.1), h2, 10'000), std::sqrt(40.0) + 1e-12);

  for (double gamma : {1.0, 0.3, 0.05}) {
    for (std::int64_t k : {-3, 0, 1, 5}) {
      const Frequency h{k};
      EXPECT_LE(oracle::shifted_norm_ratio(one_d(1.5, gamma), h, 10'000),
                shifted_norm_bound(one_d(1.5, gamma), h) * (1 + 1e-12));
    }
  }
}
