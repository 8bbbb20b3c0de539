#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "korobov/errors.hpp"
#include "korobov/lattice.hpp"
#include "korobov/rng.hpp"
#include "oracles.hpp"

using namespace korobov;

namespace {

SpaceDescriptor poly(std::size_t d, double alpha, double kappa) {
  return {d, alpha, WeightSchedule::polynomial(1.0, kappa)};
}

const double kPiOverSqrt75 = std::numbers::pi / std::sqrt(75.0);

}  // namespace

TEST(Primes, NextPrimeAndTrialDivision) {
  EXPECT_EQ(next_prime(10), 11u);
  EXPECT_EQ(next_prime(17), 17u);
  EXPECT_EQ(next_prime(2), 2u);
  const std::uint64_t p = next_prime(243 * 10'000);
  EXPECT_TRUE(oracle::is_prime(p));
  for (std::uint64_t n = 2'430'000; n < p; ++n) EXPECT_FALSE(oracle::is_prime(n));
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  // large values: Carmichael numbers, a 64-bit prime and its square neighbours
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(4294967291ULL * 4294967279ULL));
}

TEST(LatticeRule, Validation) {
  EXPECT_THROW(LatticeRule(9, {1}), std::invalid_argument);
  EXPECT_THROW(LatticeRule(7, {0}), std::invalid_argument);
  EXPECT_THROW(LatticeRule(7, {7}), std::invalid_argument);
}

TEST(Nodes, Examples) {
  const auto x = nodes(LatticeRule(5, {2}));
  const std::vector<double> expected{0.0, 0.4, 0.8, 0.2, 0.6};
  ASSERT_EQ(x.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(x[j][0], expected[j], 1e-15);
  // on the 1/N grid, and the node multiset is invariant under z -> c z (d = 1)
  auto sorted = [](LatticeRule r) {
    std::vector<double> v;
    for (const auto& p : nodes(r)) v.push_back(p[0]);
    std::sort(v.begin(), v.end());
    return v;
  };
  for (std::int64_t z = 1; z < 13; ++z) {
    const auto v = sorted(LatticeRule(13, {z}));
    EXPECT_EQ(v, sorted(LatticeRule(13, {1})));
    for (double u : v) EXPECT_NEAR(u * 13, std::round(u * 13), 1e-12);
  }
}

TEST(Integrate, ConstantAliasAndDualOracle) {
  const LatticeRule r1(7, {3});
  EXPECT_NEAR(std::abs(integrate(r1, [](auto) { return Complex(2.5, -1.0); }) - Complex(2.5, -1.0)),
              0.0, 1e-14);
  FourierPolynomial alias(1);
  alias.set({7}, Complex(0.4, 0.2));
  const PointFunction fa = [&](std::span<const double> x) { return evaluate(alias, x); };
  EXPECT_LE(std::abs(integrate(r1, fa) - Complex(0.4, 0.2)), 1e-12);

  const auto sp = poly(3, 2.0, 1.0);
  const LatticeRule rule(31, {1, 12, 7});
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto f = random_unit(sp, 30, 40, s);
    const PointFunction pf = [&](std::span<const double> x) { return evaluate(f, x); };
    const Frequency zero{0, 0, 0};
    const Complex q = integrate(rule, pf);
    EXPECT_LE(std::abs(q - lattice_sum(rule, f, zero)), 1e-12);
    // integrate - integral = sum of coefficients on nonzero dual frequencies
    Complex dual = 0.0;
    for (const auto& [h, c] : f.terms()) {
      if (h != zero && rule.in_dual(h)) dual += c;
    }
    EXPECT_LE(std::abs(q - integral(f) - dual), 1e-12);
    for (const auto& [h, c] : f.terms()) {
      EXPECT_LE(std::abs(lattice_sum(rule, f, h) - oracle::lattice_sum(rule, f, h)), 1e-12);
    }
  }
}

TEST(WorstCaseError, Examples) {
  const auto sp = poly(1, 2.0, 0.0);
  for (std::int64_t z = 1; z < 5; ++z) {
    EXPECT_NEAR(worst_case_int_error(sp, LatticeRule(5, {z})), kPiOverSqrt75, 1e-12);
    EXPECT_NEAR(worst_case_int_error_dual(sp, LatticeRule(5, {z})), kPiOverSqrt75, 1e-12);
  }
  // e^2(N) = 2 gamma zeta(alpha) / N^alpha in d = 1
  for (double alpha : {1.5, 2.0, 3.0}) {
    const SpaceDescriptor one(1, alpha, WeightSchedule::constant(0.6));
    double prev = INFINITY;
    for (std::uint64_t n : {5u, 11u, 101u, 1009u}) {
      const double e = worst_case_int_error(one, LatticeRule(n, {1}));
      EXPECT_NEAR(e * e, 2.0 * 0.6 * zeta(alpha) / std::pow(n, alpha), 1e-12);
      EXPECT_LT(e, prev);
      prev = e;
    }
  }
  EXPECT_THROW(worst_case_int_error(poly(1, 1.0, 0.0), LatticeRule(5, {1})), DomainError);
}

TEST(WorstCaseError, KernelAndDualFormsAgree) {
  for (double alpha : {1.5, 2.0, 3.5}) {
    for (double kappa : {0.0, 1.0}) {
      const auto sp = poly(3, alpha, kappa);
      for (const auto& rule : {LatticeRule(17, {1, 5, 7}), LatticeRule(101, {1, 27, 38})}) {
        const double k = worst_case_int_error(sp, rule);
        EXPECT_NEAR(k, worst_case_int_error_dual(sp, rule), 1e-8) << alpha << " " << kappa;
        const auto box = oracle::dual_error_sq(sp, rule, 60);
        EXPECT_LE(box.value, k * k + 1e-12);
        EXPECT_GE(box.value + box.tail_bound, k * k - 1e-12);
      }
    }
  }
}

TEST(WorstCaseError, AttainedByRepresenter) {
  // The representer of the error functional has coefficients 1/r(h) on the
  // nonzero dual frequencies. Its box truncation xi_B has gap = |xi_B|^2, so
  // gap/norm = |xi_B|, which increases to e from below; the deficit must sit
  // inside the oracle's tail bound for that box.
  const auto sp = poly(2, 2.0, 1.0);
  const LatticeRule rule(13, {1, 5});
  const double e = worst_case_int_error(sp, rule);
  for (std::int64_t box : {50, 200}) {
    FourierPolynomial xi(2);
    for (std::int64_t a = -box; a <= box; ++a) {
      for (std::int64_t b = -box; b <= box; ++b) {
        const Frequency h{a, b};
        if ((a || b) && rule.in_dual(h)) xi.set(h, 1.0 / weight_product(sp, h));
      }
    }
    const double norm = korobov_norm(sp, xi);
    const Complex gap = lattice_sum(rule, xi, {0, 0}) - integral(xi);
    const double ratio = std::abs(gap) / norm;
    EXPECT_NEAR(ratio, norm, 1e-10 * norm);
    const auto tail = oracle::dual_error_sq(sp, rule, box);
    EXPECT_LE(ratio, e + 1e-12);
    EXPECT_LE(e * e - ratio * ratio, tail.tail_bound + 1e-12) << box;
  }
}

TEST(Search, OneDimensionAllEquivalent) {
  const auto sp = poly(1, 2.0, 0.0);
  const auto rule = search_generator(sp, 5, SearchMode::kExhaustive);
  EXPECT_EQ(rule.generator(), std::vector<std::int64_t>{1});
  EXPECT_NEAR(worst_case_int_error(sp, rule), kPiOverSqrt75, 1e-12);
}

TEST(Search, ExhaustiveIsOptimalAndBeatsCbc) {
  for (double kappa : {0.0, 1.0, 2.0}) {
    const auto sp = poly(2, 2.0, kappa);
    const auto ex = search_generator(sp, 17, SearchMode::kExhaustive);
    const auto cbc = search_generator(sp, 17, SearchMode::kCbc);
    const double e_ex = worst_case_int_error(sp, ex);
    EXPECT_GE(worst_case_int_error(sp, cbc), e_ex - 1e-15);
    for (std::int64_t z = 1; z < 17; ++z) {
      EXPECT_GE(worst_case_int_error(sp, LatticeRule(17, {1, z})), e_ex - 1e-15);
    }
  }
}

TEST(Search, CapsAndPrimality) {
  const auto sp = poly(4, 2.0, 1.0);
  EXPECT_THROW(search_generator(sp, 1009, SearchMode::kExhaustive), InfeasibleError);
  EXPECT_THROW(search_generator(sp, 100, SearchMode::kCbc), std::invalid_argument);
  EXPECT_THROW(search_generator(sp, 1'000'003, SearchMode::kCbc), InfeasibleError);
}

TEST(Bound, Formula) {
  const SpaceDescriptor sp(2, 2.0, WeightSchedule::explicit_weights({1.0, 0.5}));
  EXPECT_NEAR(lattice_error_bound(sp, 101), std::sqrt(3.0 * 2.0 / 101.0), 1e-15);
}
