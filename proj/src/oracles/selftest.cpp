#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

#include "korobov/index_set.hpp"
#include "korobov/lattice.hpp"
#include "korobov/quantum.hpp"
#include "korobov/space.hpp"
#include "oracles.hpp"

namespace korobov {
namespace {

struct Check {
  const char* name;
  std::function<double()> deviation;  // measured discrepancy
  double tolerance;
};

}  // namespace

bool run_selftest(std::ostream& log) {
  const Check checks[] = {
      {"zeta(2), zeta(3.5)",
       [] {
         return std::max(std::abs(zeta(2.0) - oracle::zeta(2.0)),
                         std::abs(zeta(3.5) - oracle::zeta(3.5)));
       },
       1e-11},
      {"cosine series alpha = 2.5",
       [] {
         double worst = 0.0;
         for (double t : {0.1, 0.25, 0.4, 0.5}) {
           const auto ref = oracle::cosine_series(2.5, t, 200'000);
           worst = std::max(worst, std::abs(cosine_series(2.5, t) - ref.value) - ref.tail_bound);
         }
         return std::max(0.0, worst);
       },
       1e-10},
      {"index set vs box scan",
       [] {
         double mismatches = 0.0;
         for (double kappa : {0.0, 1.0, 2.0}) {
           const SpaceDescriptor sp(3, 2.0, WeightSchedule::polynomial(1.0, kappa));
           for (double eps : {0.5, 0.25, 0.125}) {
             if (enumerate(sp, eps).members() != oracle::index_set(sp, eps)) mismatches += 1.0;
           }
         }
         return mismatches;
       },
       0.0},
      {"lattice error kernel vs dual",
       [] {
         const SpaceDescriptor sp(2, 2.0, WeightSchedule::polynomial(1.0, 1.0));
         const auto rule = search_generator(sp, 17, SearchMode::kCbc);
         return std::abs(worst_case_int_error(sp, rule) - worst_case_int_error_dual(sp, rule));
       },
       1e-8},
      {"lattice error d=1 N=5",
       [] {
         const SpaceDescriptor sp(1, 2.0, WeightSchedule::constant(1.0));
         return std::abs(worst_case_int_error(sp, LatticeRule(5, {1})) -
                         std::numbers::pi / std::sqrt(75.0));
       },
       1e-12},
      {"primality vs trial division",
       [] {
         double bad = 0.0;
         for (std::uint64_t n = 0; n < 20'000; ++n) bad += is_prime(n) != oracle::is_prime(n);
         return bad;
       },
       0.0},
      {"amplitude estimation pmf vs statevector",
       [] {
         double worst = 0.0;
         for (std::uint64_t m : {4u, 16u, 64u}) {
           for (int i = 0; i <= 20; ++i) {
             const auto p = amplitude_estimation_pmf(0.05 * i, m);
             const auto q = oracle::amplitude_estimation_statevector(0.05 * i, m);
             for (std::size_t y = 0; y < m; ++y) worst = std::max(worst, std::abs(p[y] - q[y]));
           }
         }
         return worst;
       },
       1e-10},
  };

  bool ok = true;
  for (const auto& c : checks) {
    double dev;
    std::string what;
    try {
      dev = c.deviation();
    } catch (const std::exception& e) {
      dev = INFINITY;
      what = e.what();
    }
    const bool pass = dev <= c.tolerance;
    ok = ok && pass;
    log << (pass ? "ok   " : "FAIL ") << c.name << "  deviation " << dev << " (tol " << c.tolerance
        << ")";
    if (!what.empty()) log << "  " << what;
    log << '\n';
  }
  log << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok;
}

}  // namespace korobov
