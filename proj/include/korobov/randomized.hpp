#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "korobov/cost.hpp"
#include "korobov/fourier.hpp"
#include "korobov/index_set.hpp"
#include "korobov/space.hpp"

namespace korobov {

// n = ceil(2 |R(eps/sqrt2, d)| / eps^2).
std::uint64_t sample_size(const SpaceDescriptor& space, double epsilon);
std::uint64_t sample_size(const IndexSet& half_set, double epsilon);

/// One configured Monte Carlo run: coefficients on R(eps/sqrt2, d) are
/// estimated from n uniform samples drawn from a stream seeded with `seed`.
struct McRun {
  McRun(const SpaceDescriptor& space, double epsilon, std::uint64_t seed);
  McRun(const SpaceDescriptor& space, double epsilon, std::uint64_t n, std::uint64_t seed);

  SpaceDescriptor space;
  double epsilon;
  IndexSet index_set;
  std::uint64_t n;
  std::uint64_t seed;

  McRun with_seed(std::uint64_t s) const;
};

struct ApproxOutput {
  std::size_t d = 0;
  // One estimate y_h per member of the index set (zeros included).
  std::map<Frequency, Complex> coefficients;

  FourierPolynomial as_polynomial() const;
};

ApproxOutput approximate(const McRun& run, const FourierPolynomial& f);

// Exact E ||f - A(f)||^2 in L2.
double expected_sq_error(const IndexSet& half_set, std::uint64_t n, const FourierPolynomial& f);
double expected_sq_error(const SpaceDescriptor& space, double epsilon, std::uint64_t n,
                         const FourierPolynomial& f);

// ||f - y||^2 in L2 via Parseval, y supported on the index set.
double squared_error(const FourierPolynomial& f, const ApproxOutput& y);

struct EmpiricalError {
  double mean_sq = 0.0;
  double std_err = 0.0;
  std::size_t trials = 0;
};

// Trial t uses seed + t. Trials may run on several threads; the reduction
// is pairwise in trial order, so the result does not depend on `threads`.
EmpiricalError empirical_error(const McRun& run, const FourierPolynomial& f, std::size_t trials,
                               unsigned threads = 1);

struct RandomizedCost {
  std::uint64_t n = 0;
  std::size_t r_size = 0;
  double func_evals = 0.0;
  double combinatory_ops = 0.0;
  double total = 0.0;
};

// func_evals = n, combinatory = n d |R| + d |R|, total = n c(d) + combinatory.
RandomizedCost cost_model_randomized(const SpaceDescriptor& space, double epsilon,
                                     const EvalCostFn& c_of_d);

}  // namespace korobov
