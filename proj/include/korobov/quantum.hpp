#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "korobov/cost.hpp"
#include "korobov/fourier.hpp"
#include "korobov/index_set.hpp"
#include "korobov/lattice.hpp"
#include "korobov/rng.hpp"
#include "korobov/space.hpp"

namespace korobov {

// ---------------------------------------------------------------------------
// Amplitude estimation at the level of its outcome distribution.

// Outcome distribution of phase estimation with M grid points on the Grover
// operator of amplitude a: P(y) = F(y - M theta)/2 + F(y + M theta)/2 with
// theta = asin(sqrt a)/pi and the Fejer-type kernel
// F(D) = sin^2(pi D) / (M^2 sin^2(pi D / M)).
std::vector<double> amplitude_estimation_pmf(double a, std::uint64_t m);

// One outcome drawn from amplitude_estimation_pmf(a, m) without building it.
std::uint64_t sample_amplitude_estimation(double a, std::uint64_t m, SplitMix64& rng);

// sin^2(pi y / M).
double decode_amplitude(std::uint64_t y, std::uint64_t m);

// Largest power of two <= n (n >= 1).
std::uint64_t phase_grid(std::uint64_t n_queries);
// Smallest power of two >= n.
std::uint64_t next_pow2(std::uint64_t n);

// ---------------------------------------------------------------------------
// Quantum summation of bounded sequences.

struct QuantumSumConfig {
  std::uint64_t n_queries = 256;
  std::uint64_t repetitions = 1;  // odd
  double m_bound = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Calibrated constant of the error contract |est - S| <= c M_bound / n_queries,
// holding with probability >= 3/4 for one repetition.
inline constexpr double kQsumConstant = 8.0;

// Queries charged to one qsum call: one amplitude estimation on grid M per
// repetition, M oracle calls each.
std::uint64_t qsum_queries(const QuantumSumConfig& config);

using Sequence = std::function<double(std::uint64_t)>;

// Median of `repetitions` amplitude-estimation estimates of the mean of g
// over j = 0..n-1. The mean (and hence the amplitude) is computed exactly,
// then outcomes are sampled. Throws DomainError if |g(j)| > m_bound.
double qsum(const Sequence& g, std::uint64_t n, const QuantumSumConfig& config);

// Same, given the exact mean directly (|mean| <= m_bound).
double qsum_from_mean(double mean, const QuantumSumConfig& config);

// l = 2 ceil(4 ln(1/target)) + 1.
std::uint64_t boosted_repetitions(double target_failure);

double qsum_boosted(const Sequence& g, std::uint64_t n, double m_bound, std::uint64_t n_queries,
                    double target_failure, std::uint64_t seed);
double qsum_boosted_from_mean(double mean, double m_bound, std::uint64_t n_queries,
                              double target_failure, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Resource accounting.

struct ResourceReport {
  double queries = 0.0;
  std::uint64_t qubits = 0;
  double combinatory_ops = 0.0;
  double func_evals = 0.0;
  double failure_prob_bound = 0.0;
  double per_query_weight = 0.0;
  double total_cost = 0.0;

  // Adds counts; qubits and per-query weight take the maximum, failure
  // bounds add (union bound, capped at 1).
  void absorb(const ResourceReport& other);
};

// Ancilla qubits on top of the ceil(log2 N) index register: one amplitude
// qubit and one for the sign/phase kickback.
inline constexpr std::uint64_t kWorkspaceQubits = 2;

std::uint64_t ceil_log2(std::uint64_t n);

// log2 N + c(d) + 2d + 2, with log2 N rounded up.
double per_query_weight(std::uint64_t n, std::size_t d, const EvalCostFn& c_of_d);

// Empty string when the report is internally consistent; otherwise a
// description of the first violated identity. `sums` lists the per-sum
// reports the aggregate was built from (may be empty).
std::string validate_report(const ResourceReport& report, const std::vector<ResourceReport>& sums,
                            double assembly_ops);

// ---------------------------------------------------------------------------
// Coefficient estimation and the approximation pipeline.

struct ComplexSum {
  Complex estimate;
  Complex truth;  // exact lattice sum
  ResourceReport report;
};

// Estimates (1/N) sum_j f(x_j) exp(-2 pi i h.x_j) with two boosted quantum
// summations (real and imaginary part), each with error per_part_error and
// failure probability target_failure / 2. The bound on |f| is
// K_d(y,y)^(1/2) max(1, ||f||_d).
ComplexSum complex_lattice_sum(const SpaceDescriptor& space, const LatticeRule& rule,
                               const FourierPolynomial& f, const Frequency& h,
                               double per_part_error, std::uint64_t seed,
                               double target_failure = 0.25,
                               const EvalCostFn& c_of_d = EvalCost{});

struct PlanOptions {
  // Largest lattice size tried before the configuration is declared infeasible.
  std::uint64_t max_lattice_size = 100'000;
  EnumerationOptions enumeration{};
};

/// Everything in the pipeline that does not depend on f or the seed.
struct QuantumPlan {
  SpaceDescriptor space;
  double epsilon;
  IndexSet index_set;         // R(eps/3, d)
  LatticeRule rule;
  double m_bound;             // sup-norm bound used for the encoding
  double per_part_error;      // delta = (eps/3) / sqrt(2R)
  std::uint64_t n_queries;    // phase-grid size per amplitude estimation
  double per_sum_failure;     // 1 / (4R)
  double worst_case_error;    // of the rule over the unit ball
  double aliasing_bound;      // certified quadrature error over R, unit-norm f
  std::uint64_t n_generic;    // N the generic lattice bound would require
};

// Chooses N by doubling primes (CBC generators) until the aliasing
// certificate is <= eps/3 and N >= M_bound / delta.
QuantumPlan plan_quantum(const SpaceDescriptor& space, double epsilon,
                         const PlanOptions& options = {});

// sqrt(c * max_{h in R} sum_{0 != m in dual} r(h + m)^-1), where c is the
// largest number of members of R sharing a residue h.z mod N: the L2 norm of
// the quadrature errors over R for any f with ||f||_d <= 1.
double aliasing_bound(const SpaceDescriptor& space, const LatticeRule& rule, const IndexSet& set);

struct QuantumApproxOutput {
  std::size_t d = 0;
  std::map<Frequency, Complex> coefficients;
  ResourceReport report;
  std::vector<ResourceReport> sums;  // one per member of R, for validate_report
  double assembly_ops = 0.0;
  std::uint64_t lattice_size = 0;

  FourierPolynomial as_polynomial() const;
};

// h-sums run in order; threads > 1 distributes them with per-h seeds
// derive_seed(seed, index), giving results identical to threads = 1.
QuantumApproxOutput run_quantum(const QuantumPlan& plan, const FourierPolynomial& f,
                                std::uint64_t seed, const EvalCostFn& c_of_d = EvalCost{},
                                unsigned threads = 1);

QuantumApproxOutput quantum_approximate(const SpaceDescriptor& space, double epsilon,
                                        const EvalCostFn& c_of_d, std::uint64_t seed,
                                        const FourierPolynomial& f);

// Exact squared L2 error of an approximation supported on the index set.
double squared_error(const FourierPolynomial& f, const QuantumApproxOutput& y);

struct QuantumCostModel {
  std::size_t r_size = 0;
  double m_bound = 0.0;
  double log2_n = 0.0;
  ResourceReport sup_path;  // bounded sequences (p = infinity)
  double l2_path_queries = 0.0;
  double l2_path_total = 0.0;
};

// Predicted cost without simulation. queries = R (M sqrt(R)/eps) log2 R, per
// query log2 N + c(d) + 2d + 2 with log2 N = max(log2(M sqrt(R)/eps),
// d log2 3 + (4 + p*) log2(1/eps)). The L2 path multiplies the query count by
// log^{3/2}(M sqrt(R)/eps) loglog(M sqrt(R)/eps).
QuantumCostModel cost_model_quantum(const SpaceDescriptor& space, double epsilon,
                                    const EvalCostFn& c_of_d);

}  // namespace korobov
