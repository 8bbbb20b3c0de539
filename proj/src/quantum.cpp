#include "korobov/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "korobov/errors.hpp"
#include "korobov/special_functions.hpp"
#include "korobov/tractability.hpp"

namespace korobov {
namespace {

constexpr double kPi = std::numbers::pi;
__extension__ using u128 = unsigned __int128;

// cos(2 pi r / M), exact at the quarter points.
double cos_turn(std::uint64_t y, std::uint64_t m) {
  const std::uint64_t r = y % m;
  if ((4 * r) % m == 0) {
    static constexpr double kQuarter[] = {1.0, 0.0, -1.0, 0.0};
    return kQuarter[4 * r / m];
  }
  const std::uint64_t folded = std::min(r, m - r);
  return std::cos(2.0 * kPi * static_cast<double>(folded) / static_cast<double>(m));
}

void require_grid(std::uint64_t m) {
  if (m < 2 || !std::has_single_bit(m) || m > (std::uint64_t{1} << 40)) {
    throw std::invalid_argument("phase grid M must be a power of two in [2, 2^40]");
  }
}

void require_amplitude(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("amplitude must lie in [0, 1]");
}

double grid_phase(double a) { return std::asin(std::sqrt(a)) / kPi; }

ResourceReport sum_report(std::uint64_t lattice_n, std::size_t d, std::uint64_t m,
                          std::uint64_t reps, double failure, const EvalCostFn& c_of_d) {
  ResourceReport r;
  // Two real summations, each reps amplitude estimations of M queries.
  r.queries = 2.0 * static_cast<double>(reps) * static_cast<double>(m);
  r.qubits = ceil_log2(lattice_n) + kWorkspaceQubits;
  r.func_evals = r.queries;
  r.combinatory_ops = 2.0 * static_cast<double>(reps);  // decode each outcome
  r.failure_prob_bound = failure;
  r.per_query_weight = per_query_weight(lattice_n, d, c_of_d);
  r.total_cost = r.queries * r.per_query_weight + r.combinatory_ops;
  return r;
}

ComplexSum lattice_sum_estimate(const SpaceDescriptor& space, const LatticeRule& rule,
                                const FourierPolynomial& f, const Frequency& h, double m_bound,
                                std::uint64_t n_queries, double target_failure,
                                std::uint64_t seed, const EvalCostFn& c_of_d) {
  ComplexSum out;
  out.truth = lattice_sum(rule, f, h);
  const double part_failure = target_failure / 2.0;
  const double re = qsum_boosted_from_mean(out.truth.real(), m_bound, n_queries, part_failure,
                                           derive_seed(seed, 0));
  const double im = qsum_boosted_from_mean(out.truth.imag(), m_bound, n_queries, part_failure,
                                           derive_seed(seed, 1));
  out.estimate = Complex(re, im);
  out.report = sum_report(rule.size(), space.dim(), phase_grid(n_queries),
                          boosted_repetitions(part_failure), target_failure, c_of_d);
  return out;
}

double encoding_bound(const SpaceDescriptor& space, const FourierPolynomial& f) {
  return sharp_sup_norm_bound(space) * std::max(1.0, korobov_norm(space, f));
}

std::uint64_t queries_for(double m_bound, double per_part_error) {
  const double n = std::ceil(kQsumConstant * m_bound / per_part_error);
  if (!(n < 0x1p40)) throw InfeasibleError("quantum summation: phase grid beyond 2^40");
  return next_pow2(static_cast<std::uint64_t>(n));
}

// Finite-dimensional stand-in for p* when the schedule is not an infinite
// polynomial family with kappa > 0: |R(eps, d)| = O(eps^{-2/alpha}) up to logs.
double cost_exponent(const SpaceDescriptor& space) {
  const auto& w = space.weights();
  if (w.is_polynomial() && w.decay() > 0.0) return exponent_all(space);
  return 2.0 / space.alpha();
}

}  // namespace

std::vector<double> amplitude_estimation_pmf(double a, std::uint64_t m) {
  require_amplitude(a);
  require_grid(m);
  const double theta = grid_phase(a);
  const double md = static_cast<double>(m);
  const double centre = md * theta;
  // distance to the nearest integer; sin(pi * (1 - tiny)) would lose all digits
  const double frac = centre - std::round(centre);
  const double s = std::sin(kPi * frac);
  const double num = s * s;  // sin^2(pi D) is the same for both branches and every y

  // Split M theta = n0 + frac and keep the integer part exact, so that
  // y -/+ M theta near a multiple of M does not lose frac to rounding.
  const auto mi = static_cast<std::int64_t>(m);
  const auto n0 = static_cast<std::int64_t>(std::round(centre));
  auto kernel = [&](std::int64_t j, double f) {
    j = ((j % mi) + mi) % mi;
    if (j > mi / 2) j -= mi;
    const double reduced = static_cast<double>(j) + f;
    if (reduced == 0.0) return 1.0;
    const double den = std::sin(kPi * reduced / md);
    return std::min(1.0, num / (md * md * den * den));
  };

  std::vector<double> p(m);
  for (std::int64_t y = 0; y < mi; ++y) {
    p[static_cast<std::size_t>(y)] = 0.5 * kernel(y - n0, -frac) + 0.5 * kernel(y + n0, frac);
  }
  return p;
}

std::uint64_t sample_amplitude_estimation(double a, std::uint64_t m, SplitMix64& rng) {
  require_amplitude(a);
  require_grid(m);
  const double md = static_cast<double>(m);
  const double theta = grid_phase(a);
  double centre = (rng.uniform() < 0.5 ? 1.0 : -1.0) * md * theta;
  centre -= md * std::floor(centre / md);
  // nearest grid point, so |delta| <= 1/2 and sin(pi delta) keeps its digits
  const double base = std::round(centre);
  const double delta = centre - base;
  const auto base_y = static_cast<std::uint64_t>(base) % m;
  if (delta == 0.0) return base_y;

  const double s = std::sin(kPi * delta);
  const double num = s * s / (md * md);
  const double u = rng.uniform();
  double cum = 0.0;
  const auto mi = static_cast<std::int64_t>(m);
  // Offsets 0, 1, -1, 2, -2, ..., M/2: outward from the peak, so the loop
  // usually stops after a few terms.
  for (std::int64_t i = 0; i < mi; ++i) {
    const std::int64_t k = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    const double den = std::sin(kPi * (static_cast<double>(k) - delta) / md);
    cum += num / (den * den);
    if (u < cum) {
      return static_cast<std::uint64_t>(((static_cast<std::int64_t>(base_y) + k) % mi + mi) % mi);
    }
  }
  return base_y;
}

double decode_amplitude(std::uint64_t y, std::uint64_t m) {
  require_grid(m);
  return 0.5 * (1.0 - cos_turn(y, m));
}

std::uint64_t phase_grid(std::uint64_t n_queries) {
  if (n_queries == 0) throw std::invalid_argument("n_queries must be >= 1");
  return std::bit_floor(n_queries);
}

std::uint64_t next_pow2(std::uint64_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

void QuantumSumConfig::validate() const {
  if (n_queries < 4) throw std::invalid_argument("n_queries must be >= 4");
  if (repetitions == 0 || repetitions % 2 == 0) {
    throw std::invalid_argument("repetitions must be a positive odd number");
  }
  if (!(m_bound > 0.0) || !std::isfinite(m_bound)) {
    throw std::invalid_argument("M_bound must be positive and finite");
  }
}

std::uint64_t qsum_queries(const QuantumSumConfig& config) {
  return config.repetitions * phase_grid(config.n_queries);
}

double qsum_from_mean(double mean, const QuantumSumConfig& config) {
  config.validate();
  if (!(std::abs(mean) <= config.m_bound * (1.0 + 1e-12))) {
    throw DomainError("sequence mean exceeds M_bound");
  }
  const double a = std::clamp((mean / config.m_bound + 1.0) / 2.0, 0.0, 1.0);
  const std::uint64_t m = phase_grid(config.n_queries);
  SplitMix64 rng(config.seed);
  std::vector<double> est(config.repetitions);
  for (double& e : est) {
    const std::uint64_t y = sample_amplitude_estimation(a, m, rng);
    // M_bound (2 sin^2(pi y/M) - 1)
    e = -config.m_bound * cos_turn(y, m);
  }
  auto mid = est.begin() + static_cast<std::ptrdiff_t>(est.size() / 2);
  std::nth_element(est.begin(), mid, est.end());
  return *mid;
}

double qsum(const Sequence& g, std::uint64_t n, const QuantumSumConfig& config) {
  config.validate();
  if (n == 0) throw std::invalid_argument("sequence length must be >= 1");
  long double sum = 0.0L;
  for (std::uint64_t j = 0; j < n; ++j) {
    const double v = g(j);
    if (!(std::abs(v) <= config.m_bound)) {
      throw DomainError("sequence value g(" + std::to_string(j) + ") exceeds M_bound");
    }
    sum += v;
  }
  return qsum_from_mean(static_cast<double>(sum / static_cast<long double>(n)), config);
}

std::uint64_t boosted_repetitions(double target_failure) {
  if (!(target_failure > 0.0 && target_failure < 1.0)) {
    throw std::invalid_argument("target failure probability must lie in (0, 1)");
  }
  return 2 * static_cast<std::uint64_t>(std::ceil(4.0 * std::log(1.0 / target_failure))) + 1;
}

double qsum_boosted(const Sequence& g, std::uint64_t n, double m_bound, std::uint64_t n_queries,
                    double target_failure, std::uint64_t seed) {
  return qsum(g, n, {n_queries, boosted_repetitions(target_failure), m_bound, seed});
}

double qsum_boosted_from_mean(double mean, double m_bound, std::uint64_t n_queries,
                              double target_failure, std::uint64_t seed) {
  return qsum_from_mean(mean, {n_queries, boosted_repetitions(target_failure), m_bound, seed});
}

void ResourceReport::absorb(const ResourceReport& o) {
  queries += o.queries;
  qubits = std::max(qubits, o.qubits);
  combinatory_ops += o.combinatory_ops;
  func_evals += o.func_evals;
  failure_prob_bound = std::min(1.0, failure_prob_bound + o.failure_prob_bound);
  per_query_weight = std::max(per_query_weight, o.per_query_weight);
  total_cost += o.total_cost;
}

std::uint64_t ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n - 1));
}

double per_query_weight(std::uint64_t n, std::size_t d, const EvalCostFn& c_of_d) {
  return static_cast<double>(ceil_log2(n)) + c_of_d(d) + 2.0 * static_cast<double>(d) + 2.0;
}

std::string validate_report(const ResourceReport& report, const std::vector<ResourceReport>& sums,
                            double assembly_ops) {
  auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  std::ostringstream why;
  if (report.queries < 0 || report.combinatory_ops < 0 || report.func_evals < 0) {
    return "negative count";
  }
  if (!(report.failure_prob_bound >= 0.0 && report.failure_prob_bound <= 1.0)) {
    return "failure probability bound outside [0, 1]";
  }
  const double expected_total = report.queries * report.per_query_weight + report.combinatory_ops;
  if (!close(report.total_cost, expected_total)) {
    why << "total_cost " << report.total_cost << " != queries * weight + combinatory "
        << expected_total;
    return why.str();
  }
  if (sums.empty()) return {};
  double q = 0.0, c = 0.0, fe = 0.0, total = 0.0;
  for (const auto& s : sums) {
    if (!close(s.total_cost, s.queries * s.per_query_weight + s.combinatory_ops)) {
      return "per-sum total_cost inconsistent";
    }
    if (s.qubits > report.qubits) return "per-sum qubits exceed the aggregate";
    q += s.queries;
    c += s.combinatory_ops;
    fe += s.func_evals;
    total += s.total_cost;
  }
  if (!close(q, report.queries)) return "queries do not add up";
  if (!close(fe, report.func_evals)) return "function evaluations do not add up";
  if (!close(c + assembly_ops, report.combinatory_ops)) return "combinatory operations do not add up";
  if (!close(total + assembly_ops, report.total_cost)) return "total cost does not add up";
  return {};
}

ComplexSum complex_lattice_sum(const SpaceDescriptor& space, const LatticeRule& rule,
                               const FourierPolynomial& f, const Frequency& h,
                               double per_part_error, std::uint64_t seed, double target_failure,
                               const EvalCostFn& c_of_d) {
  space.require_kernel();
  if (!(per_part_error > 0.0)) throw std::invalid_argument("per-part error must be positive");
  const double m_bound = encoding_bound(space, f);
  return lattice_sum_estimate(space, rule, f, h, m_bound, queries_for(m_bound, per_part_error),
                              target_failure, seed, c_of_d);
}

double aliasing_bound(const SpaceDescriptor& space, const LatticeRule& rule, const IndexSet& set) {
  space.require_kernel();
  if (rule.dim() != space.dim()) throw DimensionMismatch(space.dim(), rule.dim());
  const std::uint64_t n = rule.size();
  const std::size_t d = space.dim();

  // Kernel at the nodes, K_d(x_j, 0).
  const special::CosineSeries series(space.alpha());
  std::vector<double> s(n);
  for (std::uint64_t r = 0; r <= n / 2; ++r) {
    s[r] = series(static_cast<double>(r) / static_cast<double>(n));
    s[(n - r) % n] = s[r];
  }
  std::vector<double> kern(n, 1.0);
  for (std::size_t m = 0; m < d; ++m) {
    const double g2 = 2.0 * space.gammas()[m];
    const auto z = static_cast<std::uint64_t>(rule.generator()[m]);
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      kern[j] *= 1.0 + g2 * s[idx];
      idx += z;
      if (idx >= n) idx -= n;
    }
  }
  std::vector<double> cos_table(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    cos_table[r] = std::cos(2.0 * kPi * static_cast<double>(std::min(r, n - r)) /
                            static_cast<double>(n));
  }

  // sum_{m in dual} r(h + m)^-1 = (1/N) sum_j K(x_j, 0) cos(2 pi h.x_j) depends on
  // h only through the residue h.z mod N.
  std::map<std::uint64_t, std::pair<std::size_t, long double>> classes;
  std::vector<std::uint64_t> residue(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& h = set.members()[i];
    u128 acc = 0;
    for (std::size_t m = 0; m < d; ++m) {
      const std::int64_t hm = h[m] % static_cast<std::int64_t>(n);
      const auto hr = static_cast<std::uint64_t>(hm < 0 ? hm + static_cast<std::int64_t>(n) : hm);
      acc += static_cast<u128>(hr) * static_cast<std::uint64_t>(rule.generator()[m]);
    }
    residue[i] = static_cast<std::uint64_t>(acc % n);
    ++classes[residue[i]].first;
  }
  for (auto& [res, entry] : classes) {
    long double total = 0.0L;
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      total += static_cast<long double>(kern[j]) * cos_table[idx];
      idx += res;
      if (idx >= n) idx -= n;
    }
    entry.second = total / static_cast<long double>(n);
  }

  std::size_t crowd = 0;
  long double worst = 0.0L;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& [count, full] = classes[residue[i]];
    crowd = std::max(crowd, count);
    const long double e2 = full - 1.0L / static_cast<long double>(weight_product(space, set.members()[i]));
    worst = std::max(worst, e2);
  }
  return std::sqrt(static_cast<double>(crowd) * static_cast<double>(worst));
}

QuantumPlan plan_quantum(const SpaceDescriptor& space, double epsilon, const PlanOptions& options) {
  space.require_kernel();
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  const double budget = epsilon / 3.0;
  IndexSet set = enumerate(space, budget, options.enumeration);
  const auto r = static_cast<double>(set.size());
  const double m_bound = sharp_sup_norm_bound(space);
  const double delta = budget / std::sqrt(2.0 * r);

  double s_max = 0.0;
  for (const auto& h : set.members()) s_max = std::max(s_max, shifted_norm_bound(space, h));
  double generic = 1.0;
  for (double g : space.gammas()) generic *= 1.0 + 2.0 * g;
  // prod(1+2 gamma)^(1/2) / sqrt(N) * S_max <= budget / sqrt(R)
  const double n_generic_real = generic * s_max * s_max * r / (budget * budget);

  const double n_floor = std::ceil(m_bound / delta);
  if (!(n_floor < static_cast<double>(options.max_lattice_size))) {
    throw InfeasibleError("lattice size M_bound/delta exceeds the cap");
  }
  std::uint64_t n = next_prime(std::max<std::uint64_t>(
      {5, static_cast<std::uint64_t>(n_floor), static_cast<std::uint64_t>(set.size())}));
  SearchOptions search;
  search.max_cbc_size = options.max_lattice_size;
  while (true) {
    if (n > options.max_lattice_size) {
      throw InfeasibleError("no lattice rule up to N = " + std::to_string(options.max_lattice_size) +
                            " meets the quadrature budget");
    }
    LatticeRule rule = search_generator(space, n, SearchMode::kCbc, search);
    const double alias = aliasing_bound(space, rule, set);
    if (alias <= budget) {
      QuantumPlan plan{space,
                       epsilon,
                       std::move(set),
                       std::move(rule),
                       m_bound,
                       delta,
                       queries_for(m_bound, delta),
                       1.0 / (4.0 * r),
                       0.0,
                       alias,
                       n_generic_real < 1.8e19 ? static_cast<std::uint64_t>(n_generic_real)
                                               : UINT64_MAX};
      plan.worst_case_error = worst_case_int_error(space, plan.rule);
      return plan;
    }
    n = next_prime(2 * n);
  }
}

FourierPolynomial QuantumApproxOutput::as_polynomial() const {
  FourierPolynomial p(d);
  for (const auto& [h, c] : coefficients) p.set(h, c);
  return p;
}

QuantumApproxOutput run_quantum(const QuantumPlan& plan, const FourierPolynomial& f,
                                std::uint64_t seed, const EvalCostFn& c_of_d, unsigned threads) {
  const std::size_t d = plan.space.dim();
  if (f.dim() != d) throw DimensionMismatch(d, f.dim());
  const double m_bound = plan.m_bound * std::max(1.0, korobov_norm(plan.space, f));
  const std::uint64_t n_queries = queries_for(m_bound, plan.per_part_error);
  const auto& members = plan.index_set.members();

  std::vector<ComplexSum> sums(members.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < members.size(); i += stride) {
      sums[i] = lattice_sum_estimate(plan.space, plan.rule, f, members[i], m_bound, n_queries,
                                     plan.per_sum_failure, derive_seed(seed, i), c_of_d);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, members.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  QuantumApproxOutput out;
  out.d = d;
  out.lattice_size = plan.rule.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.coefficients.emplace(members[i], sums[i].estimate);
    out.report.absorb(sums[i].report);
    out.sums.push_back(sums[i].report);
  }
  // Assembling the output: one d-term phase per coefficient.
  out.assembly_ops = static_cast<double>(d * members.size());
  out.report.combinatory_ops += out.assembly_ops;
  out.report.total_cost += out.assembly_ops;
  return out;
}

QuantumApproxOutput quantum_approximate(const SpaceDescriptor& space, double epsilon,
                                        const EvalCostFn& c_of_d, std::uint64_t seed,
                                        const FourierPolynomial& f) {
  return run_quantum(plan_quantum(space, epsilon), f, seed, c_of_d);
}

double squared_error(const FourierPolynomial& f, const QuantumApproxOutput& y) {
  if (f.dim() != y.d) throw DimensionMismatch(y.d, f.dim());
  double err = 0.0;
  for (const auto& [h, c] : f.terms()) {
    if (!y.coefficients.contains(h)) err += std::norm(c);
  }
  for (const auto& [h, c] : y.coefficients) err += std::norm(f.coefficient(h) - c);
  return err;
}

QuantumCostModel cost_model_quantum(const SpaceDescriptor& space, double epsilon,
                                    const EvalCostFn& c_of_d) {
  space.require_kernel();
  QuantumCostModel model;
  model.r_size = index_set_size(space, epsilon / 3.0);
  model.m_bound = sharp_sup_norm_bound(space);
  const auto r = static_cast<double>(model.r_size);
  const auto d = static_cast<double>(space.dim());
  const double per_sum = model.m_bound * std::sqrt(r) / epsilon;
  const double log_r = std::log2(std::max(2.0, r));
  const double p = cost_exponent(space);
  model.log2_n = std::max(std::log2(per_sum), d * std::log2(3.0) + (4.0 + p) * std::log2(1.0 / epsilon));

  ResourceReport& rep = model.sup_path;
  rep.queries = r * per_sum * log_r;
  rep.qubits = static_cast<std::uint64_t>(std::ceil(model.log2_n)) + kWorkspaceQubits;
  rep.func_evals = rep.queries;
  rep.combinatory_ops = 2.0 * r * log_r + d * r;
  rep.failure_prob_bound = 0.25;
  rep.per_query_weight = std::ceil(model.log2_n) + c_of_d(space.dim()) + 2.0 * d + 2.0;
  rep.total_cost = rep.queries * rep.per_query_weight + rep.combinatory_ops;

  const double lg = std::log2(std::max(4.0, per_sum));
  model.l2_path_queries = rep.queries * std::pow(lg, 1.5) * std::log2(lg);
  model.l2_path_total = model.l2_path_queries * rep.per_query_weight + rep.combinatory_ops;
  return model;
}

}  // namespace korobov
