#include "korobov/randomized.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "korobov/errors.hpp"
#include "korobov/rng.hpp"
#include "korobov/stats.hpp"

namespace korobov {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

IndexSet half_set(const SpaceDescriptor& space, double epsilon) {
  return enumerate(space, epsilon / std::numbers::sqrt2);
}

double parseval_error(const FourierPolynomial& f, const ApproxOutput& y) {
  double err = 0.0;
  for (const auto& [h, c] : f.terms()) {
    if (!y.coefficients.contains(h)) err += std::norm(c);
  }
  for (const auto& [h, c] : y.coefficients) err += std::norm(f.coefficient(h) - c);
  return err;
}

std::uint64_t samples_for(std::size_t r_size, double epsilon) {
  const double x = 2.0 * static_cast<double>(r_size) / (epsilon * epsilon);
  // Guard against ceil(40.000000000001) = 41 from rounding in eps^2.
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x * (1.0 - 1e-12))));
}

}  // namespace

std::uint64_t sample_size(const IndexSet& half, double epsilon) {
  return samples_for(half.size(), epsilon);
}

std::uint64_t sample_size(const SpaceDescriptor& space, double epsilon) {
  return sample_size(half_set(space, epsilon), epsilon);
}

McRun::McRun(const SpaceDescriptor& sp, double eps, std::uint64_t s)
    : space(sp), epsilon(eps), index_set(half_set(sp, eps)), n(sample_size(index_set, eps)),
      seed(s) {}

McRun::McRun(const SpaceDescriptor& sp, double eps, std::uint64_t count, std::uint64_t s)
    : space(sp), epsilon(eps), index_set(half_set(sp, eps)), n(count), seed(s) {
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
}

McRun McRun::with_seed(std::uint64_t s) const {
  McRun copy = *this;
  copy.seed = s;
  return copy;
}

FourierPolynomial ApproxOutput::as_polynomial() const {
  FourierPolynomial p(d);
  for (const auto& [h, c] : coefficients) p.set(h, c);
  return p;
}

ApproxOutput approximate(const McRun& run, const FourierPolynomial& f) {
  const std::size_t d = run.space.dim();
  if (f.dim() != d) throw DimensionMismatch(d, f.dim());
  const auto& members = run.index_set.members();

  std::vector<std::int64_t> reach(d, 0);
  for (const auto& h : members) {
    for (std::size_t j = 0; j < d; ++j) reach[j] = std::max(reach[j], std::abs(h[j]));
  }
  // phase[j][m + reach_j] = exp(-2 pi i m w_j) for the current sample w.
  std::vector<std::vector<Complex>> phase(d);
  for (std::size_t j = 0; j < d; ++j) phase[j].resize(2 * reach[j] + 1);

  std::vector<Complex> sums(members.size());
  std::vector<double> w(d);
  SplitMix64 rng(run.seed);
  for (std::uint64_t k = 0; k < run.n; ++k) {
    for (double& wj : w) wj = rng.uniform();
    const Complex fw = evaluate(f, w);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::int64_t m = -reach[j]; m <= reach[j]; ++m) {
        double t = static_cast<double>(m) * w[j];
        t -= std::floor(t);
        phase[j][m + reach[j]] = std::polar(1.0, -kTwoPi * t);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      Complex term = fw;
      for (std::size_t j = 0; j < d; ++j) term *= phase[j][members[i][j] + reach[j]];
      sums[i] += term;
    }
  }

  ApproxOutput out;
  out.d = d;
  const auto n = static_cast<double>(run.n);
  for (std::size_t i = 0; i < members.size(); ++i) out.coefficients.emplace(members[i], sums[i] / n);
  return out;
}

double expected_sq_error(const IndexSet& half, std::uint64_t n, const FourierPolynomial& f) {
  if (f.dim() != half.space().dim()) throw DimensionMismatch(half.space().dim(), f.dim());
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  const double norm2 = l2_norm(f) * l2_norm(f);
  // Members of R not in the support each contribute norm2 / n.
  double variance = static_cast<double>(half.size()) * norm2;
  double tail = 0.0;
  for (const auto& [h, c] : f.terms()) {
    if (half.contains(h)) {
      variance -= std::norm(c);
    } else {
      tail += std::norm(c);
    }
  }
  return std::max(0.0, variance) / static_cast<double>(n) + tail;
}

double expected_sq_error(const SpaceDescriptor& space, double epsilon, std::uint64_t n,
                         const FourierPolynomial& f) {
  return expected_sq_error(half_set(space, epsilon), n, f);
}

double squared_error(const FourierPolynomial& f, const ApproxOutput& y) {
  if (f.dim() != y.d) throw DimensionMismatch(y.d, f.dim());
  return parseval_error(f, y);
}

EmpiricalError empirical_error(const McRun& run, const FourierPolynomial& f, std::size_t trials,
                               unsigned threads) {
  if (trials < 2) throw std::invalid_argument("empirical_error needs at least two trials");
  std::vector<double> errs(trials);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < trials; t += stride) {
      errs[t] = parseval_error(f, approximate(run.with_seed(run.seed + t), f));
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, trials));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  const MeanEstimate m = mean_with_error(errs);
  return {m.mean, m.std_err, trials};
}

RandomizedCost cost_model_randomized(const SpaceDescriptor& space, double epsilon,
                                     const EvalCostFn& c_of_d) {
  RandomizedCost cost;
  cost.r_size = index_set_size(space, epsilon / std::numbers::sqrt2);
  cost.n = samples_for(cost.r_size, epsilon);
  const auto n = static_cast<double>(cost.n);
  const auto d = static_cast<double>(space.dim());
  const auto r = static_cast<double>(cost.r_size);
  cost.func_evals = n;
  cost.combinatory_ops = n * d * r + d * r;
  cost.total = n * c_of_d(space.dim()) + cost.combinatory_ops;
  return cost;
}

}  // namespace korobov
