#include "korobov/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "korobov/errors.hpp"
#include "korobov/special_functions.hpp"

namespace korobov {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// 1 + 2 gamma sum_h cos(2 pi h r / N) / h^alpha for r = 0..N-1, built
// symmetric in r <-> N - r.
std::vector<std::vector<double>> kernel_tables(const SpaceDescriptor& space, std::uint64_t n) {
  const special::CosineSeries series(space.alpha());
  std::vector<double> s(n);
  for (std::uint64_t r = 0; r <= n / 2; ++r) {
    s[r] = series(static_cast<double>(r) / static_cast<double>(n));
    s[(n - r) % n] = s[r];
  }
  std::vector<std::vector<double>> tables;
  tables.reserve(space.dim());
  for (double gamma : space.gammas()) {
    std::vector<double> t(n);
    for (std::uint64_t r = 0; r < n; ++r) t[r] = 1.0 + 2.0 * gamma * s[r];
    tables.push_back(std::move(t));
  }
  return tables;
}

// sum_j prod[j] * table[(j c) mod N]
long double weighted_sum(const std::vector<double>& prod, const std::vector<double>& table,
                         std::uint64_t c) {
  const std::uint64_t n = prod.size();
  long double total = 0.0L;
  std::uint64_t idx = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    total += static_cast<long double>(prod[j]) * table[idx];
    idx += c;
    if (idx >= n) idx -= n;
  }
  return total;
}

double to_error(long double mean_kernel) {
  const long double e2 = mean_kernel - 1.0L;
  return e2 <= 0.0L ? 0.0 : std::sqrt(static_cast<double>(e2));
}

void require_match(const SpaceDescriptor& space, const LatticeRule& rule) {
  if (rule.dim() != space.dim()) throw DimensionMismatch(space.dim(), rule.dim());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  std::uint64_t candidate = n | 1;
  while (!is_prime(candidate)) {
    if (candidate > std::numeric_limits<std::uint64_t>::max() - 2) {
      throw std::overflow_error("next_prime: no 64-bit prime above n");
    }
    candidate += 2;
  }
  return candidate;
}

LatticeRule::LatticeRule(std::uint64_t n, std::vector<std::int64_t> generator)
    : n_(n), z_(std::move(generator)) {
  if (!is_prime(n_)) throw std::invalid_argument("lattice size N = " + std::to_string(n_) + " is not prime");
  if (z_.empty()) throw std::invalid_argument("generator must have at least one component");
  for (std::int64_t zj : z_) {
    if (zj < 1 || static_cast<std::uint64_t>(zj) >= n_) {
      throw std::invalid_argument("generator components must lie in [1, N-1]");
    }
  }
}

void LatticeRule::node(std::uint64_t j, std::span<double> out) const {
  if (out.size() != z_.size()) throw DimensionMismatch(z_.size(), out.size());
  const std::uint64_t jj = j % n_;
  for (std::size_t k = 0; k < z_.size(); ++k) {
    out[k] = static_cast<double>(mul_mod(jj, static_cast<std::uint64_t>(z_[k]), n_)) /
             static_cast<double>(n_);
  }
}

bool LatticeRule::in_dual(std::span<const std::int64_t> k) const {
  if (k.size() != z_.size()) throw DimensionMismatch(z_.size(), k.size());
  std::uint64_t acc = 0;
  for (std::size_t m = 0; m < k.size(); ++m) {
    acc = (acc + mul_mod(reduce(k[m], n_), static_cast<std::uint64_t>(z_[m]), n_)) % n_;
  }
  return acc == 0;
}

std::vector<std::vector<double>> nodes(const LatticeRule& rule) {
  std::vector<std::vector<double>> out(rule.size(), std::vector<double>(rule.dim()));
  for (std::uint64_t j = 0; j < rule.size(); ++j) rule.node(j, out[j]);
  return out;
}

Complex integrate(const LatticeRule& rule, const PointFunction& f) {
  std::vector<double> x(rule.dim());
  Complex sum{};
  for (std::uint64_t j = 0; j < rule.size(); ++j) {
    rule.node(j, x);
    sum += f(x);
  }
  return sum / static_cast<double>(rule.size());
}

Complex lattice_sum(const LatticeRule& rule, const FourierPolynomial& f, const Frequency& h) {
  if (f.dim() != rule.dim()) throw DimensionMismatch(rule.dim(), f.dim());
  if (h.size() != rule.dim()) throw DimensionMismatch(rule.dim(), h.size());
  Complex sum{};
  Frequency diff(rule.dim());
  for (const auto& [k, c] : f.terms()) {
    for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = k[m] - h[m];
    if (rule.in_dual(diff)) sum += c;
  }
  return sum;
}

double worst_case_int_error(const SpaceDescriptor& space, const LatticeRule& rule) {
  space.require_kernel();
  require_match(space, rule);
  const std::uint64_t n = rule.size();
  const auto tables = kernel_tables(space, n);
  std::vector<std::uint64_t> idx(space.dim(), 0);
  long double total = 0.0L;
  for (std::uint64_t j = 0; j < n; ++j) {
    double k = 1.0;
    for (std::size_t m = 0; m < idx.size(); ++m) {
      k *= tables[m][idx[m]];
      idx[m] += static_cast<std::uint64_t>(rule.generator()[m]);
      if (idx[m] >= n) idx[m] -= n;
    }
    total += k;
  }
  return to_error(total / static_cast<long double>(n));
}

double worst_case_int_error_dual(const SpaceDescriptor& space, const LatticeRule& rule) {
  space.require_kernel();
  require_match(space, rule);
  const std::uint64_t n = rule.size();
  const std::size_t d = space.dim();
  constexpr double kMaxClasses = 5e7;
  if (std::pow(static_cast<double>(n), static_cast<double>(d - 1)) > kMaxClasses) {
    throw InfeasibleError("dual-lattice error: too many residue classes");
  }
  const double alpha = space.alpha();
  const double n_pow = std::pow(static_cast<double>(n), -alpha);
  const double z_alpha = zeta(alpha);

  // class_sum[m][a] = sum_{h = a mod N} r_alpha(gamma_m, h)^-1
  std::vector<std::vector<double>> class_sum(d, std::vector<double>(n));
  std::vector<double> hurwitz(n);
  for (std::uint64_t a = 1; a < n; ++a) {
    const double q = static_cast<double>(a) / static_cast<double>(n);
    hurwitz[a] = special::hurwitz_zeta(alpha, q) + special::hurwitz_zeta(alpha, 1.0 - q);
  }
  for (std::size_t m = 0; m < d; ++m) {
    const double gamma = space.gammas()[m];
    class_sum[m][0] = 1.0 + 2.0 * gamma * n_pow * z_alpha;
    for (std::uint64_t a = 1; a < n; ++a) class_sum[m][a] = gamma * n_pow * hurwitz[a];
  }

  const auto z_last = static_cast<std::uint64_t>(rule.generator()[d - 1]);
  const std::uint64_t z_last_inv = pow_mod(z_last, n - 2, n);
  std::vector<std::uint64_t> a(d - 1, 0);
  long double total = 0.0L;
  while (true) {
    std::uint64_t residue = 0;
    double term = 1.0;
    for (std::size_t m = 0; m + 1 < d; ++m) {
      residue = (residue + mul_mod(a[m], static_cast<std::uint64_t>(rule.generator()[m]), n)) % n;
      term *= class_sum[m][a[m]];
    }
    const std::uint64_t last = mul_mod((n - residue) % n, z_last_inv, n);
    total += static_cast<long double>(term) * class_sum[d - 1][last];

    std::size_t pos = 0;
    while (pos < a.size() && ++a[pos] == n) a[pos++] = 0;
    if (pos == a.size()) break;
  }
  return to_error(total);
}

double lattice_error_bound(const SpaceDescriptor& space, std::uint64_t n) {
  double prod = 1.0;
  for (double g : space.gammas()) prod *= 1.0 + 2.0 * g;
  return std::sqrt(prod) / std::sqrt(static_cast<double>(n));
}

LatticeRule search_generator(const SpaceDescriptor& space, std::uint64_t n, SearchMode mode,
                             const SearchOptions& options) {
  space.require_kernel();
  if (!is_prime(n)) throw std::invalid_argument("lattice size N = " + std::to_string(n) + " is not prime");
  const std::size_t d = space.dim();
  const std::uint64_t half = std::max<std::uint64_t>(1, (n - 1) / 2);
  std::vector<std::int64_t> z(d, 1);
  if (d == 1) return LatticeRule(n, z);

  if (mode == SearchMode::kCbc && n > options.max_cbc_size) {
    throw InfeasibleError("CBC search: N = " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(options.max_cbc_size));
  }
  if (mode == SearchMode::kExhaustive &&
      std::pow(static_cast<double>(half), static_cast<double>(d - 1)) >
          static_cast<double>(options.max_candidates)) {
    throw InfeasibleError("exhaustive search space exceeds the cap of " +
                          std::to_string(options.max_candidates) + " generators");
  }

  const auto tables = kernel_tables(space, n);
  std::vector<double> prod = tables[0];  // z_1 = 1: table indexed by j itself

  if (mode == SearchMode::kCbc) {
    for (std::size_t k = 1; k < d; ++k) {
      long double best = std::numeric_limits<long double>::infinity();
      std::uint64_t best_c = 1;
      for (std::uint64_t c = 1; c <= half; ++c) {
        const long double s = weighted_sum(prod, tables[k], c);
        if (s < best) {
          best = s;
          best_c = c;
        }
      }
      z[k] = static_cast<std::int64_t>(best_c);
      std::uint64_t idx = 0;
      for (std::uint64_t j = 0; j < n; ++j) {
        prod[j] *= tables[k][idx];
        idx += best_c;
        if (idx >= n) idx -= n;
      }
    }
    return LatticeRule(n, z);
  }

  // Exhaustive: depth-first over z_2..z_d with cached partial products.
  long double best = std::numeric_limits<long double>::infinity();
  std::vector<std::int64_t> best_z = z;
  std::vector<std::vector<double>> partial(d);
  partial[0] = prod;
  std::vector<std::int64_t> current(d, 1);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    for (std::uint64_t c = 1; c <= half; ++c) {
      current[k] = static_cast<std::int64_t>(c);
      if (k + 1 == d) {
        const long double s = weighted_sum(partial[k - 1], tables[k], c);
        if (s < best) {
          best = s;
          best_z = current;
        }
        continue;
      }
      partial[k] = partial[k - 1];
      std::uint64_t idx = 0;
      for (std::uint64_t j = 0; j < n; ++j) {
        partial[k][j] *= tables[k][idx];
        idx += c;
        if (idx >= n) idx -= n;
      }
      self(self, k + 1);
    }
  };
  recurse(recurse, 1);
  return LatticeRule(n, best_z);
}

}  // namespace korobov
