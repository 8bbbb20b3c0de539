#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace korobov::oracle {
namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

}  // namespace

double weight_product(const SpaceDescriptor& space, std::span<const std::int64_t> h) {
  double r = 1.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != 0 && space.alpha() > 0.0) {
      r *= std::pow(std::abs(static_cast<double>(h[j])), space.alpha()) / space.gamma(j + 1);
    }
  }
  return r;
}

std::vector<Frequency> index_set(const SpaceDescriptor& space, double epsilon) {
  const std::size_t d = space.dim();
  const double budget = 1.0 / (epsilon * epsilon);
  const auto box =
      static_cast<std::int64_t>(std::ceil(std::pow(space.gamma(1) * budget, 1.0 / space.alpha())));
  std::vector<Frequency> out;
  Frequency h(d, -box);
  while (true) {
    if (oracle::weight_product(space, h) < budget) out.push_back(h);
    std::size_t k = d;
    while (k > 0 && h[k - 1] == box) h[--k] = -box;
    if (k == 0) break;
    ++h[k - 1];
  }
  return out;  // odometer order is already lexicographic
}

double zeta(double s, std::uint64_t n_terms) {
  long double sum = 0.0L;
  for (std::uint64_t n = n_terms; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double edge = static_cast<long double>(n_terms) + 0.5L;
  return static_cast<double>(sum + std::pow(edge, 1.0L - s) / (s - 1.0L));
}

SeriesValue cosine_series(double alpha, double t, std::uint64_t terms) {
  long double sum = 0.0L;
  for (std::uint64_t h = terms; h >= 1; --h) {
    sum += std::cos(kTwoPi * static_cast<long double>(h) * t) *
           std::pow(static_cast<long double>(h), -static_cast<long double>(alpha));
  }
  const double frac = t - std::floor(t);
  const double hmin = std::pow(static_cast<double>(terms), -alpha);
  double tail;
  if (frac == 0.0) {
    tail = std::pow(static_cast<double>(terms), 1.0 - alpha) / (alpha - 1.0);
  } else {
    tail = hmin / std::abs(std::sin(std::numbers::pi * frac));
  }
  return {static_cast<double>(sum), tail};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

Complex evaluate(const FourierPolynomial& f, std::span<const double> x) {
  long double re = 0.0L, im = 0.0L;
  for (const auto& [h, c] : f.terms()) {
    long double phase = 0.0L;
    for (std::size_t j = 0; j < h.size(); ++j) phase += static_cast<long double>(h[j]) * x[j];
    phase = kTwoPi * (phase - std::floor(phase));
    const long double cs = std::cos(phase), sn = std::sin(phase);
    re += c.real() * cs - c.imag() * sn;
    im += c.real() * sn + c.imag() * cs;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

namespace {

template <class Fn>
void for_grid(std::size_t d, unsigned m, Fn&& fn) {
  std::vector<unsigned> idx(d, 0);
  std::vector<double> x(d, 0.0);
  while (true) {
    for (std::size_t j = 0; j < d; ++j) x[j] = static_cast<double>(idx[j]) / m;
    fn(std::span<const double>(x));
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == m - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
}

}  // namespace

double grid_sq_distance(const FourierPolynomial& f, const FourierPolynomial& g, unsigned m) {
  long double sum = 0.0L;
  std::size_t count = 0;
  for_grid(f.dim(), m, [&](std::span<const double> x) {
    sum += std::norm(oracle::evaluate(f, x) - oracle::evaluate(g, x));
    ++count;
  });
  return static_cast<double>(sum / count);
}

Complex dft_coefficient(const FourierPolynomial& f, const Frequency& h, unsigned m) {
  std::complex<long double> sum = 0.0L;
  std::size_t count = 0;
  for_grid(f.dim(), m, [&](std::span<const double> x) {
    long double phase = 0.0L;
    for (std::size_t j = 0; j < h.size(); ++j) phase += static_cast<long double>(h[j]) * x[j];
    const Complex v = oracle::evaluate(f, x);
    sum += std::complex<long double>(v.real(), v.imag()) * std::polar(1.0L, -kTwoPi * phase);
    ++count;
  });
  sum /= static_cast<long double>(count);
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex lattice_sum(const LatticeRule& rule, const FourierPolynomial& f, const Frequency& h) {
  std::complex<long double> sum = 0.0L;
  std::vector<double> x(rule.dim());
  for (std::uint64_t j = 0; j < rule.size(); ++j) {
    rule.node(j, x);
    long double phase = 0.0L;
    for (std::size_t k = 0; k < h.size(); ++k) phase += static_cast<long double>(h[k]) * x[k];
    const Complex v = oracle::evaluate(f, x);
    sum += std::complex<long double>(v.real(), v.imag()) * std::polar(1.0L, -kTwoPi * phase);
  }
  sum /= static_cast<long double>(rule.size());
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

SeriesValue dual_error_sq(const SpaceDescriptor& space, const LatticeRule& rule, std::int64_t box) {
  const std::size_t d = space.dim();
  long double sum = 0.0L;
  Frequency h(d, -box);
  while (true) {
    bool zero = std::all_of(h.begin(), h.end(), [](auto v) { return v == 0; });
    if (!zero && rule.in_dual(h)) sum += 1.0L / oracle::weight_product(space, h);
    std::size_t k = d;
    while (k > 0 && h[k - 1] == box) h[--k] = -box;
    if (k == 0) break;
    ++h[k - 1];
  }
  // Everything outside the box has some |h_k| > box; bound by dropping the
  // dual constraint: sum_k (2 gamma_k sum_{n>box} n^-alpha) prod_{j!=k} K_j.
  const double a = space.alpha();
  const double tail1 = 2.0 * std::pow(static_cast<double>(box) + 0.5, 1.0 - a) / (a - 1.0);
  double full = 1.0;
  for (std::size_t j = 1; j <= d; ++j) full *= 1.0 + 2.0 * space.gamma(j) * oracle::zeta(a, 10'000);
  double tail = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    tail += space.gamma(k) * tail1 * full / (1.0 + 2.0 * space.gamma(k) * oracle::zeta(a, 10'000));
  }
  return {static_cast<double>(sum), tail};
}

std::vector<double> amplitude_estimation_statevector(double a, std::uint64_t m) {
  using C = std::complex<double>;
  const double s = std::sqrt(a), c = std::sqrt(1.0 - a);
  // A|0> = c|0> + s|1>; good states are |1>.
  const double A[2][2] = {{c, -s}, {s, c}};
  // Q = -A S0 A^T S_chi with S0 = diag(-1, 1), S_chi = diag(1, -1).
  double Q[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += A[i][k] * (k == 0 ? -1.0 : 1.0) * A[j][k];
      Q[i][j] = -acc * (j == 1 ? -1.0 : 1.0);
    }
  }
  // Register state sum_y |y> Q^y A|0> / sqrt(M), then inverse DFT on y.
  std::vector<C> st(2 * m);
  C v[2] = {c, s};
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::uint64_t y = 0; y < m; ++y) {
    st[2 * y] = v[0] * norm;
    st[2 * y + 1] = v[1] * norm;
    const C w0 = Q[0][0] * v[0] + Q[0][1] * v[1];
    const C w1 = Q[1][0] * v[0] + Q[1][1] * v[1];
    v[0] = w0;
    v[1] = w1;
  }
  std::vector<double> p(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    C o0 = 0.0, o1 = 0.0;
    for (std::uint64_t y = 0; y < m; ++y) {
      const C e = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((y * k) % m) /
                                      static_cast<double>(m));
      o0 += e * st[2 * y];
      o1 += e * st[2 * y + 1];
    }
    p[k] = (std::norm(o0) + std::norm(o1)) / static_cast<double>(m);
  }
  return p;
}

double shifted_norm_ratio(const SpaceDescriptor& space, const Frequency& h, std::int64_t box) {
  // The ratio factorises over coordinates.
  double prod = 1.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const SpaceDescriptor one(1, space.alpha(), WeightSchedule::explicit_weights({space.gamma(k + 1)}));
    double best = 0.0;
    for (std::int64_t j = -box; j <= box; ++j) {
      const std::int64_t a[1] = {j}, b[1] = {h[k] + j};
      best = std::max(best, oracle::weight_product(one, a) / oracle::weight_product(one, b));
    }
    prod *= best;
  }
  return std::sqrt(prod);
}

}  // namespace korobov::oracle
