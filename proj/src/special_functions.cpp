#include "korobov/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "korobov/errors.hpp"

namespace korobov::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBernoulli = 30;
constexpr int kEulerMaclaurinTerms = 11;  // uses B_2 .. B_22
constexpr int kEulerMaclaurinShift = 16;

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  static const auto table = [] {
    std::array<long double, kMaxBernoulli + 1> b{};
    b[0] = 1.0L;
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      long double acc = 0.0L;
      long double binom = 1.0L;  // C(m+1, j)
      for (int j = 0; j < m; ++j) {
        acc += binom * b[j];
        binom = binom * static_cast<long double>(m + 1 - j) / static_cast<long double>(j + 1);
      }
      b[m] = -acc / static_cast<long double>(m + 1);
    }
    std::array<double, kMaxBernoulli + 1> out{};
    for (int m = 0; m <= kMaxBernoulli; ++m) {
      // Odd Bernoulli numbers beyond B_1 vanish exactly.
      out[m] = (m > 1 && m % 2 == 1) ? 0.0 : static_cast<double>(b[m]);
    }
    return out;
  }();
  return table;
}

// sum_{n>=0} (x + n)^(-s) by Euler-Maclaurin, accurate for x >= 16.
double euler_maclaurin_tail(double s, double x) {
  const auto& b = bernoulli_table();
  double total = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  double rising = s;  // (s)_{2k-1}
  double xpow = std::pow(x, -s - 1.0);
  double factorial = 2.0;  // (2k)!
  for (int k = 1; k <= kEulerMaclaurinTerms; ++k) {
    total += b[2 * k] / factorial * rising * xpow;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    xpow /= x * x;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return total;
}

bool is_integer(double v) { return std::nearbyint(v) == v; }

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n > kMaxBernoulli) throw std::out_of_range("bernoulli_number: n out of range");
  return bernoulli_table()[n];
}

double bernoulli_polynomial(int n, double x) {
  if (n < 0 || n > kMaxBernoulli) throw std::out_of_range("bernoulli_polynomial: n out of range");
  // B_n(x) = sum_k C(n, k) B_k x^(n-k), evaluated by Horner in x.
  double result = 0.0;
  double binom = 1.0;  // C(n, k)
  std::array<double, kMaxBernoulli + 1> coeff{};
  for (int k = 0; k <= n; ++k) {
    coeff[k] = binom * bernoulli_number(k);
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) result = result * x + coeff[k];
  return result;
}

double zeta_real(double s) {
  if (s == 1.0) throw DomainError("zeta: pole at s = 1");
  if (s >= 0.5) {
    double head = 0.0;
    for (int n = kEulerMaclaurinShift - 1; n >= 1; --n) head += std::pow(static_cast<double>(n), -s);
    return head + euler_maclaurin_tail(s, kEulerMaclaurinShift);
  }
  if (s == 0.0) return -0.5;
  if (is_integer(s) && static_cast<long long>(s) % 2 == 0) return 0.0;
  // Functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s).
  const double log_mag = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + std::lgamma(1.0 - s);
  return std::exp(log_mag) * std::sin(kPi * s / 2.0) * zeta_real(1.0 - s);
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: requires q > 0");
  double head = 0.0;
  for (int n = kEulerMaclaurinShift - 1; n >= 0; --n) head += std::pow(n + q, -s);
  return head + euler_maclaurin_tail(s, kEulerMaclaurinShift + q);
}

CosineSeries::CosineSeries(double alpha, Method method) : alpha_(alpha), method_(method) {
  if (!(alpha > 1.0)) throw DomainError("cosine series diverges for alpha <= 1");
  const bool even = is_integer(alpha) && static_cast<long long>(alpha) % 2 == 0 && alpha <= 24.0;
  if (method_ == Method::kAuto) method_ = even ? Method::kClosedForm : Method::kExpansion;
  if (method_ == Method::kClosedForm && !even) {
    throw DomainError("closed-form cosine series requires an even integer alpha <= 24");
  }

  zeta_alpha_ = zeta_real(alpha);
  if (method_ == Method::kClosedForm) {
    const int m = static_cast<int>(alpha) / 2;
    double factorial = 1.0;
    for (int k = 2; k <= 2 * m; ++k) factorial *= k;
    closed_prefactor_ = ((m % 2 == 1) ? 1.0 : -1.0) * std::pow(2.0 * kPi, 2 * m) / (2.0 * factorial);
    n_ = 2 * m;
    return;
  }

  integer_alpha_ = is_integer(alpha);
  n_ = integer_alpha_ ? static_cast<int>(alpha) : 0;
  if (!integer_alpha_) {
    // Gamma(1-s) (2 pi t)^(s-1) cos(pi (s-1) / 2)
    singular_coeff_ = std::tgamma(1.0 - alpha) * std::cos(kPi * (alpha - 1.0) / 2.0);
  } else if ((n_ - 1) % 2 == 1) {
    // (n-1) odd: -(-1)^((n-2)/2) (pi/2) (2 pi t)^(n-1) / (n-1)!
    double factorial = 1.0;
    for (int k = 2; k <= n_ - 1; ++k) factorial *= k;
    singular_coeff_ = -(((n_ - 2) / 2) % 2 == 0 ? 1.0 : -1.0) * (kPi / 2.0) / factorial;
  } else {
    double factorial = 1.0;
    for (int k = 2; k <= n_ - 1; ++k) factorial *= k;
    singular_coeff_ = (((n_ - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / factorial;
  }

  // Even-k coefficients zeta(s - k) (-1)^(k/2) / k!, until they drop below
  // 1e-20 relative to pi^-k (|2 pi t| <= pi).
  constexpr int kMaxK = 240;
  for (int k = 0; k <= kMaxK; k += 2) {
    const double sigma = alpha - k;
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    double c = 0.0;
    if (integer_alpha_ && k == n_ - 1) {
      c = 0.0;  // absorbed by the logarithmic term
    } else if (sigma >= 0.5) {
      c = zeta_real(sigma) / std::exp(std::lgamma(k + 1.0));
    } else if (sigma == 0.0) {
      c = -0.5 / std::exp(std::lgamma(k + 1.0));
    } else if (is_integer(sigma) && static_cast<long long>(sigma) % 2 == 0) {
      c = 0.0;
    } else {
      const double log_mag = sigma * std::log(2.0) + (sigma - 1.0) * std::log(kPi) +
                             std::lgamma(1.0 - sigma) - std::lgamma(k + 1.0);
      c = std::exp(log_mag) * std::sin(kPi * sigma / 2.0) * zeta_real(1.0 - sigma);
    }
    coeffs_.push_back(sign * c);
    if (k > alpha + 4 && std::abs(c) * std::pow(kPi, k) < 1e-20) break;
  }
}

double CosineSeries::operator()(double t) const {
  return method_ == Method::kClosedForm ? closed_form(t) : expansion(t);
}

double CosineSeries::closed_form(double t) const {
  const double frac = t - std::floor(t);
  return closed_prefactor_ * bernoulli_polynomial(n_, frac);
}

double CosineSeries::expansion(double t) const {
  double u = std::abs(t - std::nearbyint(t));  // in [0, 1/2], series is even in t
  if (u == 0.0) return zeta_alpha_;
  const double x = 2.0 * kPi * u;
  const double x2 = x * x;
  double series = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) series = series * x2 + *it;

  double singular = 0.0;
  if (!integer_alpha_) {
    singular = singular_coeff_ * std::pow(x, alpha_ - 1.0);
  } else if ((n_ - 1) % 2 == 1) {
    singular = singular_coeff_ * std::pow(x, n_ - 1);
  } else {
    double harmonic = 0.0;
    for (int k = 1; k <= n_ - 1; ++k) harmonic += 1.0 / k;
    singular = singular_coeff_ * (harmonic - std::log(x)) * std::pow(x, n_ - 1);
  }
  return singular + series;
}

}  // namespace korobov::special
