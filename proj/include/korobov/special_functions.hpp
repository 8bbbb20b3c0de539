#pragma once

#include <vector>

namespace korobov::special {

// Bernoulli number B_n (B_1 = -1/2), n <= 60.
double bernoulli_number(int n);

// Bernoulli polynomial B_n(x).
double bernoulli_polynomial(int n, double x);

// Riemann zeta on the real line, s != 1 (analytic continuation for s < 1).
double zeta_real(double s);

// Hurwitz zeta sum_{n>=0} (n + q)^(-s), s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// sum_{h>=1} cos(2 pi h t) / h^alpha for a fixed alpha > 1.
///
/// Even integer alpha (up to 24) uses the Bernoulli-polynomial closed form.
/// Every other alpha uses the expansion of the polylogarithm Li_alpha(e^{mu})
/// around mu = 0 (a singular term plus a power series with zeta coefficients),
/// which converges geometrically for |t| <= 1/2.
class CosineSeries {
 public:
  enum class Method { kAuto, kClosedForm, kExpansion };

  explicit CosineSeries(double alpha, Method method = Method::kAuto);

  double alpha() const { return alpha_; }
  Method method() const { return method_; }

  double operator()(double t) const;

 private:
  double closed_form(double t) const;
  double expansion(double t) const;

  double alpha_;
  Method method_;
  bool integer_alpha_ = false;
  int n_ = 0;
  double zeta_alpha_ = 0.0;
  double singular_coeff_ = 0.0;
  double closed_prefactor_ = 0.0;
  std::vector<double> coeffs_;  // coefficient of (2 pi t)^k for even k
};

}  // namespace korobov::special
