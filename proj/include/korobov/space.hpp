#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace korobov {

/// Coordinate weights 1 >= gamma_1 >= gamma_2 >= ... > 0.
///
/// Two families are supported: an explicit finite list, and the polynomial
/// family gamma_j = c * j^(-kappa). Construction validates monotonicity and
/// the range (0, 1]; a zero weight is not representable (drop the coordinate
/// instead).
class WeightSchedule {
 public:
  enum class Kind { kExplicit, kPolynomial };

  static WeightSchedule explicit_weights(std::vector<double> gammas);
  static WeightSchedule polynomial(double scale, double decay);
  static WeightSchedule constant(double value) { return polynomial(value, 0.0); }

  Kind kind() const { return kind_; }
  bool is_polynomial() const { return kind_ == Kind::kPolynomial; }

  // gamma_j for 1-based j. Explicit schedules throw past their length.
  double gamma(std::size_t j) const;

  // Number of weights in an explicit schedule; nullopt for the infinite family.
  std::optional<std::size_t> length() const;

  double scale() const { return scale_; }
  double decay() const { return decay_; }
  const std::vector<double>& values() const { return values_; }

 private:
  WeightSchedule() = default;

  Kind kind_ = Kind::kPolynomial;
  double scale_ = 1.0;
  double decay_ = 0.0;
  std::vector<double> values_;
};

/// The weighted Korobov space H_d: dimension, smoothness alpha and weights.
class SpaceDescriptor {
 public:
  SpaceDescriptor(std::size_t d, double alpha, WeightSchedule weights);

  std::size_t dim() const { return d_; }
  double alpha() const { return alpha_; }
  const WeightSchedule& weights() const { return weights_; }

  // gamma_j, 1-based.
  double gamma(std::size_t j) const { return gammas_.at(j - 1); }
  std::span<const double> gammas() const { return gammas_; }

  // Same smoothness and schedule in another dimension.
  SpaceDescriptor with_dim(std::size_t d) const { return {d, alpha_, weights_}; }

  // Throws DomainError unless alpha > 1 (reproducing kernel exists).
  void require_kernel() const;

 private:
  std::size_t d_;
  double alpha_;
  WeightSchedule weights_;
  std::vector<double> gammas_;
};

// r_alpha(gamma_j, h) for one coordinate; 1-based j.
double weight_factor(const SpaceDescriptor& space, std::size_t j, std::int64_t h);

// r_alpha(gamma, h) = prod_j r_alpha(gamma_j, h_j).
double weight_product(const SpaceDescriptor& space, std::span<const std::int64_t> h);

// Riemann zeta for s > 1; throws DomainError otherwise.
double zeta(double s);

// sum_{h>=1} cos(2 pi h t) / h^alpha for alpha > 1.
double cosine_series(double alpha, double t);

// Reproducing kernel K_d(x, y).
double kernel_eval(const SpaceDescriptor& space, std::span<const double> x,
                   std::span<const double> y);

// K_d(y, y) = prod_j (1 + 2 gamma_j zeta(alpha)); an empty gamma list gives 1.
double kernel_diag(const SpaceDescriptor& space);
double kernel_diag(double alpha, std::span<const double> gammas);

// exp(zeta(alpha) * sum_j gamma_j) >= |f(y)| for ||f||_d <= 1.
double sup_norm_bound(const SpaceDescriptor& space);
// The sharper K_d(y, y)^(1/2).
double sharp_sup_norm_bound(const SpaceDescriptor& space);

// C(d) with ||f g||_d <= C(d) ||f||_d ||g||_d.
double algebra_constant(const SpaceDescriptor& space);

// s_gamma for the polynomial family: 1/kappa, or +inf for kappa = 0.
double sum_exponent(const WeightSchedule& weights);

// (r_alpha(gamma, h) * prod_m max(1, gamma_m 2^alpha))^(1/2), an upper bound
// on ||f(x) exp(-2 pi i h.x)||_d / ||f||_d.
double shifted_norm_bound(const SpaceDescriptor& space, std::span<const std::int64_t> h);

}  // namespace korobov
