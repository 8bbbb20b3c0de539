#include "korobov/space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "korobov/errors.hpp"
#include "korobov/special_functions.hpp"

namespace korobov {

WeightSchedule WeightSchedule::explicit_weights(std::vector<double> gammas) {
  double previous = 1.0;
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    const double g = gammas[j];
    if (!(g > 0.0 && g <= 1.0)) {
      throw std::invalid_argument("weight gamma_" + std::to_string(j + 1) + " must lie in (0, 1]");
    }
    if (g > previous) throw std::invalid_argument("weights must be non-increasing");
    previous = g;
  }
  WeightSchedule w;
  w.kind_ = Kind::kExplicit;
  w.values_ = std::move(gammas);
  return w;
}

WeightSchedule WeightSchedule::polynomial(double scale, double decay) {
  if (!(scale > 0.0 && scale <= 1.0)) throw std::invalid_argument("weight scale must lie in (0, 1]");
  if (!(decay >= 0.0) || !std::isfinite(decay)) {
    throw std::invalid_argument("weight decay must be finite and >= 0");
  }
  WeightSchedule w;
  w.kind_ = Kind::kPolynomial;
  w.scale_ = scale;
  w.decay_ = decay;
  return w;
}

double WeightSchedule::gamma(std::size_t j) const {
  if (j == 0) throw std::out_of_range("weights are 1-based");
  if (kind_ == Kind::kExplicit) {
    if (j > values_.size()) {
      throw std::out_of_range("explicit schedule has only " + std::to_string(values_.size()) +
                              " weights");
    }
    return values_[j - 1];
  }
  if (decay_ == 0.0) return scale_;
  return scale_ * std::pow(static_cast<double>(j), -decay_);
}

std::optional<std::size_t> WeightSchedule::length() const {
  if (kind_ == Kind::kExplicit) return values_.size();
  return std::nullopt;
}

SpaceDescriptor::SpaceDescriptor(std::size_t d, double alpha, WeightSchedule weights)
    : d_(d), alpha_(alpha), weights_(std::move(weights)) {
  if (d_ == 0) throw std::invalid_argument("dimension d must be >= 1");
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
    throw std::invalid_argument("smoothness alpha must be finite and >= 0");
  }
  if (auto n = weights_.length(); n && *n < d_) {
    throw std::invalid_argument("explicit schedule provides " + std::to_string(*n) +
                                " weights for d = " + std::to_string(d_));
  }
  gammas_.reserve(d_);
  for (std::size_t j = 1; j <= d_; ++j) gammas_.push_back(weights_.gamma(j));
}

void SpaceDescriptor::require_kernel() const {
  if (!(alpha_ > 1.0)) {
    throw DomainError("operation requires alpha > 1 (got alpha = " + std::to_string(alpha_) + ")");
  }
}

double weight_factor(const SpaceDescriptor& space, std::size_t j, std::int64_t h) {
  if (j == 0 || j > space.dim()) throw std::out_of_range("coordinate index out of range");
  if (h == 0 || space.alpha() == 0.0) return 1.0;
  return std::pow(static_cast<double>(h < 0 ? -h : h), space.alpha()) / space.gamma(j);
}

double weight_product(const SpaceDescriptor& space, std::span<const std::int64_t> h) {
  if (h.size() != space.dim()) throw DimensionMismatch(space.dim(), h.size());
  double r = 1.0;
  for (std::size_t j = 0; j < h.size(); ++j) r *= weight_factor(space, j + 1, h[j]);
  return r;
}

double zeta(double s) {
  if (!(s > 1.0)) throw DomainError("zeta(s) diverges for s <= 1");
  return special::zeta_real(s);
}

double cosine_series(double alpha, double t) { return special::CosineSeries(alpha)(t); }

double kernel_eval(const SpaceDescriptor& space, std::span<const double> x,
                   std::span<const double> y) {
  space.require_kernel();
  if (x.size() != space.dim()) throw DimensionMismatch(space.dim(), x.size());
  if (y.size() != space.dim()) throw DimensionMismatch(space.dim(), y.size());
  const special::CosineSeries series(space.alpha());
  double k = 1.0;
  for (std::size_t j = 0; j < space.dim(); ++j) {
    k *= 1.0 + 2.0 * space.gammas()[j] * series(x[j] - y[j]);
  }
  return k;
}

double kernel_diag(double alpha, std::span<const double> gammas) {
  const double z = zeta(alpha);
  double k = 1.0;
  for (double g : gammas) k *= 1.0 + 2.0 * g * z;
  return k;
}

double kernel_diag(const SpaceDescriptor& space) {
  space.require_kernel();
  return kernel_diag(space.alpha(), space.gammas());
}

double sup_norm_bound(const SpaceDescriptor& space) {
  space.require_kernel();
  double sum = 0.0;
  for (double g : space.gammas()) sum += g;
  return std::exp(zeta(space.alpha()) * sum);
}

double sharp_sup_norm_bound(const SpaceDescriptor& space) { return std::sqrt(kernel_diag(space)); }

double algebra_constant(const SpaceDescriptor& space) {
  space.require_kernel();
  const double d = static_cast<double>(space.dim());
  return std::pow(2.0, d * std::max(1.0, space.alpha() / 2.0)) * std::sqrt(kernel_diag(space));
}

double sum_exponent(const WeightSchedule& weights) {
  if (!weights.is_polynomial()) {
    throw std::invalid_argument("sum-exponent undefined for finite schedules");
  }
  if (weights.decay() == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / weights.decay();
}

double shifted_norm_bound(const SpaceDescriptor& space, std::span<const std::int64_t> h) {
  double spread = 1.0;
  const double two_alpha = std::pow(2.0, space.alpha());
  for (double g : space.gammas()) spread *= std::max(1.0, g * two_alpha);
  return std::sqrt(weight_product(space, h) * spread);
}

}  // namespace korobov
