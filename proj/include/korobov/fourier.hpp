#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "korobov/space.hpp"

namespace korobov {

using Complex = std::complex<double>;
using Frequency = std::vector<std::int64_t>;

/// Point of the torus [0, 1)^d; coordinates are reduced modulo 1.
class EvaluationPoint {
 public:
  explicit EvaluationPoint(std::vector<double> coordinates);

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coordinates() const { return coords_; }

 private:
  std::vector<double> coords_;
};

/// Trigonometric polynomial sum_h c_h exp(2 pi i h.x) with finite support.
/// Zero coefficients are never stored; keys are ordered lexicographically.
class FourierPolynomial {
 public:
  using Terms = std::map<Frequency, Complex>;

  explicit FourierPolynomial(std::size_t d) : d_(d) {}

  static FourierPolynomial constant(std::size_t d, Complex value);
  // exp(2 pi i h.x) / r_alpha(gamma, h)^(1/2), the unit-norm eigenfunction.
  static FourierPolynomial basis(const SpaceDescriptor& space, const Frequency& h);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Complex coefficient(const Frequency& h) const;

  void set(const Frequency& h, Complex value);
  void add(const Frequency& h, Complex value);

  friend bool operator==(const FourierPolynomial&, const FourierPolynomial&) = default;

 private:
  void check(const Frequency& h) const;

  std::size_t d_;
  Terms terms_;
};

Complex evaluate(const FourierPolynomial& f, const EvaluationPoint& x);
Complex evaluate(const FourierPolynomial& f, std::span<const double> x);

double korobov_norm(const SpaceDescriptor& space, const FourierPolynomial& f);
double l2_norm(const FourierPolynomial& f);
double l2_distance(const FourierPolynomial& f, const FourierPolynomial& g);

FourierPolynomial multiply(const FourierPolynomial& f, const FourierPolynomial& g);
FourierPolynomial conjugate(const FourierPolynomial& f);
FourierPolynomial abs_squared(const FourierPolynomial& f);
// Frequencies k -> k - h: the function f(x) exp(-2 pi i h.x).
FourierPolynomial modulate(const FourierPolynomial& f, const Frequency& h);
FourierPolynomial subtract(const FourierPolynomial& f, const FourierPolynomial& g);
FourierPolynomial scale(const FourierPolynomial& f, Complex factor);

// Integral over the unit cube, i.e. the zeroth coefficient.
Complex integral(const FourierPolynomial& f);

// support_size distinct frequencies drawn from [-max_freq, max_freq]^d with
// complex Gaussian coefficients, rescaled to korobov_norm exactly 1.
FourierPolynomial random_unit(const SpaceDescriptor& space, std::size_t support_size,
                              std::int64_t max_freq, std::uint64_t seed);

}  // namespace korobov
