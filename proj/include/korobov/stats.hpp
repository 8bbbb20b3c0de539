#pragma once

#include <span>

namespace korobov {

// Pairwise (cascade) summation; the result depends only on the order of x.
double pairwise_sum(std::span<const double> x);

struct MeanEstimate {
  double mean = 0.0;
  double std_err = 0.0;  // sample standard deviation / sqrt(count)
};

MeanEstimate mean_with_error(std::span<const double> x);

// Empirical q-quantile (0 <= q <= 1) with linear interpolation.
double quantile(std::span<const double> x, double q);

// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace korobov
