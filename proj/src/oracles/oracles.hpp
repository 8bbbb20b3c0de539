#pragma once

// Reference implementations used to check the library. Each one computes
// the same quantity by a different, slower and more obvious route.

#include <cstdint>
#include <span>
#include <vector>

#include "korobov/fourier.hpp"
#include "korobov/lattice.hpp"
#include "korobov/space.hpp"

namespace korobov::oracle {

// r_alpha(gamma, h) straight from the definition.
double weight_product(const SpaceDescriptor& space, std::span<const std::int64_t> h);

// Box scan over |h_j| <= ceil((gamma_1 eps^-2)^(1/alpha)), sorted.
std::vector<Frequency> index_set(const SpaceDescriptor& space, double epsilon);

// Partial sum to n_terms plus the midpoint tail (n_terms + 1/2)^(1-s)/(s-1).
double zeta(double s, std::uint64_t n_terms = 100'000);

struct SeriesValue {
  double value;
  double tail_bound;
};
// sum_{h<=H} cos(2 pi h t)/h^alpha with the Abel-summation tail bound
// H^-alpha / |sin(pi t)| (t not an integer), or zeta tail at t = 0.
SeriesValue cosine_series(double alpha, double t, std::uint64_t terms);

bool is_prime(std::uint64_t n);  // trial division

// Long-double evaluation of the Fourier sum.
Complex evaluate(const FourierPolynomial& f, std::span<const double> x);

// Mean of |f - g|^2 over the m^d grid (exact for frequencies below m/2).
double grid_sq_distance(const FourierPolynomial& f, const FourierPolynomial& g, unsigned m = 64);

// Coefficient h of f from an m^d-point DFT of its samples.
Complex dft_coefficient(const FourierPolynomial& f, const Frequency& h, unsigned m);

// (1/N) sum_j f(x_j) exp(-2 pi i h.x_j) by summing over all nodes.
Complex lattice_sum(const LatticeRule& rule, const FourierPolynomial& f, const Frequency& h);

// sum over nonzero dual-lattice h with |h_j| <= box of 1/r(h), plus a
// bound on the omitted tail.
SeriesValue dual_error_sq(const SpaceDescriptor& space, const LatticeRule& rule, std::int64_t box);

// Phase-estimation outcome probabilities from an explicit statevector on the
// 1-qubit Grover operator, M a power of two (M <= 64 is cheap).
std::vector<double> amplitude_estimation_statevector(double a, std::uint64_t m);

// max over |j_k| <= box of r(j)/r(h + j), square-rooted.
double shifted_norm_ratio(const SpaceDescriptor& space, const Frequency& h, std::int64_t box);

}  // namespace korobov::oracle
