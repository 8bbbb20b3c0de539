#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "korobov/fourier.hpp"
#include "korobov/space.hpp"

namespace korobov {

bool is_prime(std::uint64_t n);
// Smallest prime >= n (n >= 2).
std::uint64_t next_prime(std::uint64_t n);

/// Rank-1 lattice rule with prime N and generator z in [1, N-1]^d; nodes
/// x_j = {j z / N} for j = 0..N-1.
class LatticeRule {
 public:
  LatticeRule(std::uint64_t n, std::vector<std::int64_t> generator);

  std::uint64_t size() const { return n_; }
  const std::vector<std::int64_t>& generator() const { return z_; }
  std::size_t dim() const { return z_.size(); }

  // Node j written into out (length d).
  void node(std::uint64_t j, std::span<double> out) const;

  // True when k.z = 0 (mod N), i.e. k lies in the dual lattice.
  bool in_dual(std::span<const std::int64_t> k) const;

  friend bool operator==(const LatticeRule&, const LatticeRule&) = default;

 private:
  std::uint64_t n_;
  std::vector<std::int64_t> z_;
};

std::vector<std::vector<double>> nodes(const LatticeRule& rule);

using PointFunction = std::function<Complex(std::span<const double>)>;

// Equal-weight average of f over the nodes.
Complex integrate(const LatticeRule& rule, const PointFunction& f);

// Exact value of the rule applied to x -> f(x) exp(-2 pi i h.x): the sum of
// the coefficients f(k) with (k - h).z = 0 (mod N). O(|support|).
Complex lattice_sum(const LatticeRule& rule, const FourierPolynomial& f, const Frequency& h);

// Worst-case integration error over the unit ball of H_d, from the kernel:
// e^2 = -1 + (1/N) sum_j K_d(x_j, 0).
double worst_case_int_error(const SpaceDescriptor& space, const LatticeRule& rule);

// The same quantity from the dual lattice, e^2 = sum_{h != 0, h.z = 0 mod N}
// r_alpha(gamma, h)^-1, summing each residue class with the Hurwitz zeta.
double worst_case_int_error_dual(const SpaceDescriptor& space, const LatticeRule& rule);

// prod_j (1 + 2 gamma_j)^(1/2) / sqrt(N).
double lattice_error_bound(const SpaceDescriptor& space, std::uint64_t n);

enum class SearchMode { kExhaustive, kCbc };

struct SearchOptions {
  // Exhaustive mode: cap on the number of candidate generators examined.
  std::uint64_t max_candidates = 1'000'000;
  // CBC mode: cap on N (the search is O(N^2 d)).
  std::uint64_t max_cbc_size = 100'000;
};

// Exhaustive search returns the lexicographically smallest minimiser of the
// worst-case error. Without loss of generality z_1 = 1 (scaling z by a unit
// permutes the nodes) and z_k <= (N-1)/2 for k >= 2 (z_k -> N - z_k reflects
// coordinate k). CBC fixes z_1 = 1 and then picks each z_k in turn to
// minimise the error of the partial rule, smallest z_k on ties.
LatticeRule search_generator(const SpaceDescriptor& space, std::uint64_t n, SearchMode mode,
                             const SearchOptions& options = {});

}  // namespace korobov
