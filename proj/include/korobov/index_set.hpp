#pragma once

#include <cstddef>
#include <vector>

#include "korobov/fourier.hpp"
#include "korobov/space.hpp"

namespace korobov {

struct EnumerationOptions {
  std::size_t max_size = 10'000'000;
  // Split the search over the values of the first coordinate across threads.
  // The result is identical to the serial one.
  bool parallel = false;
};

/// R(eps, d) = { h : r_alpha(gamma, h) < eps^-2 }, sorted lexicographically.
class IndexSet {
 public:
  IndexSet(SpaceDescriptor space, double epsilon, std::vector<Frequency> members)
      : space_(std::move(space)), epsilon_(epsilon), members_(std::move(members)) {}

  const SpaceDescriptor& space() const { return space_; }
  double epsilon() const { return epsilon_; }
  const std::vector<Frequency>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Frequency& h) const;

 private:
  SpaceDescriptor space_;
  double epsilon_;
  std::vector<Frequency> members_;
};

// Pruned depth-first enumeration. Throws DomainError for alpha = 0 or eps
// outside (0, 1), InfeasibleError when the set exceeds options.max_size.
IndexSet enumerate(const SpaceDescriptor& space, double epsilon,
                   const EnumerationOptions& options = {});

// |R(eps, d)| without materialising the members (memory O(d)).
std::size_t index_set_size(const SpaceDescriptor& space, double epsilon,
                           const EnumerationOptions& options = {});

// Worst-case information complexity |R(eps, d)| for the class of all functionals.
std::size_t comp_wor_all(const SpaceDescriptor& space, double epsilon,
                         const EnumerationOptions& options = {});

// Restriction of f to R(eps, d): the optimal worst-case algorithm.
FourierPolynomial truncate(const IndexSet& set, const FourierPolynomial& f);
FourierPolynomial truncate(const SpaceDescriptor& space, double epsilon, const FourierPolynomial& f);

// Exact L2 error of truncate, sqrt(sum_{h not in R} |f(h)|^2).
double truncation_error(const IndexSet& set, const FourierPolynomial& f);
double truncation_error(const SpaceDescriptor& space, double epsilon, const FourierPolynomial& f);

// Asymptotic one-dimensional count 2 gamma_1^(1/alpha) eps^(-2/alpha).
double cardinality_estimate_1d(const SpaceDescriptor& space, double epsilon);

}  // namespace korobov
