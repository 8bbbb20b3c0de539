#include "korobov/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>
#include <utility>

#include "korobov/errors.hpp"

namespace korobov {
namespace {

// Coordinates are visited in increasing j, so gamma_j^-1 is non-decreasing
// and the running product only grows: once prod * gamma_j^-1 reaches the
// limit, no later coordinate can be switched on either.
class Enumerator {
 public:
  Enumerator(const SpaceDescriptor& space, double limit, std::size_t cap)
      : space_(space), limit_(limit), cap_(cap) {}

  // Subtree rooted at coordinates [start, d) with running product prod.
  void run(std::size_t start, double prod, Frequency& h) {
    emit(h);
    const std::size_t d = space_.dim();
    for (std::size_t j = start; j < d; ++j) {
      const double gamma = space_.gammas()[j];
      if (!(prod * (1.0 / gamma) < limit_)) break;
      for (std::int64_t m = 1;; ++m) {
        const double p = prod * factor(m, gamma);
        if (!(p < limit_)) break;
        h[j] = m;
        run(j + 1, p, h);
        h[j] = -m;
        run(j + 1, p, h);
      }
      h[j] = 0;
    }
  }

  // Same factor expression as weight_factor so products agree bit for bit.
  double factor(std::int64_t m, double gamma) const {
    return std::pow(static_cast<double>(m), space_.alpha()) / gamma;
  }

  std::vector<Frequency> take() { return std::move(out_); }

 private:
  void emit(const Frequency& h) {
    if (out_.size() >= cap_) {
      throw InfeasibleError("index set exceeds the cap of " + std::to_string(cap_) + " members");
    }
    out_.push_back(h);
  }

  const SpaceDescriptor& space_;
  double limit_;
  std::size_t cap_;
  std::vector<Frequency> out_;
};

// Same traversal as Enumerator, counting instead of storing.
class Counter {
 public:
  Counter(const SpaceDescriptor& space, double limit, std::size_t cap)
      : space_(space), limit_(limit), cap_(cap) {}

  void run(std::size_t start, double prod) {
    if (++count_ > cap_) {
      throw InfeasibleError("index set exceeds the cap of " + std::to_string(cap_) + " members");
    }
    const std::size_t d = space_.dim();
    for (std::size_t j = start; j < d; ++j) {
      const double gamma = space_.gammas()[j];
      if (!(prod * (1.0 / gamma) < limit_)) break;
      for (std::int64_t m = 1;; ++m) {
        const double p = prod * (std::pow(static_cast<double>(m), space_.alpha()) / gamma);
        if (!(p < limit_)) break;
        run(j + 1, p);
        run(j + 1, p);
      }
    }
  }

  std::size_t count() const { return count_; }

 private:
  const SpaceDescriptor& space_;
  double limit_;
  std::size_t cap_;
  std::size_t count_ = 0;
};

void validate(const SpaceDescriptor& space, double epsilon) {
  if (space.alpha() == 0.0) {
    throw DomainError(
        "approximation not solvable: infinitely many unit eigenvalues for alpha = 0");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
}

}  // namespace

bool IndexSet::contains(const Frequency& h) const {
  return std::binary_search(members_.begin(), members_.end(), h);
}

IndexSet enumerate(const SpaceDescriptor& space, double epsilon, const EnumerationOptions& options) {
  validate(space, epsilon);
  const double limit = 1.0 / (epsilon * epsilon);
  const std::size_t d = space.dim();
  std::vector<Frequency> members;

  if (!options.parallel) {
    Enumerator e(space, limit, options.max_size);
    Frequency h(d, 0);
    e.run(0, 1.0, h);
    members = e.take();
  } else {
    // Roots of the first-coordinate branches: h_1 = 0 and each +-m.
    std::vector<std::pair<std::int64_t, double>> roots{{0, 1.0}};
    Enumerator probe(space, limit, options.max_size);
    for (std::int64_t m = 1;; ++m) {
      const double p = probe.factor(m, space.gammas()[0]);
      if (!(p < limit)) break;
      roots.emplace_back(m, p);
      roots.emplace_back(-m, p);
    }
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, roots.size());
    std::vector<std::future<std::vector<Frequency>>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
      parts.push_back(std::async(std::launch::async, [&, w] {
        Enumerator e(space, limit, options.max_size);
        for (std::size_t r = w; r < roots.size(); r += workers) {
          Frequency h(d, 0);
          h[0] = roots[r].first;
          e.run(1, roots[r].second, h);
        }
        return e.take();
      }));
    }
    for (auto& part : parts) {
      auto chunk = part.get();
      members.insert(members.end(), std::make_move_iterator(chunk.begin()),
                     std::make_move_iterator(chunk.end()));
      if (members.size() > options.max_size) {
        throw InfeasibleError("index set exceeds the cap of " + std::to_string(options.max_size) +
                              " members");
      }
    }
  }

  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return IndexSet(space, epsilon, std::move(members));
}

std::size_t index_set_size(const SpaceDescriptor& space, double epsilon,
                           const EnumerationOptions& options) {
  validate(space, epsilon);
  Counter c(space, 1.0 / (epsilon * epsilon), options.max_size);
  c.run(0, 1.0);
  return c.count();
}

std::size_t comp_wor_all(const SpaceDescriptor& space, double epsilon,
                         const EnumerationOptions& options) {
  return index_set_size(space, epsilon, options);
}

FourierPolynomial truncate(const IndexSet& set, const FourierPolynomial& f) {
  if (f.dim() != set.space().dim()) throw DimensionMismatch(set.space().dim(), f.dim());
  FourierPolynomial out(f.dim());
  for (const auto& [h, c] : f.terms()) {
    if (set.contains(h)) out.set(h, c);
  }
  return out;
}

FourierPolynomial truncate(const SpaceDescriptor& space, double epsilon, const FourierPolynomial& f) {
  return truncate(enumerate(space, epsilon), f);
}

double truncation_error(const IndexSet& set, const FourierPolynomial& f) {
  if (f.dim() != set.space().dim()) throw DimensionMismatch(set.space().dim(), f.dim());
  double tail = 0.0;
  for (const auto& [h, c] : f.terms()) {
    if (!set.contains(h)) tail += std::norm(c);
  }
  return std::sqrt(tail);
}

double truncation_error(const SpaceDescriptor& space, double epsilon, const FourierPolynomial& f) {
  return truncation_error(enumerate(space, epsilon), f);
}

double cardinality_estimate_1d(const SpaceDescriptor& space, double epsilon) {
  return 2.0 * std::pow(space.gamma(1), 1.0 / space.alpha()) *
         std::pow(epsilon, -2.0 / space.alpha());
}

}  // namespace korobov
