#include "korobov/fourier.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "korobov/errors.hpp"
#include "korobov/rng.hpp"

namespace korobov {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_dim(const FourierPolynomial& f, const FourierPolynomial& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch(f.dim(), g.dim());
}

}  // namespace

EvaluationPoint::EvaluationPoint(std::vector<double> coordinates) : coords_(std::move(coordinates)) {
  for (double& c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("evaluation point must be finite");
    c -= std::floor(c);
    if (c >= 1.0) c = 0.0;
  }
}

FourierPolynomial FourierPolynomial::constant(std::size_t d, Complex value) {
  FourierPolynomial f(d);
  f.set(Frequency(d, 0), value);
  return f;
}

FourierPolynomial FourierPolynomial::basis(const SpaceDescriptor& space, const Frequency& h) {
  FourierPolynomial f(space.dim());
  f.set(h, 1.0 / std::sqrt(weight_product(space, h)));
  return f;
}

void FourierPolynomial::check(const Frequency& h) const {
  if (h.size() != d_) throw DimensionMismatch(d_, h.size());
}

Complex FourierPolynomial::coefficient(const Frequency& h) const {
  check(h);
  auto it = terms_.find(h);
  return it == terms_.end() ? Complex{} : it->second;
}

void FourierPolynomial::set(const Frequency& h, Complex value) {
  check(h);
  if (value == Complex{}) {
    terms_.erase(h);
  } else {
    terms_[h] = value;
  }
}

void FourierPolynomial::add(const Frequency& h, Complex value) {
  check(h);
  auto [it, inserted] = terms_.try_emplace(h, value);
  if (!inserted) {
    it->second += value;
    if (it->second == Complex{}) terms_.erase(it);
  } else if (value == Complex{}) {
    terms_.erase(it);
  }
}

Complex evaluate(const FourierPolynomial& f, std::span<const double> x) {
  if (x.size() != f.dim()) throw DimensionMismatch(f.dim(), x.size());
  Complex sum{};
  for (const auto& [h, c] : f.terms()) {
    double phase = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) {
      phase += static_cast<double>(h[j]) * x[j];
    }
    phase -= std::floor(phase);
    sum += c * std::polar(1.0, kTwoPi * phase);
  }
  return sum;
}

Complex evaluate(const FourierPolynomial& f, const EvaluationPoint& x) {
  return evaluate(f, x.coordinates());
}

double korobov_norm(const SpaceDescriptor& space, const FourierPolynomial& f) {
  if (f.dim() != space.dim()) throw DimensionMismatch(space.dim(), f.dim());
  double sum = 0.0;
  for (const auto& [h, c] : f.terms()) sum += weight_product(space, h) * std::norm(c);
  return std::sqrt(sum);
}

double l2_norm(const FourierPolynomial& f) {
  double sum = 0.0;
  for (const auto& [h, c] : f.terms()) sum += std::norm(c);
  return std::sqrt(sum);
}

double l2_distance(const FourierPolynomial& f, const FourierPolynomial& g) {
  require_same_dim(f, g);
  double sum = 0.0;
  auto a = f.terms().begin();
  auto b = g.terms().begin();
  // Merge walk over the union of the two ordered supports.
  while (a != f.terms().end() || b != g.terms().end()) {
    if (b == g.terms().end() || (a != f.terms().end() && a->first < b->first)) {
      sum += std::norm(a->second);
      ++a;
    } else if (a == f.terms().end() || b->first < a->first) {
      sum += std::norm(b->second);
      ++b;
    } else {
      sum += std::norm(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return std::sqrt(sum);
}

FourierPolynomial multiply(const FourierPolynomial& f, const FourierPolynomial& g) {
  require_same_dim(f, g);
  FourierPolynomial out(f.dim());
  Frequency sum(f.dim());
  for (const auto& [j, a] : f.terms()) {
    for (const auto& [k, b] : g.terms()) {
      for (std::size_t m = 0; m < sum.size(); ++m) sum[m] = j[m] + k[m];
      out.add(sum, a * b);
    }
  }
  return out;
}

FourierPolynomial conjugate(const FourierPolynomial& f) {
  FourierPolynomial out(f.dim());
  Frequency neg(f.dim());
  for (const auto& [h, c] : f.terms()) {
    for (std::size_t m = 0; m < neg.size(); ++m) neg[m] = -h[m];
    out.set(neg, std::conj(c));
  }
  return out;
}

FourierPolynomial abs_squared(const FourierPolynomial& f) { return multiply(f, conjugate(f)); }

FourierPolynomial modulate(const FourierPolynomial& f, const Frequency& h) {
  if (h.size() != f.dim()) throw DimensionMismatch(f.dim(), h.size());
  FourierPolynomial out(f.dim());
  Frequency shifted(f.dim());
  for (const auto& [k, c] : f.terms()) {
    for (std::size_t m = 0; m < shifted.size(); ++m) shifted[m] = k[m] - h[m];
    out.set(shifted, c);
  }
  return out;
}

FourierPolynomial subtract(const FourierPolynomial& f, const FourierPolynomial& g) {
  require_same_dim(f, g);
  FourierPolynomial out = f;
  for (const auto& [h, c] : g.terms()) out.add(h, -c);
  return out;
}

FourierPolynomial scale(const FourierPolynomial& f, Complex factor) {
  FourierPolynomial out(f.dim());
  for (const auto& [h, c] : f.terms()) out.set(h, c * factor);
  return out;
}

Complex integral(const FourierPolynomial& f) {
  auto it = f.terms().find(Frequency(f.dim(), 0));
  return it == f.terms().end() ? Complex{} : it->second;
}

FourierPolynomial random_unit(const SpaceDescriptor& space, std::size_t support_size,
                              std::int64_t max_freq, std::uint64_t seed) {
  if (support_size == 0) throw std::invalid_argument("support_size must be >= 1");
  if (max_freq < 0) throw std::invalid_argument("max_freq must be >= 0");
  const std::size_t d = space.dim();
  const auto side = static_cast<std::uint64_t>(2 * max_freq + 1);

  // Box cardinality, saturating at 2^62.
  std::uint64_t box = 1;
  constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;
  for (std::size_t j = 0; j < d && box < kSaturate; ++j) {
    box = box > kSaturate / side ? kSaturate : box * side;
  }
  if (support_size > box) {
    throw std::invalid_argument("support_size exceeds the number of available frequencies");
  }

  SplitMix64 rng(seed);
  auto decode = [&](std::uint64_t index) {
    Frequency h(d);
    for (std::size_t j = 0; j < d; ++j) {
      h[j] = static_cast<std::int64_t>(index % side) - max_freq;
      index /= side;
    }
    return h;
  };

  std::vector<std::uint64_t> chosen;
  chosen.reserve(support_size);
  if (box <= 1'000'000) {
    // Partial Fisher-Yates over the whole box.
    std::vector<std::uint64_t> pool(box);
    for (std::uint64_t i = 0; i < box; ++i) pool[i] = i;
    for (std::size_t i = 0; i < support_size; ++i) {
      const std::uint64_t pick = i + rng.below(box - i);
      std::swap(pool[i], pool[pick]);
      chosen.push_back(pool[i]);
    }
  } else {
    std::set<std::uint64_t> seen;
    while (chosen.size() < support_size) {
      const std::uint64_t pick = rng.below(box);
      if (seen.insert(pick).second) chosen.push_back(pick);
    }
  }

  FourierPolynomial f(d);
  for (std::uint64_t index : chosen) {
    Complex c;
    do {
      const double re = rng.normal();
      const double im = rng.normal();
      c = Complex(re, im) / std::sqrt(2.0);
    } while (c == Complex{});
    f.set(decode(index), c);
  }
  return scale(f, 1.0 / korobov_norm(space, f));
}

}  // namespace korobov
