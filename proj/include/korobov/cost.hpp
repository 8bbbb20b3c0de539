#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace korobov {

// Cost c(d) of one function evaluation in dimension d.
using EvalCostFn = std::function<double(std::size_t)>;

struct EvalCost {
  enum class Kind { kConstant, kLinear, kQuadratic };

  Kind kind = Kind::kLinear;
  double scale = 1.0;

  double operator()(std::size_t d) const;

  static EvalCost parse(const std::string& kind, double scale);
  std::string kind_name() const;
};

}  // namespace korobov
