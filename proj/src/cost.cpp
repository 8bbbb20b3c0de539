#include "korobov/cost.hpp"

#include <stdexcept>

namespace korobov {

double EvalCost::operator()(std::size_t d) const {
  const auto x = static_cast<double>(d);
  switch (kind) {
    case Kind::kConstant:
      return scale;
    case Kind::kLinear:
      return scale * x;
    case Kind::kQuadratic:
      return scale * x * x;
  }
  return scale;
}

EvalCost EvalCost::parse(const std::string& kind, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("cost scale must be positive");
  if (kind == "constant") return {Kind::kConstant, scale};
  if (kind == "linear") return {Kind::kLinear, scale};
  if (kind == "quadratic") return {Kind::kQuadratic, scale};
  throw std::invalid_argument("unknown cost kind '" + kind + "'");
}

std::string EvalCost::kind_name() const {
  switch (kind) {
    case Kind::kConstant:
      return "constant";
    case Kind::kLinear:
      return "linear";
    case Kind::kQuadratic:
      return "quadratic";
  }
  return "linear";
}

}  // namespace korobov
