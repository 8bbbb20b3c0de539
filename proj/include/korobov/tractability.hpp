#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "korobov/cost.hpp"
#include "korobov/index_set.hpp"
#include "korobov/space.hpp"

namespace korobov {

enum class Setting { kWorstAll, kWorstStd, kRandomizedStd, kQuantumStd };

std::string to_string(Setting s);
Setting parse_setting(const std::string& name);
inline constexpr Setting kAllSettings[] = {Setting::kWorstAll, Setting::kWorstStd,
                                           Setting::kRandomizedStd, Setting::kQuantumStd};

struct TractabilityVerdict {
  Setting setting;
  bool strongly_tractable = false;
  bool tractable = false;
  double exponent_low = 0.0;   // +inf when not tractable
  double exponent_high = 0.0;
  std::string notes;
};

// p*(all) = 2 max(s_gamma, 1/alpha) for gamma_j = c j^-kappa; +inf for
// kappa = 0 or alpha = 0. Throws std::invalid_argument for explicit schedules.
double exponent_all(const SpaceDescriptor& space);
double exponent_all(double alpha, double kappa);

// Analytic evaluation of the tractability conditions on the polynomial family.
TractabilityVerdict verdict(const SpaceDescriptor& space, Setting setting);
TractabilityVerdict verdict(double alpha, const WeightSchedule& weights, Setting setting);

struct GrowthRow {
  double epsilon = 0.0;
  std::size_t d = 0;
  std::optional<std::size_t> r_size;  // empty: enumeration cap exceeded
  double fitted_slope = 0.0;          // log|R| vs log(1/eps), finer half of the grid
  bool flagged = false;               // slope > p* + 0.5
};

// |R(eps, d)| over the grid, with a per-d log-log fit. Rows are ordered by d,
// then by the order of eps_grid.
std::vector<GrowthRow> growth_study(const SpaceDescriptor& space,
                                    const std::vector<double>& eps_grid,
                                    const std::vector<std::size_t>& d_grid,
                                    const EnumerationOptions& options = {});

struct SpeedupRow {
  double epsilon = 0.0;
  double cost_rand = 0.0;
  double cost_quantum = 0.0;
  double ratio = 0.0;  // cost_rand / cost_quantum
};

struct SpeedupTable {
  std::vector<SpeedupRow> rows;
  double rand_slope = 0.0;     // fitted exponent of 1/eps
  double quantum_slope = 0.0;
  double ratio_slope = 0.0;
};

SpeedupTable speedup_table(const SpaceDescriptor& space, const std::vector<double>& eps_grid,
                           const EvalCostFn& c_of_d);

// d / (c(d) + d), the prefactor of the speedup.
double speedup_prefactor(std::size_t d, const EvalCostFn& c_of_d);

}  // namespace korobov
