#include "korobov/tractability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "korobov/errors.hpp"
#include "korobov/quantum.hpp"
#include "korobov/randomized.hpp"
#include "korobov/stats.hpp"

namespace korobov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

TractabilityVerdict intractable(Setting s, std::string notes) {
  return {s, false, false, kInf, kInf, std::move(notes)};
}

}  // namespace

std::string to_string(Setting s) {
  switch (s) {
    case Setting::kWorstAll:
      return "worst_all";
    case Setting::kWorstStd:
      return "worst_std";
    case Setting::kRandomizedStd:
      return "randomized_std";
    case Setting::kQuantumStd:
      return "quantum_std";
  }
  return "?";
}

Setting parse_setting(const std::string& name) {
  for (Setting s : kAllSettings) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown setting '" + name + "'");
}

double exponent_all(double alpha, double kappa) {
  if (alpha < 0.0 || kappa < 0.0) throw std::invalid_argument("alpha and kappa must be >= 0");
  if (alpha == 0.0 || kappa == 0.0) return kInf;
  return 2.0 * std::max(1.0 / kappa, 1.0 / alpha);
}

double exponent_all(const SpaceDescriptor& space) {
  if (!space.weights().is_polynomial()) {
    throw std::invalid_argument("exponent_all needs the polynomial weight family");
  }
  return exponent_all(space.alpha(), space.weights().decay());
}

TractabilityVerdict verdict(const SpaceDescriptor& space, Setting setting) {
  return verdict(space.alpha(), space.weights(), setting);
}

TractabilityVerdict verdict(double alpha, const WeightSchedule& weights, Setting setting) {
  if (!weights.is_polynomial()) {
    throw std::invalid_argument("verdicts are defined for the polynomial weight family only");
  }
  const double kappa = weights.decay();
  const double c = weights.scale();
  const double p = exponent_all(alpha, kappa);
  const bool finite_s = kappa > 0.0;
  const std::string s_note = finite_s ? "s_gamma = " + fmt(1.0 / kappa) : "s_gamma = inf";

  switch (setting) {
    case Setting::kWorstAll:
      if (!(alpha > 0.0)) return intractable(setting, "alpha = 0: infinitely many unit eigenvalues");
      if (!finite_s) return intractable(setting, s_note + ": exponentially many coefficients");
      return {setting, true, true, p, p, "p* = 2 max(s_gamma, 1/alpha) = " + fmt(p)};

    case Setting::kWorstStd: {
      if (!(alpha > 1.0)) return intractable(setting, "function values need alpha > 1");
      if (kappa > 1.0) {
        return {setting, true, true, p, p + 2.0,
                "sum of weights finite; p*(std) in [p*, p* + 2], p* = " + fmt(p)};
      }
      if (kappa == 1.0) {
        // sum_{j<=d} c/j = c ln d + O(1), so a = c.
        const double dexp = 4.0 * zeta(alpha) * c;
        return {setting, false, true, 2.0, 2.0,
                "sum of weights diverges like c ln d: a = " + fmt(c) +
                    "; cost eps^-(2+delta) d^(4 zeta(alpha) a + delta), d-exponent " + fmt(dexp)};
      }
      return intractable(setting, "sum_{j<=d} gamma_j / ln d -> inf (a = inf)");
    }

    case Setting::kRandomizedStd:
      if (!(alpha > 0.0)) return intractable(setting, "alpha = 0: sample size is infinite");
      if (!finite_s) return intractable(setting, s_note);
      return {setting, true, true, p, p + 2.0,
              "p*(std) in [p*, p* + 2], p* = " + fmt(p) + "; n ~ eps^-(p* + 2)"};

    case Setting::kQuantumStd:
      if (!(alpha > 1.0) || !finite_s) {
        return intractable(setting, "no quantum upper bound unless alpha > 1 and s_gamma < inf");
      }
      return {setting, true, true, 0.0, 1.0 + 1.5 * p,
              "cost exponent 1 + 3 p*/2 = " + fmt(1.0 + 1.5 * p) +
                  " (upper bound; lower bound not established)"};
  }
  throw std::logic_error("unhandled setting");
}

std::vector<GrowthRow> growth_study(const SpaceDescriptor& space,
                                    const std::vector<double>& eps_grid,
                                    const std::vector<std::size_t>& d_grid,
                                    const EnumerationOptions& options) {
  if (!(space.alpha() > 0.0)) throw DomainError("growth study needs alpha > 0");
  double p_star = kInf;
  if (space.weights().is_polynomial()) p_star = exponent_all(space);
  std::vector<GrowthRow> rows;
  for (std::size_t d : d_grid) {
    const SpaceDescriptor sp = space.with_dim(d);
    const std::size_t first = rows.size();
    std::vector<double> x, y;
    for (double eps : eps_grid) {
      GrowthRow row;
      row.epsilon = eps;
      row.d = d;
      try {
        row.r_size = index_set_size(sp, eps, options);
        x.push_back(1.0 / eps);
        y.push_back(static_cast<double>(*row.r_size));
      } catch (const InfeasibleError&) {
        row.r_size.reset();
      }
      rows.push_back(row);
    }
    // |R| carries log^(d-1) factors that bias a whole-grid fit upward, so the
    // exponent is estimated on the finer half of the grid (at least 3 points).
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
    const std::size_t keep = std::min(x.size(), std::max<std::size_t>(3, (x.size() + 1) / 2));
    std::vector<double> tx, ty;
    for (std::size_t i = 0; i < keep; ++i) {
      tx.push_back(x[order[i]]);
      ty.push_back(y[order[i]]);
    }
    const double slope = tx.size() >= 2 ? fit_loglog_slope(tx, ty) : std::nan("");
    for (std::size_t i = first; i < rows.size(); ++i) {
      rows[i].fitted_slope = slope;
      rows[i].flagged = slope > p_star + 0.5;
    }
  }
  return rows;
}

double speedup_prefactor(std::size_t d, const EvalCostFn& c_of_d) {
  const auto dd = static_cast<double>(d);
  return dd / (c_of_d(d) + dd);
}

SpeedupTable speedup_table(const SpaceDescriptor& space, const std::vector<double>& eps_grid,
                           const EvalCostFn& c_of_d) {
  space.require_kernel();
  SpeedupTable table;
  std::vector<double> x, rand, quant, ratio;
  for (double eps : eps_grid) {
    SpeedupRow row;
    row.epsilon = eps;
    row.cost_rand = cost_model_randomized(space, eps, c_of_d).total;
    row.cost_quantum = cost_model_quantum(space, eps, c_of_d).sup_path.total_cost;
    row.ratio = row.cost_rand / row.cost_quantum;
    table.rows.push_back(row);
    x.push_back(1.0 / eps);
    rand.push_back(row.cost_rand);
    quant.push_back(row.cost_quantum);
    ratio.push_back(row.ratio);
  }
  if (x.size() >= 2) {
    table.rand_slope = fit_loglog_slope(x, rand);
    table.quantum_slope = fit_loglog_slope(x, quant);
    table.ratio_slope = fit_loglog_slope(x, ratio);
  }
  return table;
}

}  // namespace korobov
