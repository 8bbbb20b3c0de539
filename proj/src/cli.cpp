#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "korobov/cost.hpp"
#include "korobov/errors.hpp"
#include "korobov/index_set.hpp"
#include "korobov/io.hpp"
#include "korobov/lattice.hpp"
#include "korobov/quantum.hpp"
#include "korobov/randomized.hpp"
#include "korobov/tractability.hpp"
#include "selftest.hpp"

namespace korobov::cli {
namespace {

// Malformed or inconsistent configuration: exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Json raw;  // resolved config, embedded in every report
  std::size_t d = 1;
  double alpha = 2.0;
  WeightSchedule weights = WeightSchedule::constant(1.0);
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  EvalCost cost;
  std::size_t index_set_max = 10'000'000;

  SpaceDescriptor space() const { return {d, alpha, weights}; }
  EnumerationOptions enumeration() const { return {index_set_max, false}; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

RunConfig resolve(Json raw, std::optional<std::uint64_t> seed_override) {
  if (!raw.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  try {
    c.d = raw.at("d").get<std::size_t>();
    c.alpha = raw.at("alpha").get<double>();
    c.weights = weights_from_json(raw.at("weights"));
    c.epsilon = raw.at("epsilon").get<double>();
    c.seed = raw.value("seed", std::uint64_t{0});
    c.trials = raw.value("trials", std::size_t{100});
    const Json cost = raw.value("cost_c_of_d", Json{{"kind", "linear"}, {"scale", 1.0}});
    c.cost = EvalCost::parse(cost.value("kind", std::string("linear")), cost.value("scale", 1.0));
    if (raw.contains("caps")) {
      c.index_set_max = raw["caps"].value("index_set_max", c.index_set_max);
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  if (seed_override) c.seed = *seed_override;
  if (c.d == 0) throw ConfigError("d must be >= 1");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (c.trials == 0) throw ConfigError("trials must be >= 1");
  (void)c.space();  // validates alpha and weights against d

  raw["seed"] = c.seed;
  raw["trials"] = c.trials;
  raw["cost_c_of_d"] = {{"kind", c.cost.kind_name()}, {"scale", c.cost.scale}};
  raw["caps"]["index_set_max"] = c.index_set_max;
  c.raw = std::move(raw);
  return c;
}

// Test function: inline polynomial, or a random unit-norm one (default).
FourierPolynomial test_function(const RunConfig& c) {
  const Json spec = c.raw.value("function", Json{{"kind", "random"}});
  const auto kind = spec.value("kind", std::string("random"));
  if (kind == "random") {
    return random_unit(c.space(), spec.value("support", std::size_t{8}),
                       spec.value("max_freq", std::int64_t{4}),
                       spec.value("seed", derive_seed(c.seed, 0xF00D)));
  }
  if (kind == "polynomial") {
    auto f = polynomial_from_json(spec);
    if (f.dim() != c.d) throw DimensionMismatch(c.d, f.dim());
    return f;
  }
  throw ConfigError("unknown function kind '" + kind + "'");
}

std::vector<double> grid(const RunConfig& c, const char* key, std::vector<double> fallback) {
  return c.raw.contains(key) ? c.raw[key].get<std::vector<double>>() : fallback;
}

std::vector<double> default_eps_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 5; ++k) g.push_back(std::ldexp(1.0, -k));
  return g;
}

double as_count(double x) { return std::round(x); }

Json report_json(const ResourceReport& r) {
  return {{"queries", as_count(r.queries)},
          {"qubits", r.qubits},
          {"combinatory_ops", as_count(r.combinatory_ops)},
          {"func_evals", as_count(r.func_evals)},
          {"failure_prob_bound", r.failure_prob_bound},
          {"per_query_weight", r.per_query_weight},
          {"total_cost", r.total_cost}};
}

// Integers stay integers in JSON when they fit.
Json integral(double x) {
  if (std::isfinite(x) && std::abs(x) < 9.0e15) return static_cast<std::int64_t>(std::llround(x));
  return x;
}

class Csv {
 public:
  explicit Csv(std::ostream& os) : os_(os) {}
  Csv& row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) os_ << ',';
      os_ << c;
      first = false;
    }
    os_ << '\n';
    return *this;
  }

 private:
  std::ostream& os_;
};

std::string num(double x) { return format_double(x); }
std::string num(std::size_t x) { return std::to_string(x); }

// ---------------------------------------------------------------------------

void cmd_index_set(const RunConfig& c, const std::string& format, std::ostream& os) {
  const IndexSet set = enumerate(c.space(), c.epsilon, c.enumeration());
  if (format == "csv") {
    std::string header;
    for (std::size_t j = 1; j <= c.d; ++j) header += (j > 1 ? ",h" : "h") + std::to_string(j);
    os << header << '\n';
    for (const auto& h : set.members()) {
      for (std::size_t j = 0; j < h.size(); ++j) os << (j ? "," : "") << h[j];
      os << '\n';
    }
    return;
  }
  Json j = to_json(set);
  j["config"] = c.raw;
  os << dump_json(j) << '\n';
}

void cmd_approx_worst(const RunConfig& c, std::ostream& os) {
  const auto space = c.space();
  const auto f = test_function(c);
  const IndexSet set = enumerate(space, c.epsilon, c.enumeration());
  const auto approx = truncate(set, f);
  const double norm = korobov_norm(space, f);
  const double err = truncation_error(set, f);
  Json j{{"epsilon", c.epsilon},
         {"R_size", set.size()},
         {"korobov_norm", norm},
         {"truncation_error", err},
         {"error_bound", c.epsilon * norm},
         {"within_bound", err <= c.epsilon * norm},
         {"approximation", to_json(approx)},
         {"config", c.raw}};
  os << dump_json(j) << '\n';
}

void cmd_approx_mc(const RunConfig& c, std::ostream& os) {
  const auto space = c.space();
  const auto f = test_function(c);
  const McRun run(space, c.epsilon, c.seed);
  const double expected = expected_sq_error(run.index_set, run.n, f);
  const EmpiricalError emp = empirical_error(run, f, c.trials);
  const RandomizedCost cost = cost_model_randomized(space, c.epsilon, c.cost);
  Json j{{"epsilon", c.epsilon},
         {"n", run.n},
         {"R_size", run.index_set.size()},
         {"expected_sq_error", expected},
         {"empirical", {{"mean_sq", emp.mean_sq}, {"std_err", emp.std_err}, {"trials", emp.trials}}},
         {"cost",
          {{"func_evals", integral(cost.func_evals)},
           {"combinatory_ops", integral(cost.combinatory_ops)},
           {"c_of_d", c.cost(c.d)},
           {"total", cost.total}}},
         {"config", c.raw}};
  os << dump_json(j) << '\n';
}

void cmd_approx_quantum(const RunConfig& c, std::ostream& os) {
  const auto space = c.space();
  const auto f = test_function(c);
  PlanOptions options;
  options.enumeration = c.enumeration();
  const QuantumPlan plan = plan_quantum(space, c.epsilon, options);
  const QuantumApproxOutput out = run_quantum(plan, f, c.seed, c.cost);
  const std::string invalid = validate_report(out.report, out.sums, out.assembly_ops);
  if (!invalid.empty()) throw std::logic_error("resource report inconsistent: " + invalid);
  Json j{{"epsilon", c.epsilon},
         {"R_size", plan.index_set.size()},
         {"N", plan.rule.size()},
         {"z", plan.rule.generator()},
         {"queries", integral(out.report.queries)},
         {"qubits", out.report.qubits},
         {"combinatory_ops", integral(out.report.combinatory_ops)},
         {"total_cost", out.report.total_cost},
         {"failure_prob_bound", out.report.failure_prob_bound},
         {"achieved_error", std::sqrt(squared_error(f, out))},
         {"func_evals", integral(out.report.func_evals)},
         {"per_query_weight", out.report.per_query_weight},
         {"n_queries_per_sum", plan.n_queries},
         {"aliasing_bound", plan.aliasing_bound},
         {"worst_case_int_error", plan.worst_case_error},
         {"report_valid", true},
         {"resources", report_json(out.report)},
         {"config", c.raw}};
  os << dump_json(j) << '\n';
}

void cmd_lattice_search(const RunConfig& c, std::ostream& os) {
  const auto space = c.space();
  if (!c.raw.contains("N")) throw ConfigError("lattice-search needs \"N\" in the config");
  const auto n = c.raw["N"].get<std::uint64_t>();
  const auto mode_name = c.raw.value("mode", std::string("cbc"));
  SearchMode mode;
  if (mode_name == "cbc") {
    mode = SearchMode::kCbc;
  } else if (mode_name == "exhaustive") {
    mode = SearchMode::kExhaustive;
  } else {
    throw ConfigError("mode must be \"cbc\" or \"exhaustive\"");
  }
  const LatticeRule rule = search_generator(space, n, mode);
  const double e = worst_case_int_error(space, rule);
  Json dual = nullptr;
  try {
    dual = worst_case_int_error_dual(space, rule);
  } catch (const InfeasibleError&) {
    // too many residue classes; kernel form only
  }
  const double bound = lattice_error_bound(space, n);
  Json j = to_json(rule);
  j["mode"] = mode_name;
  j["worst_case_int_error"] = e;
  j["worst_case_int_error_dual"] = dual;
  j["bound"] = bound;
  j["bound_satisfied"] = e <= bound;
  j["config"] = c.raw;
  os << dump_json(j) << '\n';
}

void cmd_tractability(const RunConfig& c, const std::string& format, std::ostream& os) {
  std::vector<Setting> settings(std::begin(kAllSettings), std::end(kAllSettings));
  if (c.raw.contains("settings")) {
    settings.clear();
    for (const auto& s : c.raw["settings"]) settings.push_back(parse_setting(s.get<std::string>()));
  }
  if (format == "csv") {
    Csv csv(os);
    csv.row({"setting", "strongly_tractable", "tractable", "exponent_low", "exponent_high"});
    for (auto s : settings) {
      const auto v = verdict(c.alpha, c.weights, s);
      csv.row({to_string(s), v.strongly_tractable ? "true" : "false", v.tractable ? "true" : "false",
               num(v.exponent_low), num(v.exponent_high)});
    }
    return;
  }
  Json list = Json::array();
  for (auto s : settings) {
    const auto v = verdict(c.alpha, c.weights, s);
    const char* label = v.strongly_tractable ? "strongly tractable"
                        : v.tractable        ? "tractable"
                                             : "intractable";
    list.push_back({{"setting", to_string(s)},
                    {"verdict", label},
                    {"strongly_tractable", v.strongly_tractable},
                    {"tractable", v.tractable},
                    {"exponent_low", v.exponent_low},
                    {"exponent_high", v.exponent_high},
                    {"notes", v.notes}});
  }
  Json j{{"verdicts", list}, {"config", c.raw}};
  if (c.weights.is_polynomial()) j["exponent_all"] = exponent_all(c.alpha, c.weights.decay());
  os << dump_json(j) << '\n';
}

void cmd_growth(const RunConfig& c, const std::string& format, std::ostream& os) {
  const auto eps = grid(c, "epsilon_grid", default_eps_grid());
  std::vector<std::size_t> ds{c.d};
  if (c.raw.contains("d_grid")) ds = c.raw["d_grid"].get<std::vector<std::size_t>>();
  const auto rows = growth_study(c.space(), eps, ds, c.enumeration());
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"epsilon", r.epsilon},
                      {"d", r.d},
                      {"R_size", r.r_size ? Json(*r.r_size) : Json(nullptr)},
                      {"fitted_slope", r.fitted_slope},
                      {"flagged", r.flagged}});
    }
    os << dump_json(Json{{"rows", list}, {"config", c.raw}}) << '\n';
    return;
  }
  Csv csv(os);
  csv.row({"epsilon", "d", "R_size", "fitted_slope"});
  for (const auto& r : rows) {
    csv.row({num(r.epsilon), num(r.d), r.r_size ? num(*r.r_size) : "skipped", num(r.fitted_slope)});
  }
}

void cmd_speedup(const RunConfig& c, const std::string& format, std::ostream& os) {
  const auto eps = grid(c, "epsilon_grid", default_eps_grid());
  const auto table = speedup_table(c.space(), eps, c.cost);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : table.rows) {
      list.push_back({{"epsilon", r.epsilon},
                      {"cost_rand", r.cost_rand},
                      {"cost_quantum", r.cost_quantum},
                      {"ratio", r.ratio}});
    }
    os << dump_json(Json{{"rows", list},
                         {"rand_slope", table.rand_slope},
                         {"quantum_slope", table.quantum_slope},
                         {"ratio_slope", table.ratio_slope},
                         {"prefactor", speedup_prefactor(c.d, c.cost)},
                         {"config", c.raw}})
       << '\n';
    return;
  }
  Csv csv(os);
  csv.row({"epsilon", "cost_rand", "cost_quantum", "ratio"});
  for (const auto& r : table.rows) {
    csv.row({num(r.epsilon), num(r.cost_rand), num(r.cost_quantum), num(r.ratio)});
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation in weighted Korobov spaces", "korobov"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::map<std::string, std::string> formats;  // per subcommand, defaults differ
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    std::string& format = formats[sub->get_name()];
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val(default_format);
    sub->add_option("--seed", seed, "overrides the config seed");
  };

  struct Sub {
    const char* name;
    const char* help;
    const char* format;
  };
  const Sub subs[] = {
      {"index-set", "enumerate R(eps, d)", "json"},
      {"approx-worst", "truncate a test function to R and report the exact error", "json"},
      {"approx-mc", "Monte Carlo coefficient estimation with an error report", "json"},
      {"approx-quantum", "simulated quantum pipeline with a resource report", "json"},
      {"lattice-search", "search a rank-1 generator for prime N and certify it", "json"},
      {"tractability", "tractability verdicts for all settings", "json"},
      {"growth", "|R(eps, d)| over grids with fitted slopes", "csv"},
      {"speedup", "randomized vs quantum cost table", "csv"},
  };
  for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help), s.format);
  auto* selftest = app.add_subcommand("selftest", "check the library against reference oracles");
  selftest->add_option("--out", out_path, "write the log here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::ostringstream report;
  int code = 0;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const std::string format = formats[name];
    if (name == "selftest") {
      code = run_selftest(report) ? 0 : 1;
    } else {
      const RunConfig c = resolve(read_json_file(config_path), seed);
      if (format == "csv" && name != "index-set" && name != "tractability" && name != "growth" &&
          name != "speedup") {
        throw ConfigError(name + " has no csv output");
      }
      if (name == "index-set") cmd_index_set(c, format, report);
      else if (name == "approx-worst") cmd_approx_worst(c, report);
      else if (name == "approx-mc") cmd_approx_mc(c, report);
      else if (name == "approx-quantum") cmd_approx_quantum(c, report);
      else if (name == "lattice-search") cmd_lattice_search(c, report);
      else if (name == "tractability") cmd_tractability(c, format, report);
      else if (name == "growth") cmd_growth(c, format, report);
      else if (name == "speedup") cmd_speedup(c, format, report);
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot write '" << out_path << "'\n";
      return 2;
    }
    file << report.str();
  }
  return code;
}

}  // namespace korobov::cli
