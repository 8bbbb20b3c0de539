#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "korobov/errors.hpp"
#include "korobov/index_set.hpp"
#include "korobov/lattice.hpp"
#include "korobov/quantum.hpp"
#include "korobov/randomized.hpp"
#include "korobov/space.hpp"
#include "korobov/special_functions.hpp"
#include "korobov/tractability.hpp"

namespace py = pybind11;
using namespace korobov;

namespace {

SearchMode parse_mode(const std::string& mode) {
  if (mode == "cbc") return SearchMode::kCbc;
  if (mode == "exhaustive") return SearchMode::kExhaustive;
  throw std::invalid_argument("mode must be 'cbc' or 'exhaustive'");
}

std::tuple<int, std::string, std::string> run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "korobov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_korobov, m) {
  m.doc() = "Weighted Korobov space approximation: index sets, lattices, cost models";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

  py::class_<WeightSchedule>(m, "WeightSchedule")
      .def_static("explicit", &WeightSchedule::explicit_weights, py::arg("gammas"))
      .def_static("polynomial", &WeightSchedule::polynomial, py::arg("c"), py::arg("kappa"))
      .def_static("constant", &WeightSchedule::constant, py::arg("value"))
      .def("gamma", &WeightSchedule::gamma, py::arg("j"))
      .def_property_readonly("is_polynomial", &WeightSchedule::is_polynomial);

  py::class_<SpaceDescriptor>(m, "Space")
      .def(py::init<std::size_t, double, WeightSchedule>(), py::arg("d"), py::arg("alpha"),
           py::arg("weights"))
      .def_property_readonly("d", &SpaceDescriptor::dim)
      .def_property_readonly("alpha", &SpaceDescriptor::alpha)
      .def_property_readonly("gammas", [](const SpaceDescriptor& s) {
        return std::vector<double>(s.gammas().begin(), s.gammas().end());
      });

  py::class_<LatticeRule>(m, "LatticeRule")
      .def(py::init<std::uint64_t, std::vector<std::int64_t>>(), py::arg("n"), py::arg("z"))
      .def_property_readonly("n", &LatticeRule::size)
      .def_property_readonly("z", &LatticeRule::generator);

  m.def("zeta", &zeta, py::arg("s"));
  m.def("cosine_series", &cosine_series, py::arg("alpha"), py::arg("t"));
  m.def("weight_product", [](const SpaceDescriptor& s, const std::vector<std::int64_t>& h) {
    return weight_product(s, h);
  }, py::arg("space"), py::arg("h"));
  m.def("kernel_diag", py::overload_cast<const SpaceDescriptor&>(&kernel_diag), py::arg("space"));
  m.def("sup_norm_bound", &sup_norm_bound, py::arg("space"));

  m.def("index_set", [](const SpaceDescriptor& s, double eps, std::size_t max_size) {
    return enumerate(s, eps, {max_size, false}).members();
  }, py::arg("space"), py::arg("epsilon"), py::arg("max_size") = 10'000'000);
  m.def("index_set_size", [](const SpaceDescriptor& s, double eps, std::size_t max_size) {
    return index_set_size(s, eps, {max_size, false});
  }, py::arg("space"), py::arg("epsilon"), py::arg("max_size") = 10'000'000);
  m.def("sample_size", py::overload_cast<const SpaceDescriptor&, double>(&sample_size),
        py::arg("space"), py::arg("epsilon"));

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("worst_case_error", &worst_case_int_error, py::arg("space"), py::arg("rule"));
  m.def("worst_case_error_dual", &worst_case_int_error_dual, py::arg("space"), py::arg("rule"));
  m.def("lattice_error_bound", &lattice_error_bound, py::arg("space"), py::arg("n"));
  m.def("search_generator", [](const SpaceDescriptor& s, std::uint64_t n, const std::string& mode) {
    return search_generator(s, n, parse_mode(mode));
  }, py::arg("space"), py::arg("n"), py::arg("mode") = "cbc");

  m.def("amplitude_estimation_pmf", &amplitude_estimation_pmf, py::arg("a"), py::arg("m"));
  m.def("decode_amplitude", &decode_amplitude, py::arg("y"), py::arg("m"));

  m.def("exponent_all", py::overload_cast<double, double>(&exponent_all), py::arg("alpha"),
        py::arg("kappa"));
  m.def("verdict", [](const SpaceDescriptor& s, const std::string& setting) {
    const auto v = verdict(s, parse_setting(setting));
    py::dict out;
    out["setting"] = to_string(v.setting);
    out["strongly_tractable"] = v.strongly_tractable;
    out["tractable"] = v.tractable;
    out["exponent_low"] = v.exponent_low;
    out["exponent_high"] = v.exponent_high;
    return out;
  }, py::arg("space"), py::arg("setting"));

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line tool in process; returns (exit_code, stdout, stderr).");
}
