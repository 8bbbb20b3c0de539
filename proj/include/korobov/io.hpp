#pragma once

#include <string>

#include <json.hpp>

#include "korobov/fourier.hpp"
#include "korobov/index_set.hpp"
#include "korobov/lattice.hpp"
#include "korobov/space.hpp"

namespace korobov {

using Json = nlohmann::ordered_json;

// Locale-independent, 17 significant digits; non-finite values as "inf",
// "-inf", "nan".
std::string format_double(double x);

// Serialises with format_double for every floating-point number.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const FourierPolynomial& f);
FourierPolynomial polynomial_from_json(const Json& j);

Json to_json(const IndexSet& set);

Json to_json(const LatticeRule& rule);
LatticeRule lattice_rule_from_json(const Json& j);

Json to_json(const WeightSchedule& w);
WeightSchedule weights_from_json(const Json& j);

}  // namespace korobov
