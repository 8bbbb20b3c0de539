#include "korobov/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "korobov/errors.hpp"

namespace korobov {
namespace {

void write(const Json& j, std::string& out, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write(value, out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && pretty ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(v, out, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      if (std::isfinite(j.get<double>())) {
        out += format_double(j.get<double>());
      } else {
        out += '"' + format_double(j.get<double>()) + '"';
      }
      return;
    default:
      out += j.dump();
  }
}

Frequency frequency_from_json(const Json& j, std::size_t d) {
  Frequency h = j.get<Frequency>();
  if (h.size() != d) throw DimensionMismatch(d, h.size());
  return h;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(j, out, indent, 0);
  return out;
}

Json to_json(const FourierPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [h, c] : f.terms()) {
    terms.push_back({{"h", h}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"d", f.dim()}, {"terms", terms}};
}

FourierPolynomial polynomial_from_json(const Json& j) {
  const auto d = j.at("d").get<std::size_t>();
  if (d == 0) throw std::invalid_argument("polynomial dimension must be >= 1");
  FourierPolynomial f(d);
  for (const auto& t : j.at("terms")) {
    f.add(frequency_from_json(t.at("h"), d),
          Complex(t.at("re").get<double>(), t.value("im", 0.0)));
  }
  return f;
}

Json to_json(const IndexSet& set) {
  Json members = Json::array();
  for (const auto& h : set.members()) members.push_back(h);
  return {{"epsilon", set.epsilon()}, {"d", set.space().dim()}, {"members", members}};
}

Json to_json(const LatticeRule& rule) { return {{"N", rule.size()}, {"z", rule.generator()}}; }

LatticeRule lattice_rule_from_json(const Json& j) {
  return LatticeRule(j.at("N").get<std::uint64_t>(), j.at("z").get<std::vector<std::int64_t>>());
}

Json to_json(const WeightSchedule& w) {
  if (w.is_polynomial()) return {{"kind", "polynomial"}, {"c", w.scale()}, {"kappa", w.decay()}};
  return {{"kind", "explicit"}, {"gammas", w.values()}};
}

WeightSchedule weights_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "polynomial") {
    return WeightSchedule::polynomial(j.value("c", 1.0), j.value("kappa", 0.0));
  }
  if (kind == "explicit") return WeightSchedule::explicit_weights(j.at("gammas").get<std::vector<double>>());
  throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

}  // namespace korobov
