#include "qalex/json_io.hpp"

#include <charconv>
#include <string>

#include "qalex/errors.hpp"

namespace qalex {

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be a JSON object", 0);
  LaurentPoly::Terms terms;
  std::size_t index = 0;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || ptr != key.data() + key.size()) throw ParseError("bad exponent '" + key + "'", index);
    if (!value.is_string()) throw ParseError("coefficient must be a rational string", index);
    terms[e] += parse_rational(value.get<std::string>());
    ++index;
  }
  return LaurentPoly(std::move(terms));
}

Json series_to_json(const TruncSeries& s) {
  Json j = Json::array();
  for (const auto& c : s.coeffs()) j.push_back(to_string(c));
  return j;
}

TruncSeries series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("series must be a non-empty JSON array", 0);
  std::vector<Rational> coeffs;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("coefficient must be a rational string", coeffs.size());
    coeffs.push_back(parse_rational(v.get<std::string>()));
  }
  const int order = static_cast<int>(coeffs.size()) - 1;
  return TruncSeries(order, std::move(coeffs));
}

Json matrix_to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(laurent_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json alexander_payload(const AlexanderPoly& p) {
  Json j;
  j["alexander"] = laurent_to_json(p.poly);
  j["checks"]["symmetry"] = p.is_symmetric();
  j["checks"]["at_one"] = to_string(p.value_at_one());
  return j;
}

Json invariant_payload(const InvariantSeries& z) {
  Json j;
  j["order"] = z.order;
  j["coeffs"] = series_to_json(z.series);
  return j;
}

}  // namespace qalex
