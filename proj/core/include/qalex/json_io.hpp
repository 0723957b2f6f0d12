#ifndef QALEX_JSON_IO_HPP
#define QALEX_JSON_IO_HPP

#include <json.hpp>

#include "qalex/alexander.hpp"
#include "qalex/gaussian.hpp"
#include "qalex/linalg.hpp"

namespace qalex {

using Json = nlohmann::ordered_json;

// {"-1": "1", "0": "-1", "1": "1"}, ascending exponents.
Json laurent_to_json(const LaurentPoly& p);
// Throws ParseError on non-integer keys or malformed rationals.
LaurentPoly laurent_from_json(const Json& j);

// ["1", "0", "-1", ...] of length order + 1.
Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j);

// Array of rows, each an array of Laurent objects.
Json matrix_to_json(const LaurentMatrix& m);

// {"alexander": {...}, "checks": {"symmetry": bool, "at_one": "1"}}
Json alexander_payload(const AlexanderPoly& p);

// {"order": N, "coeffs": [...]}
Json invariant_payload(const InvariantSeries& z);

}  // namespace qalex

#endif  // QALEX_JSON_IO_HPP
