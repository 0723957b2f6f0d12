#ifndef QALEX_RATIONAL_HPP
#define QALEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qalex {

// Exact rational over arbitrary-precision integers. gmp keeps mpq_class in
// lowest terms with a positive denominator after every arithmetic operation.
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

// Generalized binomial coefficient x(x-1)...(x-k+1)/k!, k >= 0.
Rational binomial(const Rational& x, int k);

}  // namespace qalex

#endif  // QALEX_RATIONAL_HPP
