#ifndef QALEX_ALEXANDER_HPP
#define QALEX_ALEXANDER_HPP

#include "qalex/braid.hpp"
#include "qalex/laurent.hpp"

namespace qalex {

/// Alexander polynomial of a knot. Canonically normalised knots satisfy
/// p(1) = 1 and p(t^{-1}) = p(t); these are reported, not enforced, so that
/// a violation surfaces as a finding.
struct AlexanderPoly {
  LaurentPoly poly;

  Rational value_at_one() const { return poly.evaluate(1); }
  bool is_symmetric() const { return poly.substitute_power(-1) == poly; }
  bool is_normalized() const { return value_at_one() == 1 && is_symmetric(); }

  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;
};

// t^{(1-n-g)/2} det(I_{n-1} - hat(beta)), hat(beta) the upper-left (n-1)x(n-1)
// block of the unreduced Burau matrix. Default route.
AlexanderPoly alexander_thm2(const BraidWord& b);

// (-1)^{n-1} t^{(n-1-g)/2} (t - 1) det(psi^r - I) / (t^n - 1), via the
// reduced Burau representation.
AlexanderPoly alexander_reduced(const BraidWord& b);

// (t^{-n} - 1) det(hat - I) == (t^{-1} - 1) det(psi^r - I). Holds for every
// braid with n >= 2, knot or not.
bool lemma2_check(const BraidWord& b);

// t -> t^k.
LaurentPoly substitute(const AlexanderPoly& p, int k);

}  // namespace qalex

#endif  // QALEX_ALEXANDER_HPP
