#ifndef QALEX_LAURENT_HPP
#define QALEX_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "qalex/rational.hpp"

namespace qalex {

/// Laurent polynomial in t with rational coefficients.
///
/// Stored as a sparse exponent -> coefficient map with zero coefficients
/// removed after every operation, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant);             // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly t() { return monomial(1); }
  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Both throw on the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  Rational coeff(int exponent) const;

  // Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  // t -> t^k. k = -1 gives the conjugate p(t^{-1}); k = 0 collapses to p(1).
  LaurentPoly substitute_power(int k) const;
  // Value at a nonzero rational point (any point if p has no negative powers).
  Rational evaluate(const Rational& at) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned k) const;

  // Human-readable form, ascending exponents: "t^-1 - 1 + t".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& coeff);

  Terms terms_;
};

// Ring contract hook used by the generic matrix code.
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1); }

// Exact quotient num / den. Throws DivisibilityError when den does not divide
// num in Q[t, t^{-1}], and NotInvertibleError when den is zero.
LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Polynomial long division over Q of p by d after clearing the lowest powers
// of t; returns {quotient, remainder} in Laurent form.
std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qalex

#endif  // QALEX_LAURENT_HPP
