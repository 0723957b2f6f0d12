#ifndef QALEX_HOPF_REP_HPP
#define QALEX_HOPF_REP_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qalex/rational.hpp"
#include "qalex/series.hpp"

namespace qalex {

/// Polynomial in one or two variables z_0, z_1 with coefficients in
/// truncated hbar-series. Zero coefficients are never stored.
class PolyFn {
 public:
  using Exponents = std::array<int, 2>;
  using Terms = std::map<Exponents, TruncSeries>;

  PolyFn(int variables, int order);

  // c * z_0^e0 z_1^e1
  static PolyFn monomial(int variables, int order, int e0, int e1 = 0);
  static PolyFn monomial(int variables, const TruncSeries& c, int e0, int e1 = 0);

  int variables() const noexcept { return variables_; }
  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const TruncSeries& c);

  PolyFn& operator+=(const PolyFn& rhs);
  PolyFn& operator-=(const PolyFn& rhs);
  friend PolyFn operator+(PolyFn a, const PolyFn& b) { return a += b; }
  friend PolyFn operator-(PolyFn a, const PolyFn& b) { return a -= b; }
  friend PolyFn operator*(const PolyFn& a, const PolyFn& b);
  friend PolyFn operator*(const TruncSeries& c, const PolyFn& p);
  friend bool operator==(const PolyFn& a, const PolyFn& b);

  PolyFn pow(unsigned k) const;

  std::string to_string() const;

 private:
  void check_compatible(const PolyFn& rhs) const;

  int variables_;
  int order_;
  Terms terms_;
};

/// Operator on PolyFn built symbolically from multiplication by z_i,
/// differentiation in z_i and scalar series. Nodes are immutable and shared.
class RepOperator {
 public:
  static RepOperator multiply_by(int variable);
  static RepOperator differentiate(int variable);
  static RepOperator scalar(const TruncSeries& c);
  // (1 + hbar)^{-z_i d/dz_i}: scales the z_i^k part by (1 + hbar)^{-k}.
  static RepOperator graded_power(int variable);
  // Swaps z_0 and z_1.
  static RepOperator swap();

  PolyFn apply(const PolyFn& f) const;

  // Composition: (a * b)(f) = a(b(f)).
  friend RepOperator operator*(const RepOperator& a, const RepOperator& b);
  friend RepOperator operator+(const RepOperator& a, const RepOperator& b);
  friend RepOperator operator-(const RepOperator& a, const RepOperator& b);

  std::string to_string() const;

  struct Node;

 private:
  explicit RepOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Generator images under rho_lambda on one variable z:
// a -> 1 + hbar, b -> d/dz, phi -> hbar z, psi -> lambda - z d/dz.
// Throws std::invalid_argument for any other name.
RepOperator rep_generator(std::string_view name, const Rational& lambda, int order);

struct CommutatorReport {
  std::vector<std::string> violations;
  int checked = 0;
  bool ok() const { return violations.empty(); }
};

// [phi, psi] = phi, [phi, b] = 1 - a, [psi, b] = b on z^k for k <= degree.
CommutatorReport commutator_check(const Rational& lambda, int order, int degree);

// (phi b + (a - 1) psi)(z^k) == lambda hbar z^k for k <= degree.
bool central_element_check(const Rational& lambda, int order, int degree);

// R-matrix action r = rho(R) P on f, three ways:
//   binomial double sum  sum hbar^{m+n}/n! binom(-z0 d0, m) (z0 d1)^n,
PolyFn r_action_double_sum(const PolyFn& f);
//   graded operator form (1 + hbar)^{-z0 d0} exp(hbar z0 d1),
PolyFn r_action_graded(const PolyFn& f);
//   substitution f(U^T z).
PolyFn r_action_substitution(const PolyFn& f);

// All three routes agree on z_0^p z_1^q (lambda = 0).
bool r_matrix_action_check(int p, int q, int order);

}  // namespace qalex

#endif  // QALEX_HOPF_REP_HPP
