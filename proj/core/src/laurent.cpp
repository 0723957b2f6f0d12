#include "qalex/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "qalex/errors.hpp"

namespace qalex {

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(long constant) { add_term(0, Rational(constant)); }

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

Rational LaurentPoly::evaluate(const Rational& at) const {
  if (at == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw std::domain_error("evaluating negative powers of t at 0");
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e < 0 ? Rational(1 / at) : at;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= base;
    out += c * power;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly operator-(LaurentPoly p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << qalex::to_string(mag);
      continue;
    }
    if (mag != 1) os << qalex::to_string(mag) << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw NotInvertibleError("division by the zero Laurent polynomial");
  if (num.is_zero()) return {LaurentPoly(), LaurentPoly()};
  // num = t^a N(t), den = t^b D(t) with N(0), D(0) nonzero.
  const int a = num.min_degree();
  const int b = den.min_degree();
  LaurentPoly rem = num.shifted(-a);
  const LaurentPoly d = den.shifted(-b);
  const int dd = d.max_degree();
  const Rational lead = d.coeff(dd);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_degree() >= dd) {
    const int shift = rem.max_degree() - dd;
    const LaurentPoly term = LaurentPoly::monomial(shift, rem.coeff(rem.max_degree()) / lead);
    quot += term;
    rem -= term * d;
  }
  return {quot.shifted(a - b), rem.shifted(a)};
}

LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  auto [quot, rem] = laurent_divmod(num, den);
  if (!rem.is_zero())
    throw DivisibilityError("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
  return quot;
}

}  // namespace qalex
