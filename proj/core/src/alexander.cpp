#include "qalex/alexander.hpp"

#include <string>

#include "qalex/burau.hpp"
#include "qalex/errors.hpp"

namespace qalex {

namespace {

void require_knot(const BraidWord& b) {
  const int components = component_count(b);
  if (components != 1)
    throw PreconditionError("closure of '" + b.to_string() + "' has " + std::to_string(components) +
                            " components, not a knot");
}

int half_exponent(int numerator, const char* what) {
  if (numerator % 2 != 0) throw ConsistencyError(std::string("odd exponent in ") + what);
  return numerator / 2;
}

LaurentMatrix minus_identity(LaurentMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= LaurentPoly(1);
  return m;
}

}  // namespace

AlexanderPoly alexander_thm2(const BraidWord& b) {
  require_knot(b);
  const int n = b.strands();
  if (n == 1) return {LaurentPoly(1)};
  const BurauBlocks blocks = block_decompose(b);
  const LaurentMatrix w = laurent_identity(blocks.hat.rows()) - blocks.hat;
  const int shift = half_exponent(1 - n - exponent_sum(b), "Burau minor prefactor");
  return {laurent_det(w).shifted(shift)};
}

AlexanderPoly alexander_reduced(const BraidWord& b) {
  require_knot(b);
  const int n = b.strands();
  if (n == 1) return {LaurentPoly(1)};
  const ReducedBurau red = reduced_burau(b);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly num = (t - LaurentPoly(1)) * laurent_det(minus_identity(red.matrix));
  const LaurentPoly den = t.pow(static_cast<unsigned>(n)) - LaurentPoly(1);
  LaurentPoly delta = laurent_exact_div(num, den);
  delta = delta.shifted(half_exponent(n - 1 - exponent_sum(b), "reduced Burau prefactor"));
  return {(n - 1) % 2 == 0 ? delta : -delta};
}

bool lemma2_check(const BraidWord& b) {
  if (b.strands() < 2) throw PreconditionError("lemma2_check needs at least two strands");
  const int n = b.strands();
  const LaurentPoly hat_det = laurent_det(minus_identity(block_decompose(b).hat));
  const LaurentPoly red_det = laurent_det(minus_identity(reduced_burau(b).matrix));
  const LaurentPoly lhs = (LaurentPoly::monomial(-n) - LaurentPoly(1)) * hat_det;
  const LaurentPoly rhs = (LaurentPoly::monomial(-1) - LaurentPoly(1)) * red_det;
  return lhs == rhs;
}

LaurentPoly substitute(const AlexanderPoly& p, int k) {
  if (k < 1) throw PreconditionError("substitute needs k >= 1");
  return p.poly.substitute_power(k);
}

}  // namespace qalex
