#include "qalex/gaussian.hpp"

#include <algorithm>
#include <string>

#include "qalex/alexander.hpp"
#include "qalex/burau.hpp"
#include "qalex/errors.hpp"

namespace qalex {

void GaussianState::validate() const {
  if (!form.is_square() || form.rows() != open_slots.size())
    throw DimensionError("Gaussian state form does not match its open slots");
}

GaussianState make_state(SeriesMatrix form, TruncSeries prefactor) {
  std::vector<int> slots(form.rows());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
  GaussianState s{std::move(prefactor), std::move(form), std::move(slots)};
  s.validate();
  return s;
}

SeriesMatrix crossing_kernel(int sign, int order) {
  if (sign != 1 && sign != -1) throw PreconditionError("crossing sign must be +1 or -1");
  SeriesMatrix u = SeriesMatrix::identity(2, TruncSeries(order));
  multiply_by_generator(u, sign, one_plus_hbar_pow(-1, order), one_plus_hbar_pow(1, order));
  return u;
}

GaussianState gaussian_contract(const GaussianState& state, int slot) {
  state.validate();
  const auto it = std::find(state.open_slots.begin(), state.open_slots.end(), slot);
  if (it == state.open_slots.end()) throw PreconditionError("slot " + std::to_string(slot) + " is not open");
  const auto s = static_cast<std::size_t>(it - state.open_slots.begin());
  const SeriesMatrix& m = state.form;

  const TruncSeries w = one_like(m.zero()) - m(s, s);
  if (!w.is_unit())
    throw SingularContractionError("pivot 1 - M[" + std::to_string(slot) + "," + std::to_string(slot) +
                                   "] has zero constant term");
  const TruncSeries w_inv = series_inverse(w);

  const std::size_t n = m.rows();
  SeriesMatrix next(n - 1, n - 1, m.zero());
  std::vector<int> slots;
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == s) continue;
    slots.push_back(state.open_slots[i]);
    const TruncSeries left = m(i, s) * w_inv;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == s) continue;
      next(oi, oj++) = m(i, j) + left * m(s, j);
    }
    ++oi;
  }
  return {state.prefactor * w_inv, std::move(next), std::move(slots)};
}

GaussianState gaussian_contract_all(GaussianState state, const std::vector<int>& slots) {
  for (int slot : slots) state = gaussian_contract(state, slot);
  return state;
}

SeriesMatrix burau_kernel(const BraidWord& b, int order) {
  const SeriesMatrix u = crossing_kernel(1, order);
  const SeriesMatrix u_inv = crossing_kernel(-1, order);
  // U = [[1 - t, t], [1, 0]] and U^{-1} = [[0, 1], [t^{-1}, 1 - t^{-1}]]
  const TruncSeries& t = u(0, 1);
  const TruncSeries& t_inv = u_inv(1, 0);
  SeriesMatrix m = SeriesMatrix::identity(static_cast<std::size_t>(b.strands()), TruncSeries(order));
  for (int l : b.letters()) multiply_by_generator(m, l, t, t_inv);
  return m;
}

GaussianState evaluate_long_knot(const BraidWord& b, int order) {
  if (!is_knot_closure(b)) throw PreconditionError("closure of '" + b.to_string() + "' is not a knot");
  GaussianState state = make_state(burau_kernel(b, order), TruncSeries::one(order));
  std::vector<int> closed(static_cast<std::size_t>(b.strands() - 1));
  for (std::size_t i = 0; i < closed.size(); ++i) closed[i] = static_cast<int>(i);
  return gaussian_contract_all(std::move(state), closed);
}

bool schur_identity_check(const BraidWord& b) {
  const BurauBlocks blocks = block_decompose(b);
  const std::size_t k = blocks.hat.rows();
  const LaurentMatrix w = laurent_identity(k) - blocks.hat;
  const LaurentMatrix adj = laurent_adjugate(w);
  LaurentPoly lhs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) lhs += blocks.c_row[i] * adj(i, j) * blocks.b_col[j];
  return lhs == (LaurentPoly(1) - blocks.d) * laurent_det(w);
}

TruncSeries writhe_correction(const BraidWord& b, int order) {
  const int writhe = exponent_sum(b) + b.strands() - 1;
  if (writhe % 2 != 0) throw ConsistencyError("long-knot writhe of '" + b.to_string() + "' is odd");
  return one_plus_hbar_pow(-writhe / 2, order);
}

InvariantSeries universal_invariant(const BraidWord& b, int order) {
  const GaussianState state = evaluate_long_knot(b, order);
  if (!(state.form(0, 0) == TruncSeries::one(order)))
    throw ConsistencyError("long-knot kernel of '" + b.to_string() + "' is not proportional to the identity: " +
                           state.form(0, 0).to_string());
  return {order, writhe_correction(b, order) * state.prefactor};
}

TruncSeries alexander_at_a(const BraidWord& b, int order) {
  // t_to_hbar sends t^{-1} to a = 1 + hbar.
  return t_to_hbar(alexander_thm2(b).poly.substitute_power(-1), order);
}

bool theorem1_check(const BraidWord& b, int order) {
  return universal_invariant(b, order).series == series_inverse(alexander_at_a(b, order));
}

}  // namespace qalex
