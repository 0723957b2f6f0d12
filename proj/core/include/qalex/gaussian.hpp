#ifndef QALEX_GAUSSIAN_HPP
#define QALEX_GAUSSIAN_HPP

#include <vector>

#include "qalex/braid.hpp"
#include "qalex/linalg.hpp"
#include "qalex/series.hpp"

namespace qalex {

/// Gaussian kernel  prefactor * exp( sum_{i,j} conj(w_i) form(i,j) v_j )
/// over the currently open strand slots, with w the outgoing and v the
/// incoming colours of slot i. Closing a slot identifies its outgoing and
/// incoming colour and integrates it out.
struct GaussianState {
  TruncSeries prefactor;
  SeriesMatrix form;
  std::vector<int> open_slots;  // slot ids, one per row/column of `form`

  // Throws DimensionError unless form is square with one row per slot.
  void validate() const;
  int order() const { return prefactor.order(); }
};

// Builds a state with slots 0 .. form.rows()-1 and the given prefactor.
GaussianState make_state(SeriesMatrix form, TruncSeries prefactor);

// Crossing kernel matrix: U for sign +1 and U^{-1} for sign -1, entries as
// series in hbar with t = 1/(1 + hbar).
SeriesMatrix crossing_kernel(int sign, int order);

/// Integrates out one slot with the closed-form Gaussian integral.
///
/// With W = 1 - M[s,s] a unit, the prefactor is divided by W and the
/// remaining form becomes M[i,j] + M[i,s] M[s,j] / W. Throws
/// SingularContractionError when W has zero constant term and
/// PreconditionError when `slot` is not open.
GaussianState gaussian_contract(const GaussianState& state, int slot);

// Contracts each slot of `slots` in the given order.
GaussianState gaussian_contract_all(GaussianState state, const std::vector<int>& slots);

// Unreduced Burau kernel of `b` over truncated series, built as the product
// of crossing kernels.
SeriesMatrix burau_kernel(const BraidWord& b, int order);

/// Long-knot evaluation: the Burau kernel of b with strands 1 .. n-1 closed.
/// The remaining slot is strand n; its prefactor is 1/det(I - hat(beta)) and
/// its form entry is d + c (I - hat)^{-1} b. Requires a knot closure.
GaussianState evaluate_long_knot(const BraidWord& b, int order);

// c * adj(I - hat) * b == (1 - d) det(I - hat), exactly over Q[t, t^{-1}].
bool schur_identity_check(const BraidWord& b);

// Series of t^{(g + n - 1)/2}. Throws ConsistencyError for odd g + n - 1.
TruncSeries writhe_correction(const BraidWord& b, int order);

struct InvariantSeries {
  int order;
  TruncSeries series;
};

/// Scalar image of the universal invariant as a series in hbar = a - 1:
/// writhe correction times the long-knot prefactor. Throws ConsistencyError
/// if the long-knot form entry is not exactly 1.
InvariantSeries universal_invariant(const BraidWord& b, int order = kDefaultOrder);

// Delta_K evaluated at a = 1 + hbar, as a series.
TruncSeries alexander_at_a(const BraidWord& b, int order);

// universal_invariant(b) == 1 / Delta_K(1 + hbar) mod hbar^{N+1}.
bool theorem1_check(const BraidWord& b, int order = kDefaultOrder);

}  // namespace qalex

#endif  // QALEX_GAUSSIAN_HPP
