#include "qalex/linalg.hpp"

#include <utility>

namespace qalex {

LaurentPoly laurent_det(const LaurentMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);

  // Clear negative/leading powers row by row: det(m) = t^{shift} det(a).
  LaurentMatrix a(n, n, LaurentPoly());
  int shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    int low = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      low = any ? std::min(low, m(i, j).min_degree()) : m(i, j).min_degree();
      any = true;
    }
    if (!any) return LaurentPoly();
    shift += low;
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).shifted(-low);
  }

  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = laurent_exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  LaurentPoly det = a(n - 1, n - 1).shifted(shift);
  return negate ? -det : det;
}

LaurentMatrix laurent_adjugate(const LaurentMatrix& m) {
  if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  LaurentMatrix adj(n, n, LaurentPoly());
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = laurent_det(m.minor(i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

SeriesMatrix t_to_hbar(const LaurentMatrix& m, int order) {
  return m.map([order](const LaurentPoly& p) { return t_to_hbar(p, order); });
}

}  // namespace qalex
