#ifndef QALEX_MATRIX_HPP
#define QALEX_MATRIX_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qalex/errors.hpp"

namespace qalex {

// Coefficient-ring contract shared by LaurentPoly and TruncSeries.
template <class R>
concept CoefficientRing = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { one_like(a) } -> std::convertible_to<R>;
};

/// Dense row-major matrix over a coefficient ring.
///
/// The ring's zero is carried along so that empty matrices (and empty inner
/// products) still know which ring they live in; for truncated series this
/// fixes the truncation order.
template <CoefficientRing R>
class RingMatrix {
 public:
  RingMatrix(std::size_t rows, std::size_t cols, R zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), entries_(rows * cols, zero_) {}

  static RingMatrix identity(std::size_t n, const R& zero) {
    RingMatrix m(n, n, zero);
    const R one = one_like(zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const R& zero() const noexcept { return zero_; }
  const std::vector<R>& entries() const noexcept { return entries_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RingMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionError("block out of range");
    RingMatrix out(nrows, ncols, zero_);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
  }

  // Matrix with row `r` and column `c` deleted.
  RingMatrix minor(std::size_t r, std::size_t c) const {
    RingMatrix out(rows_ - 1, cols_ - 1, zero_);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  RingMatrix transposed() const {
    RingMatrix out(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<std::invoke_result_t<F, const R&>>;
    RingMatrix<S> out(rows_, cols_, f(zero_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  RingMatrix& operator+=(const RingMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  RingMatrix& operator-=(const RingMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }

  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    RingMatrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend RingMatrix operator*(const R& s, RingMatrix m) {
    for (auto& e : m.entries_) e = s * e;
    return m;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_same_shape(const RingMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  R zero_;
  std::vector<R> entries_;
};

}  // namespace qalex

#endif  // QALEX_MATRIX_HPP
