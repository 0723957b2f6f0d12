#ifndef QALEX_SERIES_HPP
#define QALEX_SERIES_HPP

#include <string>
#include <vector>

#include "qalex/laurent.hpp"
#include "qalex/rational.hpp"

namespace qalex {

inline constexpr int kDefaultOrder = 8;

/// Power series in hbar truncated at a fixed order N: coefficients of
/// hbar^0 ... hbar^N, everything of higher degree is discarded.
class TruncSeries {
 public:
  // Zero series of the given order (order >= 0).
  explicit TruncSeries(int order);
  // Pads with zeros or truncates `coeffs` to order + 1 entries.
  TruncSeries(int order, std::vector<Rational> coeffs);

  static TruncSeries constant(int order, const Rational& c);
  static TruncSeries one(int order) { return constant(order, 1); }
  static TruncSeries hbar(int order);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  bool is_zero() const;
  bool is_unit() const { return coeffs_.front() != 0; }

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const TruncSeries& rhs) { return lhs *= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const Rational& c) { return lhs *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries rhs) { return rhs *= c; }
  friend TruncSeries operator-(TruncSeries s);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  // "1 - h^2 + h^3 + O(h^5)"
  std::string to_string() const;

 private:
  void check_order(const TruncSeries& rhs) const;

  int order_;
  std::vector<Rational> coeffs_;
};

inline TruncSeries one_like(const TruncSeries& s) { return TruncSeries::one(s.order()); }

// Multiplicative inverse mod hbar^{N+1}. Throws NotInvertibleError if the
// constant term vanishes.
TruncSeries series_inverse(const TruncSeries& s);

// a / b for a unit b.
TruncSeries series_divide(const TruncSeries& a, const TruncSeries& b);

// (1 + hbar)^e for any integer e, truncated at `order`.
TruncSeries one_plus_hbar_pow(int e, int order);

// Substitutes t = (1 + hbar)^{-1}, i.e. t^e -> (1 + hbar)^{-e}.
TruncSeries t_to_hbar(const LaurentPoly& p, int order);

}  // namespace qalex

#endif  // QALEX_SERIES_HPP
