#include "qalex/series.hpp"

#include <sstream>
#include <stdexcept>

#include "qalex/errors.hpp"

namespace qalex {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries TruncSeries::constant(int order, const Rational& c) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::hbar(int order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void TruncSeries::check_order(const TruncSeries& rhs) const {
  if (order_ != rhs.order_)
    throw DimensionError("series of orders " + std::to_string(order_) + " and " + std::to_string(rhs.order_) +
                         " cannot be combined");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  check_order(rhs);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator-(TruncSeries s) {
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << qalex::to_string(mag);
      continue;
    }
    if (mag != 1) os << qalex::to_string(mag) << '*';
    os << 'h';
    if (k != 1) os << '^' << k;
  }
  if (first) os << '0';
  os << " + O(h^" << order_ + 1 << ')';
  return os.str();
}

TruncSeries series_inverse(const TruncSeries& s) {
  if (!s.is_unit()) throw NotInvertibleError("series with zero constant term is not invertible");
  const auto& a = s.coeffs();
  const std::size_t len = a.size();
  std::vector<Rational> b(len, Rational(0));
  const Rational a0_inv = 1 / a[0];
  b[0] = a0_inv;
  // sum_{j<=k} a_j b_{k-j} = 0 for k >= 1
  for (std::size_t k = 1; k < len; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * a0_inv;
  }
  return TruncSeries(s.order(), std::move(b));
}

TruncSeries series_divide(const TruncSeries& a, const TruncSeries& b) { return a * series_inverse(b); }

TruncSeries one_plus_hbar_pow(int e, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = binomial(Rational(e), k);
  return TruncSeries(order, std::move(c));
}

TruncSeries t_to_hbar(const LaurentPoly& p, int order) {
  TruncSeries out(order);
  for (const auto& [e, c] : p.terms()) out += c * one_plus_hbar_pow(-e, order);
  return out;
}

}  // namespace qalex
