#pragma once

#include "facschur/poly.hpp"

#include <map>

namespace facschur {

// Laurent series in s = 1/t with polynomial coefficients free of t. Every
// series carries the highest exponent through which its coefficients are
// known exactly; finite Laurent polynomials in t are exact to all orders.
class TruncatedSeries {
public:
  static constexpr long kExact = 1L << 40;

  // The zero series known through s^order.
  explicit TruncatedSeries(long order = kExact) : order_(order) {}

  static TruncatedSeries constant(const Poly& c, long order = kExact);
  // t - c = s^{-1} - c, exact.
  static TruncatedSeries linear(const Poly& c);
  // 1/(t - c) = sum_{j>=0} c^j s^{j+1}, through s^order.
  static TruncatedSeries inverse_linear(const Poly& c, long order);

  long order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  // Lowest exponent with a nonzero coefficient (kExact for zero).
  long valuation() const;
  Poly coefficient(long exponent) const;
  const std::map<long, Poly>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(long order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  // Coefficientwise equality through the smaller of the two known orders.
  bool agrees_with(const TruncatedSeries& other) const;

private:
  void set(long exponent, Poly c);

  std::map<long, Poly> coeffs_;
  long order_;
};

// Expansion of 1/(t - c) to order N; c must not mention t.
TruncatedSeries laurent_expand_inverse_linear(const Poly& c, long order);

} // namespace facschur
