#include "facschur/series.hpp"

#include "facschur/error.hpp"

#include <algorithm>

namespace facschur {

namespace {

long saturating_add(long a, long b) {
  return std::min(a + b, TruncatedSeries::kExact);
}

} // namespace

void TruncatedSeries::set(long exponent, Poly c) {
  if (exponent > order_) return;
  if (c.is_zero())
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(c);
}

TruncatedSeries TruncatedSeries::constant(const Poly& c, long order) {
  TruncatedSeries out(order);
  out.set(0, c);
  return out;
}

TruncatedSeries TruncatedSeries::linear(const Poly& c) {
  TruncatedSeries out;
  out.set(-1, Poly(1));
  out.set(0, -c);
  return out;
}

TruncatedSeries TruncatedSeries::inverse_linear(const Poly& c, long order) {
  TruncatedSeries out(order);
  Poly power(1);
  for (long e = 1; e <= order; ++e) {
    out.set(e, power);
    power *= c;
  }
  return out;
}

long TruncatedSeries::valuation() const {
  return coeffs_.empty() ? kExact : coeffs_.begin()->first;
}

Poly TruncatedSeries::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Poly{} : it->second;
}

TruncatedSeries TruncatedSeries::truncated(long order) const {
  TruncatedSeries out(std::min(order, order_));
  for (const auto& [e, c] : coeffs_) out.set(e, c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  order_ = std::min(order_, other.order_);
  for (auto it = coeffs_.upper_bound(order_); it != coeffs_.end();) it = coeffs_.erase(it);
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  order_ = std::min(order_, other.order_);
  for (auto it = coeffs_.upper_bound(order_); it != coeffs_.end();) it = coeffs_.erase(it);
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  long order = std::min(saturating_add(lhs.order_, rhs.valuation()),
                        saturating_add(rhs.order_, lhs.valuation()));
  TruncatedSeries out(order);
  std::map<long, Poly> acc;
  for (const auto& [le, lc] : lhs.coeffs_) {
    for (const auto& [re, rc] : rhs.coeffs_) {
      if (le + re > order) break;
      acc[le + re] += lc * rc;
    }
  }
  for (auto& [e, c] : acc) out.set(e, std::move(c));
  return out;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
  long order = std::min(order_, other.order_);
  auto lhs = truncated(order);
  auto rhs = other.truncated(order);
  return lhs.coeffs_ == rhs.coeffs_;
}

TruncatedSeries laurent_expand_inverse_linear(const Poly& c, long order) {
  if (c.contains_family(Family::T))
    throw PreconditionViolated("inverse_linear: constant term mentions t");
  return TruncatedSeries::inverse_linear(c, order);
}

} // namespace facschur
