#pragma once

#include <utility>
#include <vector>

#include "chiy/polynomial.hpp"

namespace chiy {

// Power series in one formal variable, truncated at a fixed order, with
// Polynomial-in-y coefficients. coeff(k) is the coefficient of the k-th
// power of the series variable.
class TruncSeries {
public:
  explicit TruncSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw DimensionError("TruncSeries: negative order");
  }
  TruncSeries(int order, std::vector<Polynomial> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1)
      throw DimensionError("TruncSeries: coefficient count must be order + 1");
  }

  int order() const { return order_; }
  const Polynomial& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, Polynomial v) { c_[static_cast<std::size_t>(k)] = std::move(v); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries out(a.order_);
    for (int k = 0; k <= a.order_; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries out(a.order_);
    for (int k = 0; k <= a.order_; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries out(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.coeff(i).is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j)
        out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
    return out;
  }
  friend TruncSeries operator*(const Polynomial& s, const TruncSeries& a) {
    TruncSeries out(a.order_);
    for (int k = 0; k <= a.order_; ++k) out.set_coeff(k, s * a.coeff(k));
    return out;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.set_coeff(0, Polynomial(1));
    return s;
  }

private:
  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) throw DimensionError("TruncSeries: mismatched truncation orders");
  }
  int order_;
  std::vector<Polynomial> c_;
};

// log(s) for s with constant coefficient 1, truncated at the stored order.
inline TruncSeries series_log(const TruncSeries& s) {
  if (s.coeff(0) != Polynomial(1))
    throw SeriesDomainError("series_log: constant coefficient must be 1");
  TruncSeries g = s - TruncSeries::one(s.order());
  TruncSeries out(s.order());
  TruncSeries power = TruncSeries::one(s.order());
  for (int k = 1; k <= s.order(); ++k) {
    power = power * g;
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    out = out + Polynomial(sign / Rational(k)) * power;
  }
  return out;
}

// exp(s) for s with constant coefficient 0.
inline TruncSeries series_exp(const TruncSeries& s) {
  if (!s.coeff(0).is_zero())
    throw SeriesDomainError("series_exp: constant coefficient must be 0");
  TruncSeries out = TruncSeries::one(s.order());
  TruncSeries power = TruncSeries::one(s.order());
  BigInt kfact = 1;
  for (int k = 1; k <= s.order(); ++k) {
    power = power * s;
    kfact *= k;
    out = out + Polynomial(Rational(BigInt(1), kfact)) * power;
  }
  return out;
}

// Multiplicative inverse of a series with constant coefficient 1.
inline TruncSeries series_inverse(const TruncSeries& s) {
  if (s.coeff(0) != Polynomial(1))
    throw SeriesDomainError("series_inverse: constant coefficient must be 1");
  TruncSeries inv(s.order());
  inv.set_coeff(0, Polynomial(1));
  for (int k = 1; k <= s.order(); ++k) {
    Polynomial acc;
    for (int j = 0; j < k; ++j) acc += inv.coeff(j) * s.coeff(k - j);
    inv.set_coeff(k, -acc);
  }
  return inv;
}

}  // namespace chiy
