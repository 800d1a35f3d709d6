#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "chiy/errors.hpp"

namespace chiy {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always kept in lowest terms with a positive
// denominator; zero is 0/1. Backed by boost::multiprecision, which
// maintains exactly that canonical form.
class Rational {
public:
  Rational() = default;
  Rational(int v) : v_(v) {}                 // NOLINT: implicit by design
  Rational(long long v) : v_(v) {}           // NOLINT
  Rational(const BigInt& v) : v_(v) {}       // NOLINT
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw Error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = Rep(std::move(num), std::move(den));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational reciprocal() const {
    if (is_zero()) throw Error("Rational: reciprocal of zero");
    return Rational(denominator(), numerator());
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Renders "p" for integers and "p/q" otherwise, in lowest terms.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  // Accepts an optionally signed integer literal "p" or a fraction "p/q".
  static Rational from_string(std::string_view text);

  friend Rational operator-(const Rational& a) { return Rational(Rep(-a.v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    return Rational(Rep(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep rep) : v_(std::move(rep)) {}
  Rep v_;
};

// a^k for integer k (negative k inverts; 0^0 = 1).
inline Rational pow(const Rational& a, int k) {
  if (k < 0) return pow(a.reciprocal(), -k);
  Rational result = 1;
  Rational base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// C(n, k); zero outside the triangle.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;  // exact: a product of j consecutive integers is divisible by j!
  }
  return num;
}

inline Rational Rational::from_string(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits in rational literal");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw ParseError("invalid rational literal: '" + std::string(s) + "'");
    }
    const BigInt magnitude{std::string(s.substr(i))};
    return s[0] == '-' ? BigInt(-magnitude) : magnitude;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal");
  return Rational(num, den);
}

}  // namespace chiy
