#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "chiy/rational.hpp"

namespace chiy {

// Univariate polynomial over Rational, coefficients stored in ascending
// degree. The representation is canonical: no trailing zero coefficients,
// and the zero polynomial is the empty list (degree -1).
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT: implicit by design
    if (!constant.is_zero()) c_.push_back(constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of y^k (zero beyond the stored degree).
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient list padded with zeros to the given length.
  std::vector<Rational> padded_coeffs(int length) const {
    std::vector<Rational> out(static_cast<std::size_t>(length), Rational(0));
    for (std::size_t i = 0; i < c_.size() && i < out.size(); ++i) out[i] = c_[i];
    return out;
  }

  Rational evaluate(const Rational& a) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
  }

  // k-fold formal derivative; k = 0 is the identity.
  Polynomial derivative(int k = 1) const {
    Polynomial p = *this;
    for (int round = 0; round < k && !p.is_zero(); ++round) {
      std::vector<Rational> d;
      d.reserve(p.c_.size());
      for (std::size_t i = 1; i < p.c_.size(); ++i) d.push_back(Rational(BigInt(i)) * p.c_[i]);
      p = Polynomial(std::move(d));
    }
    return p;
  }

  friend Polynomial operator-(const Polynomial& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -p.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }
  friend Polynomial operator/(const Polynomial& p, const Rational& s) {
    if (s.is_zero()) throw Error("Polynomial: division by zero scalar");
    return s.reciprocal() * p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str(const std::string& var = "y") const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) throw DimensionError("pow: negative polynomial exponent");
  Polynomial result{Rational(1)};
  for (int i = 0; i < k; ++i) result *= p;
  return result;
}

inline Rational evaluate(const Polynomial& p, const Rational& a) { return p.evaluate(a); }

// Coefficients [a_0, ..., a_n] of the expansion p(y) = sum a_k (y - alpha)^k,
// computed by repeated synthetic division by (y - alpha). The list has length
// degree + 1 (empty for the zero polynomial); expanding it back reproduces p.
inline std::vector<Rational> taylor_shift(const Polynomial& p, const Rational& alpha) {
  std::vector<Rational> work = p.coeffs();
  std::vector<Rational> out;
  out.reserve(work.size());
  while (!work.empty()) {
    // Divide by (y - alpha): Horner pass leaves the remainder in front.
    Rational carry = 0;
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      carry = *it + alpha * carry;
      *it = carry;
    }
    out.push_back(work.front());
    work.erase(work.begin());
  }
  return out;
}

inline std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1) && k > 0;
    if (!unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace chiy
