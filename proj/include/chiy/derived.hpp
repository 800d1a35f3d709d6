#pragma once

#include <utility>
#include <vector>

#include "chiy/hirzebruch.hpp"
#include "chiy/linalg.hpp"
#include "chiy/varieties.hpp"

namespace chiy {

// p-th derived genus (1/p!) d^p/dy^p f. The normalization makes these the
// Taylor coefficients of f at any point: derived_genus(p, f)(a) = a_p(a).
inline Polynomial derived_genus(int p, const Polynomial& f) {
  if (p < 0) throw DimensionError("derived_genus: negative order");
  return f.derivative(p) / Rational(factorial(p));
}

// Same operator applied to every coefficient slot of a class.
inline GradedClass derived_class(int p, const GradedClass& cls) {
  if (p < 0) throw DimensionError("derived_class: negative order");
  const Rational inv_fact = Rational(BigInt(1), factorial(p));
  return cls.map_coeffs([&](const Polynomial& c) { return inv_fact * c.derivative(p); });
}

inline HomologyClass derived_class(int p, const HomologyClass& cls) {
  if (p < 0) throw DimensionError("derived_class: negative order");
  const Rational inv_fact = Rational(BigInt(1), factorial(p));
  return cls.map_coeffs([&](const Polynomial& c) { return inv_fact * c.derivative(p); });
}

// Taylor expansion of a polynomial around a center, f(y) = sum a_p (y - a)^p.
struct TaylorExpansion {
  Rational center;
  std::vector<Rational> coeffs;

  Polynomial reconstruct() const {
    const Polynomial shifted_y{-center, Rational(1)};  // (y - a)
    Polynomial out;
    Polynomial power(1);
    for (const Rational& a : coeffs) {
      out += a * power;
      power *= shifted_y;
    }
    return out;
  }
};

inline std::vector<Rational> taylor_via_derivatives(const Polynomial& f, const Rational& alpha) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(f.degree()) + 1);
  for (int p = 0; p <= f.degree(); ++p)
    out.push_back(f.derivative(p).evaluate(alpha) / Rational(factorial(p)));
  return out;
}

// a = M(alpha) b with M[p][k] = C(k,p) alpha^(k-p).
inline std::vector<Rational> taylor_via_matrix(const Polynomial& f, const Rational& alpha) {
  if (f.is_zero()) return {};
  const int n = f.degree();
  const ExactMatrix m = taylor_matrix(alpha, n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int p = 0; p <= n; ++p)
    for (int k = p; k <= n; ++k) out[static_cast<std::size_t>(p)] += m.at(p, k) * f.coeff(k);
  return out;
}

// Taylor coefficients by repeated differentiation, asserted against the
// change-of-basis matrix and the synthetic-shift routes.
inline TaylorExpansion taylor_coefficients(const Polynomial& f, const Rational& alpha) {
  TaylorExpansion out{alpha, taylor_via_derivatives(f, alpha)};
  if (out.coeffs != taylor_via_matrix(f, alpha) || out.coeffs != taylor_shift(f, alpha))
    throw Error("taylor_coefficients: routes disagree");
  return out;
}

namespace detail {

// Chern number of the product c_{i_1} ... c_{i_j}; indices equal to zero are
// unit factors, a negative index kills the whole monomial. Genuinely needed
// numbers must be present in the functional.
inline Rational chern_number_product(const ChernNumbers& numbers, std::vector<int> indices) {
  std::vector<int> key;
  for (int i : indices) {
    if (i < 0) return Rational(0);
    if (i > 0) key.push_back(i);
  }
  const Partition part = canonical_partition(std::move(key));
  if (!numbers.has(part))
    throw MissingDataError("libgober_wood: missing Chern number " + partition_str(part));
  return Rational(numbers.get(part));
}

}  // namespace detail

// Closed forms for the Taylor coefficients a_1..a_4 of chi_y at y = -1,
// evaluated verbatim with their printed leading signs. The a_4 form is known
// to disagree in sign with the derivative route (see the verification
// suite, which reports the discrepancy rather than patching it).
inline Rational libgober_wood(int p, int n, const ChernNumbers& numbers, const Rational& chi) {
  if (p < 1 || p > 4) throw DimensionError("libgober_wood: closed forms cover p in {1,2,3,4}");
  if (numbers.dim != n) throw DimensionError("libgober_wood: Chern numbers are for a different dimension");
  if (p == 4 && n < 4) throw DimensionError("libgober_wood: the a_4 form needs dimension at least 4");
  const Rational nn(n);

  switch (p) {
    case 1:
      return Rational(BigInt(-1), BigInt(2)) * nn * chi;
    case 2: {
      const Rational bracket =
          Rational(BigInt(1), BigInt(2)) * nn * Rational(3 * n - 5) * chi +
          detail::chern_number_product(numbers, {n - 1, 1});
      return Rational(BigInt(1), BigInt(12)) * bracket;
    }
    case 3: {
      const Rational bracket =
          Rational(BigInt(n) * (n - 2) * (n - 3), BigInt(2)) * chi +
          Rational(n - 2) * detail::chern_number_product(numbers, {n - 1, 1});
      return Rational(BigInt(-1), BigInt(24)) * bracket;
    }
    default: {
      const BigInt tail = BigInt(15) * n * n * n - BigInt(150) * n * n + BigInt(485) * n - 502;
      const Rational bracket =
          Rational(BigInt(n) * tail) * chi +
          Rational(4) * Rational(BigInt(15) * n * n - BigInt(85) * n + 108) *
              detail::chern_number_product(numbers, {n - 1, 1}) +
          Rational(8) * (detail::chern_number_product(numbers, {n - 2, 1, 1}) +
                         Rational(3) * detail::chern_number_product(numbers, {n - 2, 2})) -
          Rational(8) * (detail::chern_number_product(numbers, {n - 3, 1, 1, 1}) -
                         Rational(3) * detail::chern_number_product(numbers, {n - 3, 2, 1}) +
                         Rational(3) * detail::chern_number_product(numbers, {n - 3, 3}));
      return Rational(BigInt(-1), BigInt(5760)) * bracket;
    }
  }
}

// Taylor coefficients of the Poincare polynomial at t = -1: the Euler
// characteristic followed by the secondary and higher Euler characteristics.
inline std::vector<Rational> higher_euler(const HodgeDiamond& diamond) {
  return taylor_shift(poincare_polynomial(diamond), Rational(-1));
}

// Leibniz expansion of the p-th derived genus of a product:
// derived(p, f1 ... fm) = sum over i1+...+im = p of prod derived(i_j, f_j).
// (Equivalently, on unnormalized derivatives the usual binomial form.)
inline Polynomial leibniz_product(int p, const std::vector<Polynomial>& factors) {
  if (p < 0) throw DimensionError("leibniz_product: negative order");
  if (factors.empty()) return p == 0 ? Polynomial(1) : Polynomial();
  if (factors.size() == 1) return derived_genus(p, factors.front());
  const std::vector<Polynomial> rest(factors.begin() + 1, factors.end());
  Polynomial out;
  for (int i = 0; i <= p; ++i)
    out += derived_genus(i, factors.front()) * leibniz_product(p - i, rest);
  return out;
}

// Class-level Leibniz rule along cross products of homology classes.
inline HomologyClass leibniz_product(int p, const std::vector<HomologyClass>& factors) {
  if (p < 0) throw DimensionError("leibniz_product: negative order");
  if (factors.empty()) throw ArityError("leibniz_product: need at least one class factor");
  if (factors.size() == 1) return derived_class(p, factors.front());
  const std::vector<HomologyClass> rest(factors.begin() + 1, factors.end());
  HomologyClass out = cross_product(derived_class(p, factors.front()),
                                    leibniz_product(0, rest));
  for (int i = 0; i < p; ++i)
    out = out + cross_product(derived_class(i, factors.front()), leibniz_product(p - i, rest));
  return out;
}

}  // namespace chiy
