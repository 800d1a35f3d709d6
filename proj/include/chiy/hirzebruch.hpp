#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chiy/graded.hpp"
#include "chiy/linalg.hpp"

namespace chiy {

// Bernoulli numbers in the convention with B_1 = +1/2, so that
// u / (1 - e^(-u)) = sum_k B_k u^k / k!. Computed by the usual recurrence
// and cached per thread.
inline Rational bernoulli_plus(int k) {
  thread_local std::vector<Rational> cache{Rational(1)};
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
    cache.push_back(-acc / Rational(BigInt(m + 1)));
  }
  Rational b = cache[static_cast<std::size_t>(k)];
  if (k == 1) b = -b;  // flip to the +1/2 convention
  return b;
}

// The normalized series Q_y(a) = a(1+y) / (1 - e^(-a(1+y))) - a*y, the power
// series whose multiplicative class is the Hirzebruch class T_y.
inline TruncSeries q_series(int order) {
  TruncSeries s(order);
  const Polynomial one_plus_y{Rational(1), Rational(1)};
  Polynomial u_pow(1);  // (1+y)^k
  for (int k = 0; k <= order; ++k) {
    s.set_coeff(k, (bernoulli_plus(k) / Rational(factorial(k))) * u_pow);
    u_pow *= one_plus_y;
  }
  if (order >= 1) s.set_coeff(1, s.coeff(1) - Polynomial::variable());
  return s;
}

// 1 + a, the series of the total Chern class.
inline TruncSeries chern_series(int order) {
  TruncSeries s = TruncSeries::one(order);
  if (order >= 1) s.set_coeff(1, Polynomial(1));
  return s;
}

// a / (1 - e^(-a)) by direct series division; independent of the Bernoulli
// route that builds q_series.
inline TruncSeries todd_series(int order) {
  // (1 - e^(-a)) / a = sum_{k>=0} (-1)^k a^k / (k+1)!
  TruncSeries denom(order);
  for (int k = 0; k <= order; ++k) {
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    denom.set_coeff(k, Polynomial(sign / Rational(factorial(k + 1))));
  }
  return series_inverse(denom);
}

// a / tanh(a) = cosh(a) / (sinh(a) / a), the series of the L-class.
inline TruncSeries l_series(int order) {
  TruncSeries cosh_s(order);
  TruncSeries sinh_over_a(order);
  for (int k = 0; k <= order; ++k) {
    if (k % 2 == 0) {
      cosh_s.set_coeff(k, Polynomial(Rational(BigInt(1), factorial(k))));
      sinh_over_a.set_coeff(k, Polynomial(Rational(BigInt(1), factorial(k + 1))));
    }
  }
  return cosh_s * series_inverse(sinh_over_a);
}

// Hirzebruch class of a bundle with the given total Chern class: the genus
// class of Q_y evaluated on its graded pieces. Passing the identity total
// class 1 + g_1 + ... + g_n yields the universal T_y in the generators.
inline GradedClass t_y_class(const GradedClass& tangent_total, int n) {
  if (tangent_total.dim_bound() != n)
    throw DimensionError("t_y_class: class/truncation mismatch");
  if (tangent_total.coeff({}) != Polynomial(1))
    throw SeriesDomainError("t_y_class: total Chern class must start with 1");
  if (n == 0) return GradedClass::unit(0);
  std::vector<GradedClass> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values.push_back(tangent_total.weight_part(i));
  return evaluate_on(genus_class(q_series(n), n), values);
}

// The y-free class multiplying y^p.
inline GradedClass t_p_component(const GradedClass& cls, int p) {
  return cls.map_coeffs([&](const Polynomial& c) { return Polynomial(c.coeff(p)); });
}

// Substitute y = y0 in every coefficient.
inline GradedClass specialize(const GradedClass& cls, const Rational& y0) {
  return cls.map_coeffs([&](const Polynomial& c) { return Polynomial(c.evaluate(y0)); });
}

// (even, odd) = ((S1 + S-1)/2, (S1 - S-1)/2) where S is specialization;
// these collect the even and odd T^p components respectively.
inline std::pair<GradedClass, GradedClass> even_odd_parts(const GradedClass& cls) {
  const GradedClass at_plus = specialize(cls, 1);
  const GradedClass at_minus = specialize(cls, -1);
  const Rational half(BigInt(1), BigInt(2));
  return {half * (at_plus + at_minus), half * (at_plus - at_minus)};
}

// Degree-n integration functional: partition of n -> integer. Keys of other
// weights are rejected; absent keys integrate to zero.
struct ChernNumbers {
  int dim = 0;
  std::map<Partition, BigInt> numbers;

  ChernNumbers() = default;
  ChernNumbers(int n, std::map<Partition, BigInt> values) : dim(n), numbers(std::move(values)) {
    for (const auto& [key, value] : numbers)
      if (!is_valid_partition(key) || weight(key) != dim)
        throw DimensionError("ChernNumbers: key " + partition_str(key) +
                             " is not a partition of " + std::to_string(dim));
  }

  BigInt get(const Partition& key) const {
    const auto it = numbers.find(key);
    return it == numbers.end() ? BigInt(0) : it->second;
  }
  bool has(const Partition& key) const { return numbers.count(key) > 0; }
};

// Pairs the weight-n part of a class against the integration functional.
inline Polynomial integrate(const ChernNumbers& numbers, const GradedClass& cls) {
  if (cls.dim_bound() != numbers.dim)
    throw DimensionError("integrate: class and Chern numbers disagree on the dimension");
  Polynomial out;
  for (const auto& [key, coeff] : cls.terms()) {
    if (weight(key) != numbers.dim) continue;
    const BigInt v = numbers.get(key);
    if (v != 0) out += Rational(v) * coeff;
  }
  return out;
}

// Bundle data as consumed by the Riemann-Roch pairing: rank plus the total
// Chern class written in the same generators as the tangent class.
struct BundleData {
  int rank = 0;
  GradedClass total_chern{0};
};

// chi_y(X, E) = integral of T_y(TX) . ch_(1+y)(E), with the trivial line
// bundle factor 1 when E is absent.
inline Polynomial chi_y_ghrr(const GradedClass& tangent_total, const ChernNumbers& numbers,
                             const std::optional<BundleData>& bundle = std::nullopt) {
  const int n = numbers.dim;
  GradedClass cls = t_y_class(tangent_total, n);
  if (bundle) {
    const Polynomial one_plus_y{Rational(1), Rational(1)};
    cls *= twisted_chern_character(bundle->rank, bundle->total_chern, n, one_plus_y);
  }
  return integrate(numbers, cls);
}

// Homology class with Polynomial-in-y coefficients, graded by the complex
// degree of cycles, one index per product factor. For a single space of
// dimension n the key {d} is the component in H_{2d}; for products the key
// lists one degree per factor.
class HomologyClass {
public:
  explicit HomologyClass(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
    for (int d : dims_)
      if (d < 0) throw DimensionError("HomologyClass: negative factor dimension");
  }

  const std::vector<int>& factor_dims() const { return dims_; }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }
  const std::map<std::vector<int>, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Polynomial component(const std::vector<int>& key) const {
    const auto it = comps_.find(key);
    return it == comps_.end() ? Polynomial() : it->second;
  }

  void add_component(const std::vector<int>& key, const Polynomial& value) {
    if (key.size() != dims_.size())
      throw DimensionError("HomologyClass: key arity does not match the factor count");
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] < 0 || key[i] > dims_[i])
        throw DimensionError("HomologyClass: degree outside [0, dim]");
    if (value.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  template <typename Fn>
  HomologyClass map_coeffs(Fn&& fn) const {
    HomologyClass out(dims_);
    for (const auto& [key, value] : comps_) out.add_component(key, fn(value));
    return out;
  }

  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    if (a.dims_ != b.dims_) throw DimensionError("HomologyClass: mismatched factor shapes");
    HomologyClass out = a;
    for (const auto& [key, value] : b.comps_) out.add_component(key, value);
    return out;
  }
  friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
    return a + b.map_coeffs([](const Polynomial& p) { return -p; });
  }
  friend HomologyClass operator*(const Polynomial& s, const HomologyClass& a) {
    return a.map_coeffs([&](const Polynomial& p) { return s * p; });
  }
  friend HomologyClass operator*(const Rational& s, const HomologyClass& a) {
    return Polynomial(s) * a;
  }

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.dims_ == b.dims_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const HomologyClass& a, const HomologyClass& b) { return !(a == b); }

private:
  std::vector<int> dims_;
  std::map<std::vector<int>, Polynomial> comps_;
};

// Cross product: concatenates the factor shapes and multiplies coefficients.
inline HomologyClass cross_product(const HomologyClass& a, const HomologyClass& b) {
  std::vector<int> dims = a.factor_dims();
  dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  HomologyClass out(std::move(dims));
  for (const auto& [ka, va] : a.components())
    for (const auto& [kb, vb] : b.components()) {
      std::vector<int> key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_component(key, va * vb);
    }
  return out;
}

inline HomologyClass specialize(const HomologyClass& cls, const Rational& y0) {
  return cls.map_coeffs([&](const Polynomial& c) { return Polynomial(c.evaluate(y0)); });
}

// Caps a cohomology class written in powers of a degree-one generator against
// the fundamental class of an n-fold: the weight-i piece lands in complex
// homology degree n - i. Terms must be supported on pure powers of g_1.
inline HomologyClass cap_fundamental(const GradedClass& h_class, int n) {
  if (h_class.dim_bound() != n) throw DimensionError("cap_fundamental: dimension mismatch");
  HomologyClass out(std::vector<int>{n});
  for (const auto& [key, coeff] : h_class.terms()) {
    for (int part : key)
      if (part != 1)
        throw UnsupportedModelError("cap_fundamental: class is not a polynomial in the degree-one generator");
    out.add_component({n - weight(key)}, coeff);
  }
  return out;
}

}  // namespace chiy
