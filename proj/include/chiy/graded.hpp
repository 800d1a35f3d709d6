#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chiy/partition.hpp"
#include "chiy/polynomial.hpp"
#include "chiy/series.hpp"

namespace chiy {

// Element of the truncated graded polynomial ring Q[y][g_1, ..., g_n] with
// deg g_i = i, all terms of weight > n discarded. Terms are keyed by the
// partition listing which generators the monomial multiplies; the empty
// partition keys the weight-zero part. Zero coefficients are never stored.
//
// The same ring carries universal classes in the Chern generators c_i of a
// rank-n bundle and, using only g_1, h-power expansions on a variety whose
// relevant cohomology a single hyperplane class generates.
class GradedClass {
public:
  explicit GradedClass(int dim_bound) : n_(dim_bound) {
    if (dim_bound < 0) throw DimensionError("GradedClass: negative dimension bound");
  }

  static GradedClass unit(int n) {
    GradedClass g(n);
    g.add_term({}, Polynomial(1));
    return g;
  }

  // The weight-i generator as a ring element; i must not exceed the bound.
  static GradedClass generator(int n, int i) {
    if (i < 1 || i > n) throw DimensionError("GradedClass: generator weight out of range");
    GradedClass g(n);
    g.add_term({i}, Polynomial(1));
    return g;
  }

  int dim_bound() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Polynomial>& terms() const { return terms_; }

  Polynomial coeff(const Partition& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Polynomial() : it->second;
  }

  void add_term(const Partition& key, const Polynomial& value) {
    if (!is_valid_partition(key)) throw DimensionError("GradedClass: malformed partition key");
    if (weight(key) > n_) return;  // truncated away
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GradedClass weight_part(int w) const {
    GradedClass out(n_);
    for (const auto& [key, value] : terms_)
      if (weight(key) == w) out.add_term(key, value);
    return out;
  }

  int max_weight() const {
    int w = 0;
    for (const auto& [key, value] : terms_) w = std::max(w, weight(key));
    return w;
  }

  // Applies fn to every coefficient; drops terms that map to zero.
  template <typename Fn>
  GradedClass map_coeffs(Fn&& fn) const {
    GradedClass out(n_);
    for (const auto& [key, value] : terms_) out.add_term(key, fn(value));
    return out;
  }

  friend GradedClass operator-(const GradedClass& a) {
    return a.map_coeffs([](const Polynomial& p) { return -p; });
  }
  friend GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    check_dims(a, b);
    GradedClass out = a;
    for (const auto& [key, value] : b.terms_) out.add_term(key, value);
    return out;
  }
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    check_dims(a, b);
    GradedClass out(a.n_);
    for (const auto& [ka, va] : a.terms_) {
      const int wa = weight(ka);
      for (const auto& [kb, vb] : b.terms_) {
        if (wa + weight(kb) > a.n_) continue;
        out.add_term(merge_partitions(ka, kb), va * vb);
      }
    }
    return out;
  }
  friend GradedClass operator*(const Polynomial& s, const GradedClass& a) {
    return a.map_coeffs([&](const Polynomial& p) { return s * p; });
  }
  friend GradedClass operator*(const GradedClass& a, const Polynomial& s) { return s * a; }
  friend GradedClass operator*(const Rational& s, const GradedClass& a) { return Polynomial(s) * a; }
  friend GradedClass operator*(const GradedClass& a, const Rational& s) { return Polynomial(s) * a; }

  GradedClass& operator+=(const GradedClass& o) { return *this = *this + o; }
  GradedClass& operator-=(const GradedClass& o) { return *this = *this - o; }
  GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

private:
  static void check_dims(const GradedClass& a, const GradedClass& b) {
    if (a.n_ != b.n_) throw DimensionError("GradedClass: mismatched dimension bounds");
  }
  int n_;
  std::map<Partition, Polynomial> terms_;
};

namespace detail {

// Newton's recurrence p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^(k-1) k e_k,
// evaluated on the given elementary classes (index i-1 holds e_i).
inline GradedClass newton_power_sum(const std::vector<GradedClass>& elementary, int k, int n) {
  std::vector<GradedClass> p;
  p.reserve(static_cast<std::size_t>(k));
  const auto elem = [&](int i) -> GradedClass {
    if (i < 1 || i > static_cast<int>(elementary.size())) return GradedClass(n);
    return elementary[static_cast<std::size_t>(i) - 1];
  };
  for (int m = 1; m <= k; ++m) {
    GradedClass sum(n);
    Rational sign = 1;
    for (int i = 1; i < m; ++i) {
      sum += sign * (elem(i) * p[static_cast<std::size_t>(m - i) - 1]);
      sign = -sign;
    }
    sum += (sign * Rational(m)) * elem(m);
    p.push_back(sum);
  }
  return p.back();
}

// exp of a class with no weight-zero part, truncated at the ring's bound.
inline GradedClass graded_exp(const GradedClass& a) {
  const int n = a.dim_bound();
  GradedClass out = GradedClass::unit(n);
  GradedClass power = GradedClass::unit(n);
  BigInt kfact = 1;
  for (int k = 1; k <= n; ++k) {
    power *= a;
    kfact *= k;
    out += Rational(BigInt(1), kfact) * power;
  }
  return out;
}

}  // namespace detail

// k-th power sum of the generator roots, written in the generators via
// Newton's identities. Requires k <= n since the ring is truncated there.
inline GradedClass power_sum(int k, int n) {
  if (k < 1) throw DimensionError("power_sum: k must be positive");
  if (k > n) throw DimensionError("power_sum: k exceeds the truncation weight");
  std::vector<GradedClass> elementary;
  elementary.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) elementary.push_back(GradedClass::generator(n, i));
  return detail::newton_power_sum(elementary, k, n);
}

// The multiplicative class prod_i Q(alpha_i) of a series Q with Q(0) = 1,
// rewritten in the elementary symmetric generators: with log Q = sum s_k a^k,
// the result is exp(sum_k s_k p_k) truncated at weight n.
inline GradedClass genus_class(const TruncSeries& q, int n) {
  if (q.coeff(0) != Polynomial(1))
    throw SeriesDomainError("genus_class: series constant term must be 1");
  if (q.order() < n) throw DimensionError("genus_class: series order below truncation weight");
  const TruncSeries s = series_log(q);
  GradedClass arg(n);
  for (int k = 1; k <= n; ++k) arg += s.coeff(k) * power_sum(k, n);
  return detail::graded_exp(arg);
}

// Substitutes the weight-i generator by values[i-1] in every term. Each value
// must be homogeneous of weight i in the target ring.
inline GradedClass evaluate_on(const GradedClass& cls, const std::vector<GradedClass>& values) {
  if (values.empty()) throw DimensionError("evaluate_on: no substitution values");
  const int n = values.front().dim_bound();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].dim_bound() != n)
      throw DimensionError("evaluate_on: substitution values live in different rings");
    if (values[i] != values[i].weight_part(static_cast<int>(i) + 1))
      throw DimensionError("evaluate_on: substitution value is not homogeneous of its weight");
  }
  GradedClass out(n);
  for (const auto& [key, coeff] : cls.terms()) {
    GradedClass monomial = GradedClass::unit(n);
    for (int part : key) {
      if (part > static_cast<int>(values.size()))
        throw DimensionError("evaluate_on: missing substitution value for generator " +
                             std::to_string(part));
      monomial *= values[static_cast<std::size_t>(part) - 1];
    }
    out += coeff * monomial;
  }
  return out;
}

// Twisted Chern character of a bundle described by its rank and total Chern
// class: rank + sum_k lambda^k p_k / k!, where p_k are the Newton power sums
// of the bundle's Chern roots. lambda = 1 gives the ordinary character.
inline GradedClass twisted_chern_character(int rank, const GradedClass& bundle_total, int n,
                                           const Polynomial& lambda) {
  if (rank < 0) throw DimensionError("twisted_chern_character: negative rank");
  if (bundle_total.dim_bound() != n)
    throw DimensionError("twisted_chern_character: class/truncation mismatch");
  if (bundle_total.coeff({}) != Polynomial(1))
    throw SeriesDomainError("twisted_chern_character: total Chern class must start with 1");

  std::vector<GradedClass> elementary;
  elementary.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) elementary.push_back(bundle_total.weight_part(i));

  GradedClass out = Rational(rank) * GradedClass::unit(n);
  Polynomial lambda_pow(1);
  BigInt kfact = 1;
  for (int k = 1; k <= n; ++k) {
    lambda_pow *= lambda;
    kfact *= k;
    const GradedClass pk = detail::newton_power_sum(elementary, k, n);
    out += (lambda_pow / Rational(kfact)) * pk;
  }
  return out;
}

}  // namespace chiy
