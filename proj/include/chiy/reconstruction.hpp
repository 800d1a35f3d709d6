#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "chiy/hirzebruch.hpp"
#include "chiy/linalg.hpp"

namespace chiy {

// Evaluation nodes for recovering a genus of a dimension-n variety from
// n+1 sampled specializations. The first three nodes are pinned to 0, 1, -1
// (arithmetic genus, signature, Euler characteristic) whenever n >= 2.
struct SamplePlan {
  int dim = 0;
  std::vector<Rational> nodes;
};

// [0], [0,1], [0,1,-1], then extended by 2, -2, 3, -3, ... to n+1 nodes.
// Beyond the pinned prefix the nodes only have to be pairwise distinct;
// small alternating integers keep the Vandermonde entries small.
inline SamplePlan default_nodes(int n) {
  if (n < 0) throw DimensionError("default_nodes: negative dimension");
  SamplePlan plan;
  plan.dim = n;
  const std::vector<Rational> prefix = {Rational(0), Rational(1), Rational(-1)};
  for (int i = 0; i <= n && i < 3; ++i) plan.nodes.push_back(prefix[static_cast<std::size_t>(i)]);
  int magnitude = 2;
  bool negative = false;
  while (static_cast<int>(plan.nodes.size()) < n + 1) {
    plan.nodes.push_back(Rational(negative ? -magnitude : magnitude));
    if (negative) ++magnitude;
    negative = !negative;
  }
  return plan;
}

// The unique polynomial of degree <= n through the n+1 samples, found by an
// exact Vandermonde solve and cross-checked against Lagrange interpolation.
inline Polynomial reconstruct_genus(int n, const std::vector<std::pair<Rational, Rational>>& samples) {
  if (static_cast<int>(samples.size()) != n + 1)
    throw ArityError("reconstruct_genus: need exactly n+1 samples");
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  nodes.reserve(samples.size());
  values.reserve(samples.size());
  for (const auto& [node, value] : samples) {
    nodes.push_back(node);
    values.push_back(value);
  }
  detail::require_distinct(nodes);

  const std::vector<Rational> coeffs = solve_linear(vandermonde_matrix(nodes), values);
  const Polynomial solved{std::vector<Rational>(coeffs)};
  if (solved != lagrange_interpolate(nodes, values))
    throw Error("reconstruct_genus: solver and Lagrange routes disagree");
  return solved;
}

namespace detail {

// Slotwise reconstruction: the linear system is scalar in every graded slot,
// so each slot of the result is an independent genus reconstruction.
template <typename ClassT, typename KeyT>
std::map<KeyT, Polynomial> reconstruct_slots(int n,
                                             const std::vector<std::pair<Rational, ClassT>>& samples,
                                             const std::map<KeyT, Polynomial>& (ClassT::*slots)() const) {
  std::set<KeyT> keys;
  for (const auto& [node, cls] : samples)
    for (const auto& [key, coeff] : (cls.*slots)()) keys.insert(key);

  std::map<KeyT, Polynomial> out;
  for (const KeyT& key : keys) {
    std::vector<std::pair<Rational, Rational>> scalar;
    scalar.reserve(samples.size());
    for (const auto& [node, cls] : samples) {
      Polynomial coeff;
      const auto it = (cls.*slots)().find(key);
      if (it != (cls.*slots)().end()) coeff = it->second;
      if (!coeff.is_constant())
        throw DimensionError("reconstruct_class: sampled classes must be y-free");
      scalar.emplace_back(node, coeff.coeff(0));
    }
    Polynomial rec = reconstruct_genus(n, scalar);
    if (!rec.is_zero()) out.emplace(key, std::move(rec));
  }
  return out;
}

}  // namespace detail

// Recovers the y-polynomial class (the components T^0, ..., T^n) from n+1
// numeric specializations, slot by slot.
inline GradedClass reconstruct_class(int n, const std::vector<std::pair<Rational, GradedClass>>& samples) {
  if (static_cast<int>(samples.size()) != n + 1)
    throw ArityError("reconstruct_class: need exactly n+1 samples");
  const int bound = samples.front().second.dim_bound();
  for (const auto& [node, cls] : samples)
    if (cls.dim_bound() != bound)
      throw DimensionError("reconstruct_class: samples live in different graded rings");
  GradedClass out(bound);
  for (auto& [key, poly] : detail::reconstruct_slots(n, samples, &GradedClass::terms))
    out.add_term(key, poly);
  return out;
}

inline HomologyClass reconstruct_class(int n,
                                       const std::vector<std::pair<Rational, HomologyClass>>& samples) {
  if (static_cast<int>(samples.size()) != n + 1)
    throw ArityError("reconstruct_class: need exactly n+1 samples");
  const std::vector<int> dims = samples.front().second.factor_dims();
  for (const auto& [node, cls] : samples)
    if (cls.factor_dims() != dims)
      throw DimensionError("reconstruct_class: samples live on different spaces");
  HomologyClass out(dims);
  for (auto& [key, poly] : detail::reconstruct_slots(n, samples, &HomologyClass::components))
    out.add_component(key, poly);
  return out;
}

// Reconstruction for even n = 2k from integer samples only: nodes are
// 0, 1, -1, 2..k together with the reciprocals 1/2..1/k, whose values are
// filled in as j^(-2k) chi_j via the inversion formula chi_(1/j) = j^(-n) chi_j
// (valid when the genus satisfies the duality chi^p = (-1)^n chi^(n-p)).
inline Polynomial reciprocal_node_plan(int n, const std::map<long long, Rational>& integer_samples) {
  if (n < 0) throw DimensionError("reciprocal_node_plan: negative dimension");
  if (n % 2 != 0) throw ParityError("reciprocal_node_plan: dimension must be even");
  const int k = n / 2;

  std::vector<long long> required = {0};
  if (k >= 1) {
    required.push_back(1);
    required.push_back(-1);
    for (long long j = 2; j <= k; ++j) required.push_back(j);
  }
  if (integer_samples.size() != required.size())
    throw ArityError("reciprocal_node_plan: expected exactly " + std::to_string(required.size()) +
                     " integer samples");
  for (long long j : required)
    if (integer_samples.find(j) == integer_samples.end())
      throw ArityError("reciprocal_node_plan: missing sample at node " + std::to_string(j));

  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(static_cast<std::size_t>(n) + 1);
  for (long long j : required) samples.emplace_back(Rational(j), integer_samples.at(j));
  for (long long j = 2; j <= k; ++j) {
    const Rational reciprocal_node(BigInt(1), BigInt(j));
    samples.emplace_back(reciprocal_node, pow(reciprocal_node, n) * integer_samples.at(j));
  }
  return reconstruct_genus(n, samples);
}

// Samples chi_y of a catalog variety at the plan's nodes; the round trip
// through reconstruct_genus must reproduce the direct polynomial exactly.
inline std::vector<std::pair<Rational, Rational>> sample_chi_y(const Polynomial& chi,
                                                               const SamplePlan& plan) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(plan.nodes.size());
  for (const Rational& node : plan.nodes) out.emplace_back(node, chi.evaluate(node));
  return out;
}

}  // namespace chiy
