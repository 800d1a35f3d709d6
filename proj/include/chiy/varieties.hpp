#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chiy/hirzebruch.hpp"

namespace chiy {

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

class VarietyDescriptor;

struct ProjectiveSpace {
  int dim = 0;
};

// Smooth complete intersection of hypersurfaces of the given degrees inside
// projective space of the given dimension.
struct CompleteIntersection {
  int ambient_dim = 0;
  std::vector<long long> degrees;
  int dim() const { return ambient_dim - static_cast<int>(degrees.size()); }
};

// Table h[p][q] of Hodge numbers of a smooth compact variety.
struct HodgeDiamond {
  int dim = 0;
  std::vector<std::vector<long long>> h;
};

// Low-dimensional model given by classical invariants: a curve is pinned by
// (chi_a, chi) and a surface by (chi_a, chi, signature).
struct LowDimInvariants {
  int dim = 1;
  Rational chi_a;
  Rational euler;
  Rational signature;
};

// Toric variety described by its orbit f-vector: counts[k] is the number of
// k-dimensional torus orbits.
struct ToricOrbits {
  std::vector<long long> counts;
  int dim() const { return static_cast<int>(counts.size()) - 1; }
};

struct ProductVariety {
  std::vector<VarietyDescriptor> factors;
};

// User-supplied chi_y polynomial, e.g. for a singular variety computed
// elsewhere. Taken verbatim.
struct RawChiY {
  Polynomial coeffs;
};

class VarietyDescriptor {
public:
  using Value = std::variant<ProjectiveSpace, CompleteIntersection, HodgeDiamond,
                             LowDimInvariants, ToricOrbits, ProductVariety, RawChiY>;

  VarietyDescriptor(ProjectiveSpace v) : v_(std::move(v)) {}          // NOLINT
  VarietyDescriptor(CompleteIntersection v) : v_(std::move(v)) {}     // NOLINT
  VarietyDescriptor(HodgeDiamond v) : v_(std::move(v)) {}             // NOLINT
  VarietyDescriptor(LowDimInvariants v) : v_(std::move(v)) {}         // NOLINT
  VarietyDescriptor(ToricOrbits v) : v_(std::move(v)) {}              // NOLINT
  VarietyDescriptor(ProductVariety v) : v_(std::move(v)) {}           // NOLINT
  VarietyDescriptor(RawChiY v) : v_(std::move(v)) {}                  // NOLINT

  const Value& value() const { return v_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  int dim() const;
  std::string kind() const;

private:
  Value v_;
};

inline std::string VarietyDescriptor::kind() const {
  struct Visitor {
    std::string operator()(const ProjectiveSpace&) const { return "projective_space"; }
    std::string operator()(const CompleteIntersection&) const { return "complete_intersection"; }
    std::string operator()(const HodgeDiamond&) const { return "hodge_diamond"; }
    std::string operator()(const LowDimInvariants&) const { return "invariants"; }
    std::string operator()(const ToricOrbits&) const { return "toric"; }
    std::string operator()(const ProductVariety&) const { return "product"; }
    std::string operator()(const RawChiY&) const { return "chi_y"; }
  };
  return std::visit(Visitor{}, v_);
}

inline int VarietyDescriptor::dim() const {
  struct Visitor {
    int operator()(const ProjectiveSpace& v) const { return v.dim; }
    int operator()(const CompleteIntersection& v) const { return v.dim(); }
    int operator()(const HodgeDiamond& v) const { return v.dim; }
    int operator()(const LowDimInvariants& v) const { return v.dim; }
    int operator()(const ToricOrbits& v) const { return v.dim(); }
    int operator()(const ProductVariety& v) const {
      int total = 0;
      for (const auto& f : v.factors) total += f.dim();
      return total;
    }
    int operator()(const RawChiY& v) const { return std::max(v.coeffs.degree(), 0); }
  };
  return std::visit(Visitor{}, v_);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline void validate_hodge_diamond(const HodgeDiamond& d) {
  const int n = d.dim;
  if (n < 0) throw ModelConstraintError("hodge_diamond: negative dimension");
  if (static_cast<int>(d.h.size()) != n + 1)
    throw ModelConstraintError("hodge_diamond: table must have dim+1 rows");
  for (const auto& row : d.h)
    if (static_cast<int>(row.size()) != n + 1)
      throw ModelConstraintError("hodge_diamond: table must have dim+1 columns");
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (d.h[p][q] < 0) throw ModelConstraintError("hodge_diamond: negative entry");
      if (d.h[p][q] != d.h[q][p])
        throw ModelConstraintError("hodge_diamond: conjugation symmetry h[p][q] = h[q][p] fails");
      if (d.h[p][q] != d.h[n - p][n - q])
        throw ModelConstraintError("hodge_diamond: duality h[p][q] = h[n-p][n-q] fails");
    }
  if (d.h[0][0] < 1) throw ModelConstraintError("hodge_diamond: h[0][0] must be at least 1");
}

inline void validate(const VarietyDescriptor& d) {
  struct Visitor {
    void operator()(const ProjectiveSpace& v) const {
      if (v.dim < 0) throw ModelConstraintError("projective_space: negative dimension");
    }
    void operator()(const CompleteIntersection& v) const {
      if (v.ambient_dim < 0) throw ModelConstraintError("complete_intersection: negative ambient dimension");
      for (long long deg : v.degrees)
        if (deg < 1) throw ModelConstraintError("complete_intersection: degrees must be at least 1");
      if (v.dim() < 0)
        throw ModelConstraintError("complete_intersection: more hypersurfaces than ambient dimensions");
    }
    void operator()(const HodgeDiamond& v) const { validate_hodge_diamond(v); }
    void operator()(const LowDimInvariants& v) const {
      if (v.dim != 1 && v.dim != 2) throw ModelConstraintError("invariants: dim must be 1 or 2");
      if (v.dim == 1) {
        if (!v.signature.is_zero())
          throw ModelConstraintError("invariants: a curve has signature 0");
        if (v.chi_a * Rational(2) != v.euler)
          throw ModelConstraintError("invariants: a curve satisfies chi_a = euler/2");
      }
    }
    void operator()(const ToricOrbits& v) const {
      if (v.counts.empty()) throw ModelConstraintError("toric: orbit_counts must be non-empty");
      for (long long c : v.counts)
        if (c < 0) throw ModelConstraintError("toric: orbit counts must be non-negative");
      if (v.counts.back() < 1)
        throw ModelConstraintError("toric: need at least one top-dimensional orbit");
    }
    void operator()(const ProductVariety& v) const {
      for (const auto& f : v.factors) validate(f);
    }
    void operator()(const RawChiY&) const {}
  };
  std::visit(Visitor{}, d.value());
}

// ---------------------------------------------------------------------------
// Chern data for projective spaces and complete intersections
// ---------------------------------------------------------------------------

// Tangent data of a variety whose relevant cohomology a hyperplane class h
// generates: the total tangent Chern class as a polynomial in h (stored in
// the single-generator graded ring, key [1,..,1] for h^i), the degree of the
// top power of h, and the full Chern-number functional.
struct ChernModel {
  int dim = 0;
  GradedClass tangent_total{0};
  BigInt degree = 1;
  ChernNumbers numbers;

  // Integration functional of the h-basis ring: h^n integrates to degree.
  ChernNumbers h_functional() const {
    return ChernNumbers(dim, {{Partition(static_cast<std::size_t>(dim), 1), degree}});
  }
};

inline ChernModel chern_data(const VarietyDescriptor& d) {
  validate(d);
  int ambient = 0;
  std::vector<long long> degrees;
  if (const auto* ps = d.get_if<ProjectiveSpace>()) {
    ambient = ps->dim;
  } else if (const auto* ci = d.get_if<CompleteIntersection>()) {
    ambient = ci->ambient_dim;
    degrees = ci->degrees;
  } else {
    throw UnsupportedModelError("chern_data: only projective spaces and complete intersections carry Chern data");
  }

  const int n = ambient - static_cast<int>(degrees.size());
  // c(TX) = (1+h)^(ambient+1) * prod_j (1 + d_j h)^(-1), truncated at h^n.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = Rational(binomial(ambient + 1, i));
  for (long long deg : degrees) {
    // multiply by the geometric series 1 - d h + d^2 h^2 - ...
    std::vector<Rational> next(c.size(), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rational d_pow = 1;
      for (std::size_t k = 0; i + k < c.size(); ++k) {
        next[i + k] += c[i] * d_pow * Rational(k % 2 == 0 ? 1 : -1);
        d_pow *= Rational(BigInt(deg));
      }
    }
    c = std::move(next);
  }

  ChernModel model;
  model.dim = n;
  model.tangent_total = GradedClass(n);
  for (int i = 0; i <= n; ++i)
    model.tangent_total.add_term(Partition(static_cast<std::size_t>(i), 1),
                                 Polynomial(c[static_cast<std::size_t>(i)]));
  model.degree = 1;
  for (long long deg : degrees) model.degree *= deg;

  std::map<Partition, BigInt> numbers;
  for (const Partition& part : partitions_of(n)) {
    Rational value = Rational(model.degree);
    for (int i : part) value *= c[static_cast<std::size_t>(i)];
    if (!value.is_integer()) throw Error("chern_data: non-integral Chern number");
    numbers[part] = value.numerator();
  }
  model.numbers = ChernNumbers(n, std::move(numbers));
  return model;
}

// ---------------------------------------------------------------------------
// Hodge routes
// ---------------------------------------------------------------------------

// Two-variable polynomial with rational coefficients, for the Hodge-Deligne
// polynomial chi_{u,v}.
class PolyUV {
public:
  PolyUV() = default;

  void add_term(int up, int vp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({up, vp}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  Rational evaluate(const Rational& u, const Rational& v) const {
    Rational out = 0;
    for (const auto& [key, c] : terms_) out += c * pow(u, key.first) * pow(v, key.second);
    return out;
  }

  // Substitutes v = v0, leaving a polynomial in u.
  Polynomial substitute_v(const Rational& v0) const {
    Polynomial out;
    for (const auto& [key, c] : terms_) {
      std::vector<Rational> mono(static_cast<std::size_t>(key.first) + 1, Rational(0));
      mono.back() = c * pow(v0, key.second);
      out += Polynomial(std::move(mono));
    }
    return out;
  }

  friend PolyUV operator*(const PolyUV& a, const PolyUV& b) {
    PolyUV out;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
  }

  friend bool operator==(const PolyUV& a, const PolyUV& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyUV& a, const PolyUV& b) { return !(a == b); }

private:
  std::map<std::pair<int, int>, Rational> terms_;
};

// chi^p = sum_q (-1)^q h[p][q], the pure-Hodge specialization.
inline Polynomial chi_y_from_hodge(const HodgeDiamond& d) {
  validate_hodge_diamond(d);
  std::vector<Rational> coeffs(static_cast<std::size_t>(d.dim) + 1, Rational(0));
  for (int p = 0; p <= d.dim; ++p)
    for (int q = 0; q <= d.dim; ++q)
      coeffs[static_cast<std::size_t>(p)] += Rational(q % 2 == 0 ? 1 : -1) * Rational(BigInt(d.h[p][q]));
  return Polynomial(std::move(coeffs));
}

// sum h[p][q] u^p v^q. For smooth compact input the weight of H^i is pure,
// so the two signs in the general mixed-Hodge definition cancel and every
// coefficient is a plain Hodge number. (This differs from the E-polynomial
// convention, which keeps the signs.) Substituting u = y, v = -1 recovers
// chi_y exactly.
inline PolyUV hodge_deligne(const HodgeDiamond& d) {
  validate_hodge_diamond(d);
  PolyUV out;
  for (int p = 0; p <= d.dim; ++p)
    for (int q = 0; q <= d.dim; ++q) out.add_term(p, q, Rational(BigInt(d.h[p][q])));
  return out;
}

// Poincare polynomial sum_i b_i t^i with b_i = sum_{p+q=i} h[p][q].
inline Polynomial poincare_polynomial(const HodgeDiamond& d) {
  validate_hodge_diamond(d);
  std::vector<Rational> coeffs(2 * static_cast<std::size_t>(d.dim) + 1, Rational(0));
  for (int p = 0; p <= d.dim; ++p)
    for (int q = 0; q <= d.dim; ++q) coeffs[static_cast<std::size_t>(p + q)] += Rational(BigInt(d.h[p][q]));
  return Polynomial(std::move(coeffs));
}

// Kuenneth product of two diamonds.
inline HodgeDiamond hodge_product(const HodgeDiamond& a, const HodgeDiamond& b) {
  validate_hodge_diamond(a);
  validate_hodge_diamond(b);
  HodgeDiamond out;
  out.dim = a.dim + b.dim;
  out.h.assign(static_cast<std::size_t>(out.dim) + 1,
               std::vector<long long>(static_cast<std::size_t>(out.dim) + 1, 0));
  for (int p1 = 0; p1 <= a.dim; ++p1)
    for (int q1 = 0; q1 <= a.dim; ++q1)
      for (int p2 = 0; p2 <= b.dim; ++p2)
        for (int q2 = 0; q2 <= b.dim; ++q2)
          out.h[static_cast<std::size_t>(p1 + p2)][static_cast<std::size_t>(q1 + q2)] +=
              a.h[static_cast<std::size_t>(p1)][static_cast<std::size_t>(q1)] *
              b.h[static_cast<std::size_t>(p2)][static_cast<std::size_t>(q2)];
  return out;
}

inline HodgeDiamond projective_space_diamond(int n) {
  HodgeDiamond d;
  d.dim = n;
  d.h.assign(static_cast<std::size_t>(n) + 1, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  for (int p = 0; p <= n; ++p) d.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
  return d;
}

inline HodgeDiamond k3_diamond() {
  HodgeDiamond d;
  d.dim = 2;
  d.h = {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}};
  return d;
}

inline HodgeDiamond quintic_threefold_diamond() {
  HodgeDiamond d;
  d.dim = 3;
  d.h = {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}};
  return d;
}

// ---------------------------------------------------------------------------
// Further chi_y routes
// ---------------------------------------------------------------------------

// chi_y from an orbit f-vector: each k-dimensional torus orbit contributes
// chi_y((C*)^k) = (-(1+y))^k by the scissor relations.
inline Polynomial chi_y_toric(const std::vector<long long>& counts) {
  const Polynomial minus_one_minus_y{Rational(-1), Rational(-1)};
  Polynomial out;
  Polynomial orbit(1);
  for (long long f : counts) {
    out += Rational(BigInt(f)) * orbit;
    orbit *= minus_one_minus_y;
  }
  return out;
}

struct CurveInvariants {
  Rational chi_a;
  Rational euler;
};

struct SurfaceInvariants {
  Rational chi_a;
  Rational euler;
  Rational signature;
};

inline Polynomial chi_y_of_curve(const CurveInvariants& c) {
  const Rational half(BigInt(1), BigInt(2));
  return Polynomial{c.chi_a, -half * c.euler};
}

inline Polynomial chi_y_of_surface(const SurfaceInvariants& s) {
  const Rational half(BigInt(1), BigInt(2));
  return Polynomial{s.chi_a, half * (s.signature - s.euler),
                    half * (s.signature + s.euler - Rational(2) * s.chi_a)};
}

// Closed form for chi_y of a product of curves and surfaces given by their
// classical invariants; the empty product is 1.
inline Polynomial chi_y_curve_surface_product(const std::vector<CurveInvariants>& curves,
                                              const std::vector<SurfaceInvariants>& surfaces) {
  Polynomial out(1);
  for (const auto& c : curves) out *= chi_y_of_curve(c);
  for (const auto& s : surfaces) out *= chi_y_of_surface(s);
  return out;
}

inline Polynomial projective_space_chi_y(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) coeffs[static_cast<std::size_t>(p)] = (p % 2 == 0) ? 1 : -1;
  return Polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// chi_y dispatch
// ---------------------------------------------------------------------------

inline Polynomial chi_y(const VarietyDescriptor& d) {
  validate(d);
  struct Visitor {
    Polynomial operator()(const ProjectiveSpace&) const { return ghrr(); }
    Polynomial operator()(const CompleteIntersection&) const { return ghrr(); }
    Polynomial operator()(const HodgeDiamond& v) const { return chi_y_from_hodge(v); }
    Polynomial operator()(const LowDimInvariants& v) const {
      if (v.dim == 1) return chi_y_of_curve({v.chi_a, v.euler});
      return chi_y_of_surface({v.chi_a, v.euler, v.signature});
    }
    Polynomial operator()(const ToricOrbits& v) const { return chi_y_toric(v.counts); }
    Polynomial operator()(const ProductVariety& v) const {
      Polynomial out(1);
      for (const auto& f : v.factors) out *= chi_y(f);
      return out;
    }
    Polynomial operator()(const RawChiY& v) const { return v.coeffs; }

    const VarietyDescriptor* self = nullptr;
    Polynomial ghrr() const {
      const ChernModel model = chern_data(*self);
      return chi_y_ghrr(generator_total_class(model.dim), model.numbers);
    }
    static GradedClass generator_total_class(int n) {
      GradedClass total = GradedClass::unit(n);
      for (int i = 1; i <= n; ++i) total += GradedClass::generator(n, i);
      return total;
    }
  };
  Visitor visitor;
  visitor.self = &d;
  return std::visit(visitor, d.value());
}

inline std::string chi_y_route(const VarietyDescriptor& d) {
  const std::string k = d.kind();
  if (k == "projective_space" || k == "complete_intersection") return "gHRR";
  if (k == "hodge_diamond") return "hodge";
  return k;  // invariants, toric, product, chi_y
}

// chi_y twisted by a bundle; requires a Chern-data model, with the bundle's
// Chern classes given as multiples of powers of the hyperplane class.
inline Polynomial chi_y_with_bundle(const VarietyDescriptor& d, int rank,
                                    const std::vector<Rational>& bundle_chern) {
  const ChernModel model = chern_data(d);
  const int n = model.dim;
  GradedClass total = GradedClass::unit(n);
  for (std::size_t i = 0; i < bundle_chern.size(); ++i) {
    if (static_cast<int>(i) + 1 > n) break;  // classes above the truncation weight do not pair
    total.add_term(Partition(i + 1, 1), Polynomial(bundle_chern[i]));
  }
  return chi_y_ghrr(model.tangent_total, model.h_functional(), BundleData{rank, total});
}

// ---------------------------------------------------------------------------
// Homology classes of catalog varieties
// ---------------------------------------------------------------------------

// T_{y*}(X) = T_y(TX) capped with the fundamental class, for varieties with
// an explicit hyperplane-power basis, extended to products by cross product.
inline HomologyClass t_y_star(const VarietyDescriptor& d) {
  validate(d);
  if (d.get_if<ProjectiveSpace>() || d.get_if<CompleteIntersection>()) {
    const ChernModel model = chern_data(d);
    return cap_fundamental(t_y_class(model.tangent_total, model.dim), model.dim);
  }
  if (const auto* prod = d.get_if<ProductVariety>()) {
    if (prod->factors.empty())
      return cap_fundamental(GradedClass::unit(0), 0);  // the empty product is a point
    HomologyClass out = t_y_star(prod->factors.front());
    for (std::size_t i = 1; i < prod->factors.size(); ++i)
      out = cross_product(out, t_y_star(prod->factors[i]));
    return out;
  }
  throw UnsupportedModelError("t_y_star: descriptor has no explicit cohomology basis");
}

// ---------------------------------------------------------------------------
// Built-in catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  VarietyDescriptor descriptor;
  Polynomial expected_chi_y;  // independent reference value
};

inline std::vector<long long> projective_space_orbit_counts(int n) {
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    counts[static_cast<std::size_t>(k)] = static_cast<long long>(binomial(n + 1, k + 1));
  return counts;
}

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> entries;
    for (int n = 0; n <= 8; ++n)
      entries.push_back({"p" + std::to_string(n), ProjectiveSpace{n}, projective_space_chi_y(n)});

    const Polynomial k3_chi{Rational(2), Rational(-20), Rational(2)};
    entries.push_back({"quartic_surface", CompleteIntersection{3, {4}}, k3_chi});
    entries.push_back({"quintic_threefold", CompleteIntersection{4, {5}},
                       Polynomial{Rational(0), Rational(100), Rational(-100)}});
    entries.push_back({"k3", k3_diamond(), k3_chi});
    entries.push_back({"quintic_hodge", quintic_threefold_diamond(),
                       Polynomial{Rational(0), Rational(100), Rational(-100)}});
    entries.push_back(
        {"quartic_invariants", LowDimInvariants{2, Rational(2), Rational(24), Rational(-16)}, k3_chi});
    entries.push_back(
        {"genus2_curve", LowDimInvariants{1, Rational(-1), Rational(-2), Rational(0)},
         Polynomial{Rational(-1), Rational(1)}});

    const auto product = [](std::vector<VarietyDescriptor> factors) {
      return ProductVariety{std::move(factors)};
    };
    entries.push_back({"p1xp1", product({ProjectiveSpace{1}, ProjectiveSpace{1}}),
                       projective_space_chi_y(1) * projective_space_chi_y(1)});
    entries.push_back({"p1xp2", product({ProjectiveSpace{1}, ProjectiveSpace{2}}),
                       projective_space_chi_y(1) * projective_space_chi_y(2)});
    entries.push_back({"p2xp2", product({ProjectiveSpace{2}, ProjectiveSpace{2}}),
                       projective_space_chi_y(2) * projective_space_chi_y(2)});

    for (int n = 1; n <= 4; ++n)
      entries.push_back({"toric_p" + std::to_string(n), ToricOrbits{projective_space_orbit_counts(n)},
                         projective_space_chi_y(n)});
    return entries;
  }();
  return catalog;
}

}  // namespace chiy
