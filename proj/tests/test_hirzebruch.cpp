#include <catch2/catch_amalgamated.hpp>

#include "chiy/hirzebruch.hpp"
#include "chiy/varieties.hpp"

using chiy::BigInt;
using chiy::BundleData;
using chiy::ChernNumbers;
using chiy::GradedClass;
using chiy::HomologyClass;
using chiy::Partition;
using chiy::Polynomial;
using chiy::Rational;
using chiy::TruncSeries;
using chiy::VarietyDescriptor;

namespace {
GradedClass generator_total(int n) {
  GradedClass total = GradedClass::unit(n);
  for (int i = 1; i <= n; ++i) total += GradedClass::generator(n, i);
  return total;
}
}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(chiy::bernoulli_plus(0) == Rational(1));
  CHECK(chiy::bernoulli_plus(1) == Rational(BigInt(1), BigInt(2)));
  CHECK(chiy::bernoulli_plus(2) == Rational(BigInt(1), BigInt(6)));
  CHECK(chiy::bernoulli_plus(3) == Rational(0));
  CHECK(chiy::bernoulli_plus(4) == Rational(BigInt(-1), BigInt(30)));
  CHECK(chiy::bernoulli_plus(12) == Rational(BigInt(-691), BigInt(2730)));
}

TEST_CASE("q series low-order coefficients") {
  const TruncSeries q = chiy::q_series(2);
  CHECK(q.coeff(0) == Polynomial(1));
  CHECK(q.coeff(1) == Polynomial({Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))}));
  const Polynomial one_plus_y{1, 1};
  CHECK(q.coeff(2) == Rational(BigInt(1), BigInt(12)) * (one_plus_y * one_plus_y));
}

TEST_CASE("q series specializes to the classical series") {
  const TruncSeries q = chiy::q_series(6);

  // y = -1 gives 1 + a at every order
  for (int k = 0; k <= 6; ++k) {
    const Rational at_minus_one = q.coeff(k).evaluate(-1);
    CHECK(at_minus_one == ((k <= 1) ? Rational(1) : Rational(0)));
  }

  // y = 0 gives a/(1 - e^(-a)); y = 1 gives a/tanh(a)
  const TruncSeries todd = chiy::todd_series(6);
  const TruncSeries l = chiy::l_series(6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(q.coeff(k).evaluate(0) == todd.coeff(k).coeff(0));
    CHECK(q.coeff(k).evaluate(1) == l.coeff(k).coeff(0));
  }

  // frozen L-series prefix 1, 0, 1/3, 0, -1/45
  CHECK(l.coeff(0) == Polynomial(1));
  CHECK(l.coeff(1).is_zero());
  CHECK(l.coeff(2) == Polynomial(Rational(BigInt(1), BigInt(3))));
  CHECK(l.coeff(3).is_zero());
  CHECK(l.coeff(4) == Polynomial(Rational(BigInt(-1), BigInt(45))));
}

TEST_CASE("t_y class of the projective line") {
  // c(TP^1) = 1 + 2h in the h-basis ring
  GradedClass tangent = GradedClass::unit(1);
  tangent.add_term({1}, Polynomial(2));
  const GradedClass t = chiy::t_y_class(tangent, 1);
  CHECK(t.coeff({}) == Polynomial(1));
  CHECK(t.coeff({1}) == Polynomial({1, -1}));  // (1 - y) h

  CHECK(chiy::t_y_class(GradedClass::unit(0), 0) == GradedClass::unit(0));
}

TEST_CASE("t_p components of the projective line") {
  GradedClass tangent = GradedClass::unit(1);
  tangent.add_term({1}, Polynomial(2));
  const GradedClass t = chiy::t_y_class(tangent, 1);

  GradedClass todd = GradedClass::unit(1);
  todd.add_term({1}, Polynomial(1));
  CHECK(chiy::t_p_component(t, 0) == todd);  // 1 + h

  GradedClass t1(1);
  t1.add_term({1}, Polynomial(-1));
  CHECK(chiy::t_p_component(t, 1) == t1);  // -h

  // alternating sum recovers the total Chern class
  CHECK(chiy::t_p_component(t, 0) - chiy::t_p_component(t, 1) == tangent);
}

TEST_CASE("specializations of T_y(TP^1)") {
  GradedClass tangent = GradedClass::unit(1);
  tangent.add_term({1}, Polynomial(2));
  const GradedClass t = chiy::t_y_class(tangent, 1);

  CHECK(chiy::specialize(t, -1) == tangent);               // total Chern class
  GradedClass todd = GradedClass::unit(1);
  todd.add_term({1}, Polynomial(1));
  CHECK(chiy::specialize(t, 0) == todd);                   // Todd class
  CHECK(chiy::specialize(t, 1) == GradedClass::unit(1));   // L-class has no degree-1 part
}

TEST_CASE("specialization table against independently built series") {
  for (int n = 1; n <= 8; ++n) {
    const GradedClass t = chiy::genus_class(chiy::q_series(n), n);
    CHECK(chiy::specialize(t, -1) == chiy::genus_class(chiy::chern_series(n), n));
    CHECK(chiy::specialize(t, 0) == chiy::genus_class(chiy::todd_series(n), n));
    CHECK(chiy::specialize(t, 1) == chiy::genus_class(chiy::l_series(n), n));
  }
}

TEST_CASE("even and odd parts") {
  GradedClass tangent = GradedClass::unit(1);
  tangent.add_term({1}, Polynomial(2));
  const GradedClass t = chiy::t_y_class(tangent, 1);
  const auto [even, odd] = chiy::even_odd_parts(t);

  GradedClass expected_even = GradedClass::unit(1);
  expected_even.add_term({1}, Polynomial(1));
  GradedClass expected_odd(1);
  expected_odd.add_term({1}, Polynomial(-1));
  CHECK(even == expected_even);
  CHECK(odd == expected_odd);

  CHECK(even + odd == chiy::specialize(t, 1));
  CHECK(even - odd == chiy::specialize(t, -1));

  // y-free input: even part is the input, odd part vanishes
  const auto [e2, o2] = chiy::even_odd_parts(tangent);
  CHECK(e2 == tangent);
  CHECK(o2.is_zero());
}

TEST_CASE("integration against chern numbers") {
  const ChernNumbers p2_numbers(2, {{{1, 1}, 9}, {{2}, 3}});
  const GradedClass universal = chiy::genus_class(chiy::q_series(2), 2);
  CHECK(chiy::integrate(p2_numbers, universal) == Polynomial({1, -1, 1}));

  CHECK(chiy::integrate(p2_numbers, GradedClass::unit(2)).is_zero());

  const ChernNumbers k3_numbers(2, {{{1, 1}, 0}, {{2}, 24}});
  CHECK(chiy::integrate(k3_numbers, universal) == Polynomial({2, -20, 2}));

  CHECK_THROWS_AS(chiy::integrate(p2_numbers, GradedClass::unit(3)), chiy::DimensionError);
  CHECK_THROWS_AS(ChernNumbers(2, {{{1}, 1}}), chiy::DimensionError);
}

TEST_CASE("gHRR genus of projective spaces") {
  for (int n = 0; n <= 8; ++n) {
    const chiy::ChernModel model = chiy::chern_data(VarietyDescriptor(chiy::ProjectiveSpace{n}));
    const Polynomial direct = chiy::chi_y_ghrr(generator_total(n), model.numbers);
    CHECK(direct == chiy::projective_space_chi_y(n));
    // h-basis route with the trivial bundle agrees
    CHECK(chiy::chi_y_ghrr(model.tangent_total, model.h_functional()) == direct);
  }
}

TEST_CASE("gHRR with line bundles on P^1 matches the Bott values") {
  const VarietyDescriptor p1{chiy::ProjectiveSpace{1}};
  const chiy::ChernModel model = chiy::chern_data(p1);
  for (int k = -5; k <= 5; ++k) {
    GradedClass total = GradedClass::unit(1);
    total.add_term({1}, Polynomial(Rational(k)));
    const Polynomial got =
        chiy::chi_y_ghrr(model.tangent_total, model.h_functional(), BundleData{1, total});
    CHECK(got == Polynomial({Rational(k + 1), Rational(k - 1)}));
  }
}

TEST_CASE("gHRR with a trivial bundle scales the genus") {
  const VarietyDescriptor p2{chiy::ProjectiveSpace{2}};
  const chiy::ChernModel model = chiy::chern_data(p2);
  for (int rank = 0; rank <= 3; ++rank) {
    const Polynomial got = chiy::chi_y_ghrr(model.tangent_total, model.h_functional(),
                                            BundleData{rank, GradedClass::unit(2)});
    CHECK(got == Rational(rank) * Polynomial({1, -1, 1}));
  }
}

TEST_CASE("degree bound and duality for gHRR genera") {
  for (int n = 0; n <= 6; ++n) {
    const Polynomial g = chiy::chi_y(VarietyDescriptor(chiy::ProjectiveSpace{n}));
    CHECK(g.degree() <= n);
    const auto c = g.padded_coeffs(n + 1);
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    for (int p = 0; p <= n; ++p) CHECK(c[static_cast<std::size_t>(n - p)] == sign * c[static_cast<std::size_t>(p)]);
  }
}

TEST_CASE("euler, todd and signature specializations") {
  for (int n = 0; n <= 8; ++n) {
    const Polynomial g = chiy::chi_y(VarietyDescriptor(chiy::ProjectiveSpace{n}));
    CHECK(g.evaluate(0) == Rational(1));
    CHECK(g.evaluate(-1) == Rational(n + 1));
    if (n % 2 == 0) CHECK(g.evaluate(1) == Rational(1));
  }
  const Polynomial quartic = chiy::chi_y(VarietyDescriptor(chiy::CompleteIntersection{3, {4}}));
  CHECK(quartic.evaluate(-1) == Rational(24));
  const Polynomial quintic = chiy::chi_y(VarietyDescriptor(chiy::CompleteIntersection{4, {5}}));
  CHECK(quintic.evaluate(-1) == Rational(-200));
}

TEST_CASE("homology class of the projective line") {
  const HomologyClass star = chiy::t_y_star(VarietyDescriptor(chiy::ProjectiveSpace{1}));
  CHECK(star.factor_dims() == std::vector<int>{1});
  CHECK(star.component({1}) == Polynomial(1));          // [P^1] component
  CHECK(star.component({0}) == Polynomial({1, -1}));    // (1 - y) [pt]

  // y = -1 is the Chern class of the smooth space: [P^1] + 2 [pt]
  const HomologyClass csm = chiy::specialize(star, -1);
  CHECK(csm.component({1}) == Polynomial(1));
  CHECK(csm.component({0}) == Polynomial(2));

  const HomologyClass point = chiy::t_y_star(VarietyDescriptor(chiy::ProjectiveSpace{0}));
  CHECK(point.component({0}) == Polynomial(1));

  CHECK_THROWS_AS(chiy::t_y_star(VarietyDescriptor(chiy::ToricOrbits{{2, 1}})),
                  chiy::UnsupportedModelError);
}

TEST_CASE("homology classes multiply by cross product") {
  const HomologyClass a = chiy::t_y_star(VarietyDescriptor(chiy::ProjectiveSpace{1}));
  const HomologyClass product = chiy::cross_product(a, a);
  CHECK(product.factor_dims() == std::vector<int>({1, 1}));
  CHECK(product.component({0, 0}) == Polynomial({1, -1}) * Polynomial({1, -1}));
  CHECK(product.component({1, 0}) == Polynomial({1, -1}));
  CHECK(product.component({1, 1}) == Polynomial(1));

  const HomologyClass via_descriptor = chiy::t_y_star(
      VarietyDescriptor(chiy::ProductVariety{{chiy::ProjectiveSpace{1}, chiy::ProjectiveSpace{1}}}));
  CHECK(via_descriptor == product);
}

TEST_CASE("integrating the homology class recovers the genus") {
  // the point component of T_{y*} evaluates against the degree of h^n
  const std::vector<VarietyDescriptor> cases = {
      chiy::ProjectiveSpace{1}, chiy::ProjectiveSpace{3}, chiy::CompleteIntersection{3, {4}},
      chiy::CompleteIntersection{4, {5}}, chiy::CompleteIntersection{2, {2}}};
  for (const auto& d : cases) {
    const chiy::ChernModel model = chiy::chern_data(d);
    const HomologyClass star = chiy::t_y_star(d);
    CHECK(star.component({0}) * Rational(model.degree) == chiy::chi_y(d));
  }
}

TEST_CASE("cap_fundamental rejects non-h classes") {
  GradedClass cls(2);
  cls.add_term({2}, Polynomial(1));
  CHECK_THROWS_AS(chiy::cap_fundamental(cls, 2), chiy::UnsupportedModelError);
}
