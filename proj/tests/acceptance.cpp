// Acceptance suite: every release gate runs here, one line per criterion.
// Each criterion is exact (zero tolerance); the binary exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chiy/chiy.hpp"

namespace {

using chiy::BigInt;
using chiy::GradedClass;
using chiy::HomologyClass;
using chiy::Polynomial;
using chiy::Rational;
using chiy::VarietyDescriptor;

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
  try {
    body();
    std::printf("[PASS] criterion %2d: %s\n", number, label.c_str());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("[FAIL] criterion %2d: %s\n       %s\n", number, label.c_str(), e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

Polynomial random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return Polynomial(std::move(c));
}

}  // namespace

int main() {
  criterion(1, "chi_y(P^n) via gHRR equals the alternating sum for n <= 8", [] {
    for (int n = 0; n <= 8; ++n)
      require(chiy::chi_y(VarietyDescriptor(chiy::ProjectiveSpace{n})) ==
                  chiy::projective_space_chi_y(n),
              "mismatch at n = " + std::to_string(n));
  });

  criterion(2, "T_y specializes to Chern/Todd/L through weight 8", [] {
    const GradedClass t = chiy::genus_class(chiy::q_series(8), 8);
    require(chiy::specialize(t, -1) == chiy::genus_class(chiy::chern_series(8), 8),
            "y = -1 is not the total Chern class");
    require(chiy::specialize(t, 0) == chiy::genus_class(chiy::todd_series(8), 8),
            "y = 0 is not the total Todd class");
    require(chiy::specialize(t, 1) == chiy::genus_class(chiy::l_series(8), 8),
            "y = 1 is not the total L-class");
  });

  criterion(3, "universal weight-1 and weight-2 coefficients", [] {
    const GradedClass t = chiy::genus_class(chiy::q_series(2), 2);
    const Polynomial one_plus_y{1, 1};
    require(t.coeff({1}) ==
                Polynomial({Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))}),
            "weight-1 coefficient is not (1 - y)/2");
    require(t.coeff({1, 1}) == Rational(BigInt(1), BigInt(12)) * (one_plus_y * one_plus_y),
            "c_1^2 coefficient is not (1 + y)^2 / 12");
    require(t.coeff({2}) == Rational(BigInt(1), BigInt(12)) * Polynomial({1, -10, 1}),
            "c_2 coefficient is not (1 - 10y + y^2) / 12");
  });

  criterion(4, "Todd genus 1 for P^n (n <= 8) and signature 1 for P^2k (k <= 4)", [] {
    for (int n = 0; n <= 8; ++n) {
      const Polynomial g = chiy::chi_y(VarietyDescriptor(chiy::ProjectiveSpace{n}));
      require(g.evaluate(0) == Rational(1), "chi_0(P^" + std::to_string(n) + ") != 1");
      if (n % 2 == 0)
        require(g.evaluate(1) == Rational(1), "chi_1(P^" + std::to_string(n) + ") != 1");
    }
  });

  criterion(5, "quartic surface three routes; quintic threefold chi and chi^a", [] {
    const Polynomial expected{2, -20, 2};
    require(chiy::chi_y(VarietyDescriptor(chiy::CompleteIntersection{3, {4}})) == expected,
            "quartic gHRR route");
    require(chiy::chi_y_from_hodge(chiy::k3_diamond()) == expected, "quartic Hodge route");
    require(chiy::chi_y(VarietyDescriptor(chiy::LowDimInvariants{2, 2, 24, -16})) == expected,
            "quartic invariants route");
    const Polynomial quintic = chiy::chi_y(VarietyDescriptor(chiy::CompleteIntersection{4, {5}}));
    require(quintic.evaluate(-1) == Rational(-200), "chi_-1(quintic) != -200");
    require(quintic.evaluate(0) == Rational(0), "chi_0(quintic) != 0");
  });

  criterion(6, "duality: reversed coefficients equal (-1)^n times the originals", [] {
    for (const auto& entry : chiy::builtin_catalog()) {
      const Polynomial g = chiy::chi_y(entry.descriptor);
      const int n = entry.descriptor.dim();
      const auto c = g.padded_coeffs(n + 1);
      const Rational sign = (n % 2 == 0) ? 1 : -1;
      for (int p = 0; p <= n; ++p)
        require(c[static_cast<std::size_t>(n - p)] == sign * c[static_cast<std::size_t>(p)],
                "duality fails for " + entry.name);
    }
  });

  criterion(7, "reconstruction round trips for every catalog variety of dim <= 6", [] {
    for (const auto& entry : chiy::builtin_catalog()) {
      const int n = entry.descriptor.dim();
      if (n > 6) continue;
      const Polynomial direct = chiy::chi_y(entry.descriptor);
      const chiy::SamplePlan plan = chiy::default_nodes(n);
      const auto samples = chiy::sample_chi_y(direct, plan);
      require(chiy::reconstruct_genus(n, samples) == direct,
              "default-node round trip fails for " + entry.name);

      // Lagrange and matrix routes agree
      std::vector<Rational> nodes, values;
      for (const auto& [node, value] : samples) {
        nodes.push_back(node);
        values.push_back(value);
      }
      const auto solved = chiy::solve_linear(chiy::vandermonde_matrix(nodes), values);
      require(Polynomial(std::vector<Rational>(solved)) ==
                  chiy::lagrange_interpolate(nodes, values),
              "Lagrange and Vandermonde routes disagree for " + entry.name);

      if (n % 2 == 0) {
        std::map<long long, Rational> integer_samples;
        integer_samples[0] = direct.evaluate(0);
        if (n >= 2) {
          integer_samples[1] = direct.evaluate(1);
          integer_samples[-1] = direct.evaluate(-1);
          for (long long j = 2; j <= n / 2; ++j) integer_samples[j] = direct.evaluate(Rational(j));
        }
        require(chiy::reciprocal_node_plan(n, integer_samples) == direct,
                "reciprocal-node plan fails for " + entry.name);
      }
    }
  });

  criterion(8, "dim-3 node solve pins the y^3 coefficient to (-chi + 3chi_a + chi_2)/6", [] {
    // Solve at {0, 1, -1, 2} for unit right-hand sides in (chi_a, chi, chi_2).
    const auto solve_basis = [](int which) {
      std::vector<std::pair<Rational, Rational>> samples = {
          {0, 0}, {1, 0}, {-1, 0}, {2, 0}};
      samples[which == 0 ? 0u : which == 1 ? 2u : 3u].second = 1;
      return chiy::reconstruct_genus(3, samples);
    };
    const Polynomial a = solve_basis(0);   // chi_a = 1
    const Polynomial x = solve_basis(1);   // chi = 1
    const Polynomial x2 = solve_basis(2);  // chi_2 = 1
    const Rational sixth(BigInt(1), BigInt(6));
    const Rational half(BigInt(1), BigInt(2));

    // y coefficient (-2chi - 3chi_a - chi_2)/6 and y^2 coefficient (chi - 2chi_a)/2
    require(a.coeff(1) == -half && x.coeff(1) == Rational(BigInt(-1), BigInt(3)) &&
                x2.coeff(1) == -sixth,
            "y coefficient formula");
    require(a.coeff(2) == Rational(-1) && x.coeff(2) == half && x2.coeff(2).is_zero(),
            "y^2 coefficient formula");
    // solved y^3 coefficient: (-chi + 3chi_a + chi_2)/6
    require(a.coeff(3) == half && x.coeff(3) == -sixth && x2.coeff(3) == sixth,
            "y^3 coefficient formula");
    // printed variant (chi + 3chi_a + chi_2)/6 fails the y = -1 consistency check
    const Rational printed_chi_coeff = sixth;
    const Rational value_at_minus_one = x.coeff(0) - x.coeff(1) + x.coeff(2) - printed_chi_coeff;
    require(value_at_minus_one == Rational(BigInt(2), BigInt(3)),
            "printed y^3 form should return (2/3) chi at y = -1");
    std::printf("       [WARN] printed y^3 closed form (chi + 3chi_a + chi_2)/6 disagrees with "
                "the solver's (-chi + 3chi_a + chi_2)/6 and fails the y=-1 check\n");
  });

  criterion(9, "three Taylor routes agree on 200 random polynomials; M(a)M(-a) = I", [] {
    std::mt19937 rng(16180339);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < 200; ++i) {
      const Polynomial f = random_poly(rng, 10);
      const Rational alpha(BigInt(num(rng)), BigInt(den(rng)));
      const auto a = chiy::taylor_via_derivatives(f, alpha);
      require(a == chiy::taylor_via_matrix(f, alpha), "matrix route disagrees");
      require(a == chiy::taylor_shift(f, alpha), "shift route disagrees");
    }
    for (int n = 0; n <= 12; ++n) {
      const Rational alpha(BigInt(num(rng)), BigInt(den(rng)));
      require(chiy::taylor_matrix(alpha, n) * chiy::taylor_matrix(-alpha, n) ==
                  chiy::ExactMatrix::identity(n + 1),
              "M(a) M(-a) != I at n = " + std::to_string(n));
    }
  });

  criterion(10, "Libgober-Wood a_1..a_3 match the derivative route; a_4 pair (-1, +1) on P^4", [] {
    std::vector<VarietyDescriptor> cases;
    for (int n = 2; n <= 6; ++n) cases.push_back(chiy::ProjectiveSpace{n});
    cases.push_back(chiy::CompleteIntersection{3, {4}});
    cases.push_back(chiy::CompleteIntersection{4, {5}});
    for (const auto& d : cases) {
      const chiy::ChernModel model = chiy::chern_data(d);
      const Polynomial g = chiy::chi_y(d);
      const Rational chi = g.evaluate(-1);
      const auto taylor = chiy::taylor_coefficients(g, -1).coeffs;
      for (int p = 1; p <= 3; ++p) {
        const Rational expected =
            p < static_cast<int>(taylor.size()) ? taylor[static_cast<std::size_t>(p)] : Rational(0);
        require(chiy::libgober_wood(p, model.dim, model.numbers, chi) == expected,
                "a_" + std::to_string(p) + " mismatch in dim " + std::to_string(model.dim));
      }
    }
    const chiy::ChernModel p4 = chiy::chern_data(VarietyDescriptor(chiy::ProjectiveSpace{4}));
    const auto taylor = chiy::taylor_coefficients(chiy::projective_space_chi_y(4), -1).coeffs;
    require(taylor == std::vector<Rational>({5, -10, 10, -5, 1}), "P^4 Taylor coefficients");
    require(chiy::libgober_wood(1, 4, p4.numbers, 5) == Rational(-10), "a_1(P^4) != -10");
    require(chiy::libgober_wood(2, 4, p4.numbers, 5) == Rational(10), "a_2(P^4) != 10");
    require(chiy::libgober_wood(3, 4, p4.numbers, 5) == Rational(-5), "a_3(P^4) != -5");
    require(chiy::libgober_wood(4, 4, p4.numbers, 5) == Rational(-1),
            "printed a_4 closed form should give -1 on P^4");
    require(taylor[4] == Rational(1), "derivative route a_4(P^4) should be +1");
  });

  criterion(11, "derived genera at y = -1 count torus orbits of P^n", [] {
    for (int n = 0; n <= 6; ++n) {
      const Polynomial g = chiy::chi_y_toric(chiy::projective_space_orbit_counts(n));
      for (int p = 0; p <= n; ++p) {
        const Rational count =
            chiy::derived_genus(p, g).evaluate(-1) * Rational(p % 2 == 0 ? 1 : -1);
        require(count == Rational(chiy::binomial(n + 1, p + 1)),
                "orbit count mismatch at n = " + std::to_string(n) + ", p = " + std::to_string(p));
      }
    }
  });

  criterion(12, "Leibniz rule on 200 random pairs and at class level", [] {
    std::mt19937 rng(2024061);
    for (int i = 0; i < 200; ++i) {
      const Polynomial f = random_poly(rng, 6);
      const Polynomial g = random_poly(rng, 6);
      for (int p = 0; p <= 12; ++p)
        require(chiy::leibniz_product(p, {f, g}) == chiy::derived_genus(p, f * g),
                "polynomial Leibniz rule fails");
    }
    const std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {2, 2}};
    for (const auto& [na, nb] : shapes) {
      const HomologyClass a = chiy::t_y_star(VarietyDescriptor(chiy::ProjectiveSpace{na}));
      const HomologyClass b = chiy::t_y_star(VarietyDescriptor(chiy::ProjectiveSpace{nb}));
      const HomologyClass product = chiy::cross_product(a, b);
      for (int p = 0; p <= na + nb + 1; ++p)
        require(chiy::leibniz_product(p, {a, b}) == chiy::derived_class(p, product),
                "class Leibniz rule fails for P^" + std::to_string(na) + " x P^" +
                    std::to_string(nb));
    }
  });

  criterion(13, "Hodge-Deligne substitution, multiplicativity, higher Euler of K3", [] {
    const std::vector<chiy::HodgeDiamond> diamonds = {
        chiy::projective_space_diamond(1), chiy::projective_space_diamond(2),
        chiy::projective_space_diamond(4), chiy::k3_diamond(), chiy::quintic_threefold_diamond()};
    for (const auto& d : diamonds)
      require(chiy::hodge_deligne(d).substitute_v(-1) == chiy::chi_y_from_hodge(d),
              "chi_{u,v}(y, -1) != chi_y");
    const chiy::HodgeDiamond product = chiy::hodge_product(chiy::k3_diamond(),
                                                           chiy::projective_space_diamond(2));
    require(chiy::hodge_deligne(product) ==
                chiy::hodge_deligne(chiy::k3_diamond()) *
                    chiy::hodge_deligne(chiy::projective_space_diamond(2)),
            "Hodge-Deligne polynomial is not multiplicative");
    require(chiy::higher_euler(chiy::k3_diamond()) == std::vector<Rational>({24, -48, 28, -4, 1}),
            "higher Euler characteristics of K3");
  });

  criterion(14, "bundle gHRR matches the Bott values on P^1 for -5 <= k <= 5", [] {
    for (int k = -5; k <= 5; ++k) {
      const Polynomial got = chiy::chi_y_with_bundle(VarietyDescriptor(chiy::ProjectiveSpace{1}),
                                                     1, {Rational(k)});
      require(got == Polynomial({Rational(k + 1), Rational(k - 1)}),
              "mismatch at k = " + std::to_string(k));
    }
  });

  criterion(15, "verification suite passes with exactly the two documented warnings", [] {
    const auto start = std::chrono::steady_clock::now();
    const auto results = chiy::run_verification();
    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    require(chiy::verification_passed(results), "verification reported a failure");
    require(chiy::count_status(results, chiy::CheckStatus::Warn) == 2,
            "expected exactly 2 warnings, got " +
                std::to_string(chiy::count_status(results, chiy::CheckStatus::Warn)));
    require(elapsed.count() < 60, "verification suite took " + std::to_string(elapsed.count()) +
                                      "s, over the 60s budget");

    // and the installed binary reports the same through its exit status
    const std::string command = std::string(CHIY_CLI_PATH) + " verify > /dev/null 2>&1";
    require(std::system(command.c_str()) == 0, "chiy verify exited nonzero");
  });

  if (failures == 0) {
    std::printf("all 15 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
