#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chiy/polynomial.hpp"

using chiy::BigInt;
using chiy::Polynomial;
using chiy::Rational;

namespace {
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

TEST_CASE("canonical representation") {
  CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}) == Polynomial(1));
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({1, -1, 1}).degree() == 2);
  CHECK(Polynomial({1, 2}).coeff(5) == Rational(0));
}

TEST_CASE("evaluation") {
  const Polynomial p{1, -1, 1};  // 1 - y + y^2
  CHECK(p.evaluate(-1) == Rational(3));
  CHECK(p.evaluate(0) == Rational(1));
  CHECK(Polynomial().evaluate(Rational(BigInt(7), BigInt(3))) == Rational(0));
  CHECK(p.evaluate(Rational(BigInt(1), BigInt(2))) == Rational(BigInt(3), BigInt(4)));
}

TEST_CASE("derivatives") {
  const Polynomial p{1, -1, 1};
  CHECK(p.derivative() == Polynomial{-1, 2});
  const Polynomial y4{0, 0, 0, 0, 1};
  CHECK(y4.derivative(2) == Polynomial({0, 0, 12}));
  CHECK(p.derivative(0) == p);
  CHECK(p.derivative(3).is_zero());
}

TEST_CASE("ring operations") {
  const Polynomial a{1, 1};
  CHECK(a * a == Polynomial({1, 2, 1}));
  CHECK(a - a == Polynomial());
  CHECK(chiy::pow(a, 3) == Polynomial({1, 3, 3, 1}));
  CHECK(Rational(BigInt(1), BigInt(2)) * Polynomial({2, 4}) == Polynomial({1, 2}));
  CHECK(Polynomial({2, 4}) / Rational(2) == Polynomial({1, 2}));
}

TEST_CASE("taylor shift of the catalog examples") {
  CHECK(chiy::taylor_shift(Polynomial{1, -1, 1}, -1) == std::vector<Rational>({3, -3, 1}));
  CHECK(chiy::taylor_shift(Polynomial{1, -1, 1}, 0) == std::vector<Rational>({1, -1, 1}));
  CHECK(chiy::taylor_shift(Polynomial{1, -1, 1, -1, 1}, -1) ==
        std::vector<Rational>({5, -10, 10, -5, 1}));
  CHECK(chiy::taylor_shift(Polynomial(), 5).empty());
}

TEST_CASE("taylor shift round trip on random polynomials") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = random_poly(rng, 8);
    const Rational alpha(BigInt(num(rng)), BigInt(den(rng)));
    const std::vector<Rational> shifted = chiy::taylor_shift(p, alpha);

    // expand sum a_k (y - alpha)^k back out
    Polynomial rebuilt;
    Polynomial power(1);
    const Polynomial y_minus_alpha{-alpha, Rational(1)};
    for (const Rational& a : shifted) {
      rebuilt += a * power;
      power *= y_minus_alpha;
    }
    CHECK(rebuilt == p);

    // evaluation agrees through the shifted form
    const Rational y0(BigInt(num(rng)), BigInt(den(rng)));
    Rational via_shift = 0;
    Rational factor = 1;
    for (const Rational& a : shifted) {
      via_shift += a * factor;
      factor *= y0 - alpha;
    }
    CHECK(via_shift == p.evaluate(y0));
  }
}

TEST_CASE("printing") {
  CHECK(Polynomial({1, -1, 1}).str() == "1 - y + y^2");
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial({0, Rational(BigInt(-1), BigInt(2))}).str("t") == "-1/2*t");
}
