#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "knotcert/errors.hpp"
#include "knotcert/laurent.hpp"
#include "test_util.hpp"

using namespace knotcert;
using testutil::C;
using testutil::P;
using testutil::T;

namespace {

std::complex<double> eval(const LaurentPoly& f, std::complex<double> z) {
  std::complex<double> s = 0;
  for (const auto& [e, c] : f.terms()) s += c.get_d() * std::pow(z, static_cast<double>(e));
  return s;
}

int euler_phi(int n) {
  int r = 0;
  for (int k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
  return r;
}

}  // namespace

TEST_CASE("construction keeps the sparse invariant") {
  CHECK(LaurentPoly().is_zero());
  CHECK(C(0).is_zero());
  CHECK(P(-2, {0, 0, 0}).is_zero());
  const LaurentPoly f = P(-1, {0, 3, 0, -2});
  CHECK(f.term_count() == 2);
  CHECK(f.min_exp() == 0);
  CHECK(f.max_exp() == 2);
  CHECK(f.coeff(1) == 0);
  CHECK((f - f).is_zero());
}

TEST_CASE("to_string") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P(0, {1, -1, 1}).to_string() == "t^2 - t + 1");
  CHECK(P(-2, {1, -1}).to_string() == "-t^-1 + t^-2");
  CHECK(C(-7).to_string() == "-7");
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(LaurentPoly()).is_zero());
  // -t^-1 + t^-2: shift by t^2 gives 1 - t, then the leading sign is flipped.
  const LaurentPoly f = P(-2, {1, -1});
  const LaurentPoly g = canonicalize(f);
  CHECK(g == P(0, {-1, 1}));
  CHECK(g == f * LaurentPoly::monomial(-1, 2));
  CHECK(canonicalize(P(0, {1, -1, 1})) == P(0, {1, -1, 1}));
  CHECK(canonicalize(g) == g);
}

TEST_CASE("canonicalize is idempotent and unit-invariant (property)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly f = testutil::random_poly(rng);
    const LaurentPoly g = canonicalize(f);
    CHECK(canonicalize(g) == g);
    CHECK(canonicalize(f * LaurentPoly::monomial(-1, 5)) == g);
    if (!f.is_zero()) {
      CHECK(g.min_exp() == 0);
      CHECK(g.leading_coeff() > 0);
    }
  }
}

TEST_CASE("laurent_arith") {
  const LaurentPoly a = P(0, {1, 1}), b = P(0, {-1, 1});
  CHECK(laurent_arith(ArithOp::Mul, a, b) == P(0, {-1, 0, 1}));
  CHECK(laurent_arith(ArithOp::Add, a, LaurentPoly()) == a);
  CHECK(laurent_arith(ArithOp::Sub, a, a).is_zero());
  CHECK(laurent_arith(ArithOp::Mul, P(0, {1, -1, 1}), P(0, {1, 0, -1, 0, 1})) ==
        P(0, {1, -1, 0, 1, 0, -1, 1}));
}

TEST_CASE("ring axioms on random polynomials (property)") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto f = testutil::random_poly(rng), g = testutil::random_poly(rng),
               h = testutil::random_poly(rng);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK((f + g).at_one() == f.at_one() + g.at_one());
    CHECK((f * g).at_one() == f.at_one() * g.at_one());
  }
}

TEST_CASE("big coefficients do not overflow") {
  const LaurentPoly f = P(0, {1, 1}).pow(100);
  CHECK(f.coeff(50) == BigInt("100891344545564193334812497256"));
  CHECK(f.at_one() == BigInt(1) << 100);
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(P(0, {-1, 0, 1}), P(0, {-1, 1})) == P(0, {1, 1}));
  const LaurentPoly num = (T(6) - C(1)) * (T(1) - C(1));
  const LaurentPoly den = (T(3) - C(1)) * (T(2) - C(1));
  CHECK(divide_exact(num, den) == P(0, {1, -1, 1}));
  CHECK_THROWS_AS(divide_exact(P(0, {1, 0, 1}), P(0, {1, 1})), NotDivisible);
  CHECK_THROWS_AS(divide_exact(C(1), LaurentPoly()), DivisionByZero);
  CHECK_THROWS_AS(divide_exact(C(3), C(2)), NotDivisible);
  CHECK(divide_exact(LaurentPoly(), P(0, {1, 1})).is_zero());
  CHECK(divide_exact(T(-3), T(2)) == T(-5));
  CHECK(is_unit(T(-4)));
  CHECK(is_unit(LaurentPoly::monomial(-1, 3)));
  CHECK_FALSE(is_unit(C(2)));
}

TEST_CASE("divide_exact inverts multiplication (property)") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto f = testutil::random_poly(rng), g = testutil::random_poly(rng);
    if (g.is_zero()) continue;
    CHECK(divide_exact(f * g, g) == f);
    const auto q = try_divide(f * g + C(1), g);
    if (q) CHECK(*q * g == f * g + C(1));
  }
}

TEST_CASE("cyclotomic small cases") {
  CHECK(cyclotomic(1) == P(0, {-1, 1}));
  CHECK(cyclotomic(2) == P(0, {1, 1}));
  CHECK(cyclotomic(12) == P(0, {1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), InvalidIndex);
  CHECK_THROWS_AS(cyclotomic(-3), InvalidIndex);
  // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  CHECK(cyclotomic(105).coeff(7) == -2);
}

TEST_CASE("cyclotomic against complex roots of unity (oracle)") {
  for (int n = 1; n <= 60; ++n) {
    const LaurentPoly phi = cyclotomic(n);
    CHECK(phi.min_exp() == 0);
    CHECK(phi.max_exp() == euler_phi(n));
    CHECK(phi.leading_coeff() == 1);
    for (int k = 1; k <= n; ++k) {
      const auto z = std::polar(1.0, 2 * std::numbers::pi * k / n);
      const double v = std::abs(eval(phi, z));
      if (std::gcd(k, n) == 1)
        CHECK(v < 1e-7);
      else
        CHECK(v > 1e-7);
    }
  }
}

TEST_CASE("t^n - 1 is the product of Phi_d over d | n (property)") {
  for (int n = 1; n <= 156; ++n) {
    LaurentPoly prod = C(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == T(n) - C(1));
  }
}

TEST_CASE("laurent_gcd") {
  const std::vector<LaurentPoly> a{P(0, {-1, 0, 1}), P(0, {-1, 1})};
  CHECK(laurent_gcd(a) == P(0, {-1, 1}));
  const LaurentPoly p2 = P(0, {1, -1, 1});
  CHECK(laurent_gcd(p2 * p2, (T(1) - C(1)) * p2) == p2);
  CHECK(laurent_gcd(C(6), LaurentPoly::monomial(4, 1)) == C(2));
  CHECK(laurent_gcd(LaurentPoly(), P(-3, {-2, 4})) == P(0, {-2, 4}));
  const std::vector<LaurentPoly> zeros{LaurentPoly(), LaurentPoly()};
  CHECK_THROWS_AS(laurent_gcd(zeros), AllZero);
  CHECK_THROWS_AS(laurent_gcd(std::span<const LaurentPoly>{}), AllZero);
}

TEST_CASE("gcd divides its inputs and absorbs common factors (property)") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto f = testutil::random_poly(rng, 4, 5), g = testutil::random_poly(rng, 4, 5),
               h = testutil::random_poly(rng, 3, 3);
    if (h.is_zero() || (f.is_zero() && g.is_zero())) continue;
    const LaurentPoly d = laurent_gcd(f * h, g * h);
    CHECK(d == canonicalize(d));
    CHECK(divides(d, f * h));
    CHECK(divides(d, g * h));
    CHECK(divides(canonicalize(h), d));
  }
}
