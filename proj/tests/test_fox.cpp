#include <random>

#include "doctest.h"
#include "knotcert/constructions.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/fox.hpp"
#include "test_util.hpp"

using namespace knotcert;
using testutil::C;
using testutil::P;
using testutil::T;

namespace {

Word L(const std::string& g, std::int64_t e = 1) { return Word::letter(g, e); }
GroupRingElement E(const Word& w, long c = 1) { return GroupRingElement::of(w, c); }

// Letter-by-letter Fox derivative straight from the two axioms.
GroupRingElement naive_fox(const Word& w, const std::string& g) {
  GroupRingElement out;
  Word prefix;
  for (const auto& s : w.syllables()) {
    const std::int64_t step = s.exp < 0 ? -1 : 1;
    for (std::int64_t i = 0; i != s.exp; i += step) {
      const Word next = prefix * L(s.gen, step);
      if (s.gen == g) out += step > 0 ? E(prefix) : E(next, -1);
      prefix = next;
    }
  }
  return out;
}

LaurentPoly torus_delta(std::int64_t p, std::int64_t q) {
  return canonicalize(divide_exact((T(p * q) - C(1)) * (T(1) - C(1)),
                                   (T(p) - C(1)) * (T(q) - C(1))));
}

}  // namespace

TEST_CASE("fox_derivative examples") {
  CHECK(fox_derivative(L("x", 3), "x") == E(Word()) + E(L("x")) + E(L("x", 2)));
  CHECK(fox_derivative(L("x", -1), "x") == E(L("x", -1), -1));
  const Word c = commutator(L("x"), L("y"));
  CHECK(fox_derivative(c, "x") == E(Word()) - E(L("x") * L("y") * L("x", -1)));
  CHECK(fox_derivative(L("y", 5), "x").is_zero());
  CHECK(fox_derivative(Word(), "x").is_zero());
}

TEST_CASE("fox_derivative matches the letter-level definition (oracle)") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> gens{"a", "b", "c", "d"};
  for (int i = 0; i < 300; ++i) {
    const Word w = testutil::random_word(rng, gens, 30);
    for (const auto& g : gens) CHECK(fox_derivative(w, g) == naive_fox(w, g));
  }
}

TEST_CASE("fundamental formula sum_g dw/dg (g - 1) = w - 1 (property)") {
  std::mt19937_64 rng(42);
  const std::vector<std::string> gens{"a", "b", "c", "d"};
  for (int i = 0; i < 300; ++i) {
    const Word w = testutil::random_word(rng, gens, 40);
    GroupRingElement lhs;
    for (const auto& g : gens) lhs += fox_derivative(w, g) * (E(L(g)) - E(Word()));
    CHECK(lhs == E(w) - E(Word()));
  }
}

TEST_CASE("product rule (property)") {
  std::mt19937_64 rng(43);
  const std::vector<std::string> gens{"a", "b"};
  for (int i = 0; i < 200; ++i) {
    const Word u = testutil::random_word(rng, gens, 15), v = testutil::random_word(rng, gens, 15);
    CHECK(fox_derivative(u * v, "a") == fox_derivative(u, "a") + u * fox_derivative(v, "a"));
  }
}

TEST_CASE("abelianize_element") {
  const DegreeMap d{{"x", 1}, {"y", 1}};
  CHECK(abelianize_element(E(Word()) - E(L("x") * L("y") * L("x", -1)), d) == C(1) - T(1));
  CHECK(abelianize_element(GroupRingElement(), d).is_zero());
  CHECK(abelianize_element(E(Word()) + E(L("x")) + E(L("x", 2)), {{"x", 1}}) == P(0, {1, 1, 1}));
  CHECK_THROWS_AS(abelianize_element(E(L("q")), d), UnmappedGenerator);
}

TEST_CASE("alexander_matrix") {
  const Presentation free1({"x"}, {});
  const LaurentMatrix empty = alexander_matrix(free1, {{"x", 1}});
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 1);

  const Presentation trefoil = standard_presentation(TorusKnotParams::make(2, 3));
  const LaurentMatrix m = alexander_matrix(trefoil, {{"x", 3}, {"y", -2}});
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == C(1) + T(3));
  CHECK(m(0, 1) == T(6) * (C(1) + T(-2) + T(-4)));

  const Presentation tab = gamma_tab_presentation(2);
  const LaurentMatrix mt = alexander_matrix(tab, {{"t", 1}, {"a", 0}, {"b", 0}});
  CHECK(canonicalize(mt(0, 1)) == p_poly(2));
  CHECK(mt(0, 2).is_zero());
}

TEST_CASE("elementary_ideal") {
  const LaurentPoly p = p_poly(2);
  const LaurentPoly s = C(1) - T(1);
  const LaurentMatrix m(3, 2, {p, LaurentPoly(), LaurentPoly(), p, s, -s});
  const IdealGenerators e0 = elementary_ideal(m, 0);
  CHECK(e0.gens == std::vector<LaurentPoly>{canonicalize(p * p), canonicalize(s * p)});
  CHECK(e0.gcd() == p);
  CHECK(elementary_ideal(m, 2).is_unit_ideal());
  CHECK(elementary_ideal(m, 5).is_unit_ideal());
  CHECK(elementary_ideal(LaurentMatrix(2, 2), 0).is_zero_ideal());
  CHECK(elementary_ideal(LaurentMatrix(1, 3), 0).is_zero_ideal());
  CHECK(IdealGenerators::from({T(3), p}).gens == std::vector<LaurentPoly>{C(1)});
  CHECK(IdealGenerators::from({LaurentPoly(), p, p.shifted(2)}).gens ==
        std::vector<LaurentPoly>{p});
}

TEST_CASE("alexander_polynomial examples") {
  CHECK(alexander_polynomial(Presentation({"a"}, {})) == C(1));
  CHECK(alexander_polynomial(torus_wirtinger(2)) == P(0, {1, -1, 1}));
  CHECK(alexander_polynomial(torus_wirtinger(3)) == P(0, {1, -1, 0, 1, 0, -1, 1}));
  CHECK_THROWS_AS(alexander_polynomial(Presentation({"x"}, {L("x", 2)})),
                  NotInfiniteCyclicAbelianization);
  CHECK_THROWS_AS(alexander_polynomial(Presentation({"x", "y"}, {})),
                  NotInfiniteCyclicAbelianization);
}

TEST_CASE("torus knot polynomials from the two-generator presentation (oracle)") {
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t q = 2; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Presentation pres = standard_presentation(TorusKnotParams::make(p, q));
      CHECK(alexander_polynomial(pres) == torus_delta(p, q));
      // Deleting the other column gives the same polynomial.
      CHECK(alexander_polynomial(pres, "y") == torus_delta(p, q));
    }
}

TEST_CASE("invariance under presentation changes") {
  for (int p = 2; p <= 4; ++p) {
    const Presentation w = torus_wirtinger(p);
    for (const auto& g : w.generators()) CHECK(alexander_polynomial(w, g) == p_poly(p));
    // Same group without the Wirtinger flag: maximal-minor gcd path.
    const Presentation unflagged(w.generators(), w.relators());
    CHECK(alexander_polynomial(unflagged) == p_poly(p));
    // Connected sum with the mirror: Delta^2.
    CHECK(alexander_polynomial(double_presentation(p).presentation) == p_poly(p) * p_poly(p));
  }
  const Presentation tab = gamma_tab_presentation(2);
  CHECK_THROWS_AS(alexander_polynomial(tab, "a"), InputError);
  CHECK_THROWS_AS(alexander_polynomial(tab, "nope"), InputError);
}
