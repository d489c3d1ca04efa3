#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktweb/poly.hpp"
#include "test_util.hpp"

using namespace ktweb;
using namespace ktweb::testutil;

namespace {

Poly2 random_poly(Rng& rng, int deg, int terms) {
  Poly2 p;
  for (int t = 0; t < terms; ++t) {
    p.add_term(rng.uniform_int(0, deg), rng.uniform_int(0, deg), rng.rational(8, 4));
  }
  return p;
}

// The Yatsun potential with the quartic coefficient set by the
// integrability condition (2*lambda/g^2 = 1).
Poly2 yatsun_potential() {
  Poly2 v;
  v.add_term(4, 0, Rat(-2));
  v.add_term(2, 2, Rat(-4));
  v.add_term(0, 4, Rat(-2));
  v.add_term(3, 0, Rat(4));
  v.add_term(1, 2, Rat(4));
  v.add_term(2, 0, Rat(-2));
  v.add_term(0, 2, Rat(-2));
  return v;
}

}  // namespace

TEST_CASE("derivatives and products of monomials") {
  const Poly2 xy = Poly2::monomial(1, 1, Rat(1));
  CHECK(xy.diff(1) == Poly2::monomial(0, 1, Rat(1)));

  const Poly2 sum = Poly2::monomial(1, 0, Rat(1)) + Poly2::monomial(0, 1, Rat(1));
  const Poly2 diff = Poly2::monomial(1, 0, Rat(1)) - Poly2::monomial(0, 1, Rat(1));
  const Poly2 prod = sum * diff;
  CHECK(prod == Poly2::monomial(2, 0, Rat(1)) - Poly2::monomial(0, 2, Rat(1)));
}

TEST_CASE("evaluation") {
  const Poly2 v = yatsun_potential();
  CHECK(v.eval(Rat(0), Rat(0)) == 0);
  // V(1, 2) = -2(1 + 8 + 16) + 4(1 + 4) - 2(1 + 4) = -40
  CHECK(v.eval(Rat(1), Rat(2)) == -40);
  CHECK(v.eval(1.0, 2.0) == doctest::Approx(-40.0));
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const Poly2 a = random_poly(rng, 5, 4);
    const Poly2 b = random_poly(rng, 5, 4);
    const Poly2 c = random_poly(rng, 5, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a * (b * c)) == ((a * b) * c));
    // derivation law
    CHECK((a * b).diff(1) == a.diff(1) * b + a * b.diff(1));
    CHECK(a.diff(1).diff(2) == a.diff(2).diff(1));
  }
}

TEST_CASE("no zero coefficients are stored") {
  Poly2 p;
  p.add_term(2, 3, Rat(5));
  p.add_term(2, 3, Rat(-5));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  p.set(1, 1, Rat(2));
  p.set(1, 1, Rat(0));
  CHECK(p.terms().empty());
  CHECK(p.degree() == -1);
}

TEST_CASE("exponent bounds") {
  CHECK_THROWS_AS(Poly2::monomial(40, 0, Rat(1)), DegreeOverflow);
  Poly2 small(4);
  small.set(4, 0, Rat(1));
  CHECK_THROWS_AS(small * small, DegreeOverflow);
  CHECK_THROWS_AS(small.set(0, 5, Rat(1)), DegreeOverflow);
  CHECK_THROWS_AS(Poly2::monomial(-1, 0, Rat(1)), DegreeOverflow);
}

TEST_CASE("affine substitution agrees with pointwise evaluation") {
  Rng rng(62);
  for (int i = 0; i < 40; ++i) {
    const Poly2 p = random_poly(rng, 4, 5);
    const Rat c = rng.rational(4, 3);
    const Rat s = rng.rational(4, 3);
    const Rat tx = rng.rational(4, 3);
    const Rat ty = rng.rational(4, 3);
    const Poly2 q = p.compose_affine(c, s, tx, ty);
    for (int k = 0; k < 5; ++k) {
      const Rat x = rng.rational(5, 3);
      const Rat y = rng.rational(5, 3);
      CHECK(q.eval(x, y) == p.eval(c * x - s * y + tx, s * x + c * y + ty));
    }
  }
}

TEST_CASE("two quarter turns equal a half turn") {
  Rng rng(63);
  const Poly2 p = random_poly(rng, 4, 6);
  const Poly2 quarter = p.compose_affine(Rat(0), Rat(1), Rat(0), Rat(0));
  const Poly2 twice = quarter.compose_affine(Rat(0), Rat(1), Rat(0), Rat(0));
  const Poly2 half = p.compose_affine(Rat(-1), Rat(0), Rat(0), Rat(0));
  CHECK(twice == half);
}
