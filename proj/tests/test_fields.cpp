#include <random>

#include "doctest.h"
#include "jungdesing/factor.hpp"

using namespace jd;

namespace {

UPoly qpoly(std::vector<long> cs, const Tower& t = rational_field()) {
  std::vector<mpq_class> q;
  for (auto c : cs) q.emplace_back(c);
  return UPoly::from_rationals(t, q);
}

UPoly product(const std::vector<UPoly>& fs) {
  UPoly p = qpoly({1}, fs.front().tower());
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

TEST_CASE("exponent rationals reduce and compare") {
  Q a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Q(3, 2) == Q(0));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK(Q(-7, 2).floor() == -4);
  CHECK(Q(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Q(INT64_MAX) * Q(2), std::overflow_error);
  CHECK(lcm_checked(4, 6) == 12);
}

TEST_CASE("graded order puts total degree first") {
  Mon a = mon_from({Q(1), Q(0)}), b = mon_from({Q(0), Q(1)}), c = mon_from({Q(0), Q(2)});
  CHECK(graded_compare(b, a) < 0);
  CHECK(graded_compare(a, c) < 0);
}

TEST_CASE("algebraic level arithmetic") {
  Tower k = adjoin_algebraic(rational_field(), qpoly({-2, 0, 1}).coeffs());
  FieldElement r = FieldElement::generator(k);
  CHECK((r * r).rational() == mpq_class(2));
  FieldElement x = r + FieldElement(k, mpq_class(1));
  CHECK((x * x.inverse()).is_one());
  CHECK(r.str() == "g1");
  CHECK_THROWS(adjoin_algebraic(rational_field(), qpoly({-4, 0, 1}).coeffs()));
}

TEST_CASE("nested towers embed automatically") {
  Tower k1 = adjoin_algebraic(rational_field(), qpoly({-2, 0, 1}).coeffs());
  // y^2 - g1 over Q(sqrt 2)
  UPoly m = UPoly(k1, {fld::neg(*k1, fld::gen(*k1)), fld::zero(*k1), fld::one(*k1)});
  Tower k2 = adjoin_algebraic(k1, m.coeffs());
  FieldElement a = FieldElement::generator(k2), b = FieldElement::generator(k1);
  CHECK(a * a == b);
  CHECK((a * a * a * a).rational() == mpq_class(2));
  CHECK(k2->algebraic_degree() == 4);
}

TEST_CASE("transcendental level keeps reduced fractions") {
  Tower ks = adjoin_transcendental(rational_field());
  FieldElement s = FieldElement::generator(ks), one(ks, mpq_class(1));
  FieldElement f = (s * s - one) / (s - one);
  CHECK(f == s + one);
  CHECK(!f.rational());
}

TEST_CASE("integer factorization recovers known factors") {
  auto fs = factor_univariate(qpoly({-1, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].degree() == 1);
  CHECK(fs[2] == qpoly({1, 0, 1}));
  CHECK(factor_univariate(qpoly({1, 0, -10, 0, 1})).size() == 1);
  CHECK(factor_univariate(qpoly({1, 0, 0, 0, 0, 0, 0, 0, 1})).size() == 1);
}

TEST_CASE("random products factor back") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<UPoly> parts;
    for (int k = 0; k < 3; ++k) {
      std::vector<long> c;
      int deg = 1 + trial % 3;
      for (int i = 0; i < deg; ++i) c.push_back(d(rng));
      c.push_back(1);
      parts.push_back(qpoly(c));
    }
    UPoly f = product(parts);
    auto fs = factor_univariate(f);
    // squarefree product of the factors divides f and has the same roots
    UPoly g = product(fs);
    CHECK(poly_gcd(f, g) == g.monic());
    for (const auto& h : fs) CHECK(factor_univariate(h).size() == 1);
    CHECK(fs.size() >= 1);
  }
}

TEST_CASE("Trager splitting over quadratic fields") {
  Tower k = adjoin_algebraic(rational_field(), qpoly({-2, 0, 1}).coeffs());
  auto fs = factor_univariate(qpoly({1, 0, 0, 0, 1}, k));
  REQUIRE(fs.size() == 2);
  CHECK(product(fs) == qpoly({1, 0, 0, 0, 1}, k));
  Tower ki = adjoin_algebraic(rational_field(), qpoly({1, 0, 1}).coeffs());
  CHECK(factor_univariate(qpoly({1, 0, 0, 0, 1}, ki)).size() == 2);
  Tower k3 = adjoin_algebraic(rational_field(), qpoly({-3, 0, 1}).coeffs());
  CHECK(factor_univariate(qpoly({-2, 0, 1}, k3)).size() == 1);
}

TEST_CASE("factorization over a rational function field") {
  Tower ks = adjoin_transcendental(rational_field());
  FieldElement s = FieldElement::generator(ks);
  Elem ms2 = (-(s * s)).raw();
  UPoly f(ks, {ms2, fld::zero(*ks), fld::one(*ks)});
  auto fs = factor_univariate(f);
  REQUIRE(fs.size() == 2);
  CHECK(product(fs) == f);
  UPoly g(ks, {fld::neg(*ks, fld::gen(*ks)), fld::zero(*ks), fld::one(*ks)});
  CHECK(factor_univariate(g).size() == 1);
}

TEST_CASE("bivariate factorization") {
  Tower q = rational_field();
  MPoly u = MPoly::variable(q, 2, 0), v = MPoly::variable(q, 2, 1);
  auto fs = irred_factors(u * u - v * v);
  REQUIRE(fs.size() == 2);
  CHECK(irred_factors(u * u * u - v * v).size() == 1);
  MPoly p = (u * u + v * v * v + u * v) * (u - v * v + MPoly::constant(q, 2, mpq_class(3)));
  auto ps = irred_factors(p);
  REQUIRE(ps.size() == 2);
  MPoly prod = ps[0] * ps[1];
  CHECK((divides(prod, p) && divides(p, prod)));
  Tower k = adjoin_algebraic(q, qpoly({-2, 0, 1}).coeffs());
  MPoly uk = u.in(k), vk = v.in(k);
  CHECK(irred_factors(uk * uk - (vk * vk).scaled(fld::from_q(*k, 2))).size() == 2);
}

TEST_CASE("zero sets of zero-dimensional ideals") {
  Tower q = rational_field();
  MPoly u = MPoly::variable(q, 2, 0), v = MPoly::variable(q, 2, 1);
  MPoly two = MPoly::constant(q, 2, mpq_class(2));
  auto pts = zero_set({u * u - two, v * v - u});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].tower->algebraic_degree() == 4);
  auto origin = zero_set({u, v});
  REQUIRE(origin.size() == 1);
  CHECK(origin[0].coords[0].is_zero());
  CHECK(zero_set({u * v - MPoly::constant(q, 2, mpq_class(1)), u}).empty());
  CHECK_THROWS_AS(zero_set({v}), std::domain_error);
  auto four = zero_set({u * u - MPoly::constant(q, 2, mpq_class(1)), v * v - v});
  CHECK(four.size() == 4);
}
