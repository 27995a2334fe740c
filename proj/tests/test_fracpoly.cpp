#include <random>
#include <set>

#include "doctest.h"
#include "jungdesing/fracpoly.hpp"
#include "jungdesing/parse.hpp"

using namespace jd;

namespace {

const std::vector<std::string> kXZ{"x1", "x2", "z"};
const std::vector<std::string> kUVW{"u", "v", "w"};

Mon m2(Q a, Q b) { return mon_from({a, b}); }
ZPoly zp(const std::string& s, const std::vector<std::string>& names = kXZ) {
  return ZPoly::from_mpoly(parse_poly(s, names));
}
ZPoly zfrac(const std::string& s) {
  // fractional exponents: split by z-degree by hand
  FracPoly p = parse_fracpoly(s, kXZ);
  std::vector<FracPoly> cs;
  for (const auto& [m, c] : p.terms()) {
    int i = static_cast<int>(m[2].num());
    if (static_cast<int>(cs.size()) <= i) cs.resize(i + 1, FracPoly(p.tower(), 2));
    Mon e = m;
    e[2] = 0;
    cs[i].add_term(e, c);
  }
  return ZPoly(2, cs);
}

const char* kF0 = "z^6+3*x2*z^4+x1^2*x2^3*z^3+3*x2^2*z^2+x2^3";

LatticeHom sigma1() {
  Tower q = rational_field();
  return LatticeHom(Lattice::standard(2), q, {fld::from_q(*q, 1), fld::from_q(*q, -1)});
}

FracPoly random_frac(std::mt19937& rng, int terms) {
  Tower q = rational_field();
  FracPoly p(q, 2);
  for (int k = 0; k < terms; ++k) {
    Mon m = m2(Q(static_cast<std::int64_t>(rng() % 7), 1 + static_cast<std::int64_t>(rng() % 3)),
               Q(static_cast<std::int64_t>(rng() % 7), 1 + static_cast<std::int64_t>(rng() % 2)));
    p.add_term(m, fld::from_q(*q, mpq_class(static_cast<int>(rng() % 9) - 4)));
  }
  return p;
}

ZPoly random_monic(std::mt19937& rng, int d) {
  std::vector<FracPoly> cs;
  for (int i = 0; i < d; ++i) cs.push_back(random_frac(rng, 1 + rng() % 3));
  cs.push_back(FracPoly::constant(rational_field(), 2, mpq_class(1)));
  return ZPoly(2, cs);
}

}  // namespace

TEST_CASE("initial terms") {
  auto [m, c] = parse_fracpoly("3*v^2+v^3", {"u", "v"}).initial_term();
  CHECK(m == m2(0, 2));
  CHECK(c.rational() == mpq_class(3));
  auto [m1, c1] = parse_fracpoly("x2^(1/2)+1/8*x1^(2/3)*x2", {"x1", "x2"}).initial_term();
  CHECK(m1 == m2(0, Q(1, 2)));
  CHECK(c1.is_one());
  auto [m0, c0] = parse_fracpoly("7/3", {"x1", "x2"}).initial_term();
  CHECK(m0.is_zero());
  CHECK(c0.rational() == mpq_class(7, 3));
  CHECK_THROWS_AS(FracPoly(rational_field(), 2).initial_term(), std::domain_error);
}

TEST_CASE("printing with fractional exponents") {
  FracPoly p = parse_fracpoly("x2^(1/2)+1/8*x1^(2/3)*x2 - x1^2", {"x1", "x2"});
  CHECK(p.str() == "x2^(1/2) + 1/8*x1^(2/3)*x2 - x1^2");
  CHECK(p.truncated(Q(3, 2)).str() == "x2^(1/2)");
  CHECK(p.lattice() == Lattice::parse("1/3,0;0,1/2"));
}

TEST_CASE("edge equations of the worked example") {
  ZPoly f0 = zp(kF0);
  EdgeData e = edge_equation(f0, m2(0, Q(1, 2)));
  CHECK(e.poly == zp("z^6+3*x2*z^4+3*x2^2*z^2+x2^3"));
  CHECK(e.value == m2(0, 3));

  ZPoly f1 = shift(f0.apply(sigma1()), parse_fracpoly("x2^(1/2)", {"x1", "x2"}));
  CHECK(f1.coeff(3) == parse_fracpoly("8*x2^(3/2)-x1^2*x2^3", {"x1", "x2"}));
  EdgeData e1 = edge_equation(f1, m2(Q(2, 3), 1));
  CHECK(e1.poly == zfrac("8*x2^(3/2)*z^3-x1^2*x2^(9/2)"));
  CHECK(e1.size() == 2);

  ZPoly lin = zp("z-u", {"u", "z"});
  CHECK(edge_equation(lin, mon_from({1})).poly == lin);
}

TEST_CASE("slopes of the worked example") {
  ZPoly f0 = zp(kF0);
  CHECK(nontrivial_slopes(f0, m2(-1, -1)) == std::vector<Mon>{m2(0, Q(1, 2))});
  ZPoly f1 = shift(f0.apply(sigma1()), parse_fracpoly("x2^(1/2)", {"x1", "x2"}));
  CHECK(nontrivial_slopes(f1, m2(0, Q(1, 2))) == std::vector<Mon>{m2(Q(2, 3), 1)});
  CHECK(nontrivial_slopes(zp("z^4"), m2(-1, -1)).empty());
}

TEST_CASE("edge certification with truncated coefficients") {
  // the hidden constant term x2^5 cannot be seen below degree 5
  ZPoly g = zp("z^2+x1*x2*z+x2^5");
  ZPoly low = g.truncated(3);
  CHECK_THROWS_AS(edge_equation(low, m2(1, 1), Q(3)), PrecisionError);
  CHECK_NOTHROW(edge_equation(g.truncated(10), m2(1, 1), Q(10)));
}

TEST_CASE("lattice homomorphisms act on coefficients") {
  ZPoly f0 = zp(kF0);
  ZPoly expect = zp("z^6-3*x2*z^4-x1^2*x2^3*z^3+3*x2^2*z^2-x2^3");
  CHECK(f0.apply(sigma1()) == expect);
  CHECK(f0.apply(LatticeHom::identity(Lattice::standard(2), rational_field())) == f0);
  CHECK(f0.apply(sigma1()).apply(sigma1().inverse()) == f0);
  FracPoly half = parse_fracpoly("x2^(1/2)", {"x1", "x2"});
  CHECK_THROWS_AS(half.apply(sigma1()), std::domain_error);
}

TEST_CASE("shifts") {
  ZPoly f = zp("z^2-u", {"u", "z"});
  ZPoly g = shift(f, parse_fracpoly("u^(1/2)", {"u"}));
  CHECK(g.str({"u"}) == "z^2 + 2*u^(1/2)*z");
  CHECK(shift(f, FracPoly(rational_field(), 1)) == f);

  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    ZPoly h = random_monic(rng, 2 + rng() % 3);
    FracPoly a = random_frac(rng, 2), b = random_frac(rng, 2);
    CHECK(shift(shift(h, a), b) == shift(h, a + b));
    Q bound(5, 2);
    CHECK(shift_trunc(h, a, bound) == shift(h, a).truncated(bound));
  }
}

TEST_CASE("quasi-ordinary test") {
  ZPoly f0 = zp("w^6+3*u^2*v^3*w^4+u^4*v^5*w^3+3*u^4*v^6*w^2+u^6*v^9", kUVW);
  auto q = is_quasi_ordinary(f0);
  CHECK(q.quasi_ordinary);
  CHECK(q.exponents == std::vector<int>{34, 47});
  CHECK(q.discriminant == parse_poly("729*u^34*v^47*(u^2*v-64)", kUVW));
  CHECK_FALSE(is_quasi_ordinary(zp("w^2-(u+v)", kUVW)).quasi_ordinary);
  CHECK(is_quasi_ordinary(zp("w-u", kUVW)).quasi_ordinary);
  CHECK_THROWS_AS(is_quasi_ordinary(zp("2*w^2-u", kUVW)), std::invalid_argument);
}

TEST_CASE("edge properties on random polynomials") {
  std::mt19937 rng(19);
  for (int it = 0; it < 60; ++it) {
    ZPoly g = random_monic(rng, 2 + rng() % 4);
    Mon lower = m2(Q(-1), Q(-1));
    auto slopes = nontrivial_slopes(g, lower);
    std::set<Mon, GradedLess> found(slopes.begin(), slopes.end());

    // brute force: every difference of support points is a candidate
    std::set<Mon, GradedLess> cands;
    for (int i = 0; i <= g.degree(); ++i)
      for (int j = i + 1; j <= g.degree(); ++j)
        for (const auto& [mi, ci] : g.coeffs()[i].terms())
          for (const auto& [mj, cj] : g.coeffs()[j].terms()) cands.insert(Q(1, j - i) * (mi - mj));
    for (const auto& n : cands) {
      if (!n.nonneg()) continue;
      EdgeData e = edge_equation(g, n);
      CHECK((e.size() >= 2) == (found.count(n) > 0));
    }
    for (const auto& n : slopes) {
      EdgeData e = edge_equation(g, n);
      for (int i = 0; i <= g.degree(); ++i)
        for (const auto& [m, c] : g.coeffs()[i].terms()) {
          Mon v = m + Q(i) * n;
          bool on = !e.poly.coeff(i).is_zero() && e.poly.coeff(i).order() == m;
          if (on)
            CHECK(v == e.value);
          else
            CHECK(graded_compare(v, e.value) > 0);
        }
      // the monic top term is never below the edge
      CHECK(graded_compare(Q(g.degree()) * n, e.value) >= 0);
    }
  }
}
