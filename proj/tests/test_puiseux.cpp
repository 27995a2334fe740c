#include "doctest.h"
#include "jungdesing/parse.hpp"
#include "jungdesing/puiseux.hpp"
#include "support/qo_corpus.hpp"

using namespace jd;

namespace {

const std::vector<std::string> kX{"x1", "x2"};
const std::vector<std::string> kXZ{"x1", "x2", "z"};
const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kUVW{"u", "v", "w"};

FracPoly fp(const std::string& s, const std::vector<std::string>& names = kX, const Tower& t = rational_field()) {
  return parse_fracpoly(s, names, t);
}
ZPoly zp(const std::string& s, const std::vector<std::string>& names = kXZ, const Tower& t = rational_field()) {
  return ZPoly::from_mpoly(parse_poly(s, names, t));
}

const char* kDuvalF = "z^6+3*x2*z^4+x1^2*x2^3*z^3+3*x2^2*z^2+x2^3";
const char* kSurfaceF = "w^6+3*u^2*v^3*w^4+u^4*v^5*w^3+3*u^4*v^6*w^2+u^6*v^9";

// residual of sigma(f)(alpha) below the bound, computed without the library's
// verifier
bool residual_vanishes(const ParamSet& ps, const Parametrization& p, const Q& bound) {
  ZPoly g = ps.f.exact().apply(p.sigma);
  FracPoly a = p.alpha.expand(bound);
  Tower t = common_tower(g.tower(), a.tower());
  FracPoly acc(t, g.nvars());
  FracPoly power = FracPoly::constant(t, g.nvars(), fld::one(*t));
  for (int i = 0; i <= g.degree(); ++i) {
    acc = acc + g.coeff(i).in(t) * power;
    power = (power * a.in(t)).truncated(bound);
  }
  return acc.truncated(bound).is_zero();
}

}  // namespace

TEST_CASE("two Duval steps on the worked example") {
  ParamSet ps = param(zp(kDuvalF));
  REQUIRE(ps.params.size() == 1);
  const auto& p = ps.params[0];
  REQUIRE(p.steps.size() == 2);

  const auto& s1 = p.steps[0];
  CHECK(s1.slope == mon_from({Q(0), Q(1, 2)}));
  CHECK(s1.b == 2);
  CHECK(s1.c == IntVec{0, 1});
  CHECK(s1.u == 0);
  CHECK(s1.v == IntVec{0, 1});
  CHECK(s1.root.rational() == mpq_class(-1));
  CHECK(s1.edge == UPoly::from_rationals(rational_field(), {1, 3, 3, 1}));

  const auto& s2 = p.steps[1];
  CHECK(s2.slope == mon_from({Q(2, 3), Q(1)}));
  CHECK(s2.b == 3);
  CHECK(s2.c == IntVec{2, 6});
  CHECK(s2.u == 1);
  CHECK(s2.v == IntVec{-1, 0});
  CHECK(s2.root.rational() == mpq_class(1, 8));

  // combined twist x1 -> x1/8, x2 -> -x2
  CHECK(p.sigma.evaluate(mon_from({Q(1), Q(0)})).q == mpq_class(1, 8));
  CHECK(p.sigma.evaluate(mon_from({Q(0), Q(1)})).q == mpq_class(-1));
  CHECK(tower_str(p.tower) == "Q");
  CHECK(p.order == mon_from({Q(0), Q(1, 2)}));
  // the second segment solves the twisted edge equations with +1/8
  CHECK(p.alpha.expand(Q(2) + Q(2, 3)) == fp("x2^(1/2)+1/8*x1^(2/3)*x2"));
  CHECK(ps.field_degrees == std::vector<long>{1});
  CHECK(ps.lattice_indices == std::vector<std::int64_t>{6});
}

TEST_CASE("worked example: continuation and residuals") {
  ParamSet ps = param(zp(kDuvalF));
  const auto& p = ps.params[0];
  CHECK(p.alpha.expand(Q(6)) ==
        fp("x2^(1/2)+1/8*x1^(2/3)*x2+1/128*x1^(4/3)*x2^(3/2)-1/32768*x1^(8/3)*x2^(5/2)"));
  for (int n : {4, 8, 12}) CHECK(residual_vanishes(ps, p, Q(n)));
}

TEST_CASE("surface chart polynomial has one parametrization") {
  ParamSet ps = param(zp(kSurfaceF, kUVW));
  REQUIRE(ps.params.size() == 1);
  const auto& p = ps.params[0];
  CHECK(p.lattice == Lattice::parse("0,1/2;1/3,1/6"));
  CHECK(ps.total() == 6);
  CHECK(ps.field_degrees[0] == 1);
  CHECK(ps.lattice_indices[0] == 6);
  // v -> -v as printed; u -> 8u under the shortest Bezout vector
  CHECK(p.sigma.evaluate(mon_from({Q(0), Q(1)})).q == mpq_class(-1));
  CHECK(p.sigma.evaluate(mon_from({Q(1), Q(0)})).q == mpq_class(8));
  const auto& s1 = p.steps.at(0);
  CHECK(s1.b == 2);
  CHECK(s1.c == IntVec{2, 3});
  CHECK(s1.u == -1);
  CHECK(s1.v == IntVec{0, 1});
  CHECK(s1.root.rational() == mpq_class(-1));

  FracPoly printed = fp(
      "-8*u*v^(3/2)+8*u^(4/3)*v^(5/3)-4*u^(5/3)*v^(11/6)+u^(7/3)*v^(13/6)-1/2*u^3*v^(5/2)"
      "+5/16*u^(11/3)*v^(17/6)-7/32*u^(13/3)*v^(19/6)",
      kUV);
  CHECK(p.alpha.expand(Q(46, 6)) == printed);
  for (int n : {4, 8, 12}) CHECK(residual_vanishes(ps, p, Q(n)));
}

TEST_CASE("univariate example over Q(s)") {
  Tower qs = adjoin_transcendental(rational_field(), "s");
  ParamSet ps = param(zp("w^6+3*s^3*t^2*w^4+s^5*t^4*w^3+3*s^6*t^4*w^2+s^9*t^6", {"t", "w"}, qs));
  REQUIRE(ps.params.size() == 1);
  const auto& p = ps.params[0];
  CHECK(p.tower->kind == LevelKind::Algebraic);
  CHECK(p.tower->parent.get() == qs.get());
  // gamma^2 + s^3 = 0
  FieldElement g = FieldElement::generator(p.tower);
  FieldElement s = FieldElement::generator(qs).in(p.tower);
  CHECK((g * g + s * s * s).is_zero());
  CHECK(ps.field_degrees[0] == 2);
  CHECK(ps.lattice_indices[0] == 3);
  CHECK(ps.total() == 6);
  // t -> (-8/s^5) t
  FieldElement st(p.tower, p.sigma.evaluate(mon_from({Q(1)})));
  CHECK(st == FieldElement(p.tower, mpq_class(-8)) / s.pow(5));
  FracPoly head = p.alpha.expand(Q(2));
  FracPoly want = FracPoly::monomial(p.tower, 1, mon_from({Q(1)}), (FieldElement(p.tower, mpq_class(-8)) * g / s.pow(5)).raw()) +
                  FracPoly::monomial(p.tower, 1, mon_from({Q(4, 3)}), (FieldElement(p.tower, mpq_class(-8)) / s.pow(5)).raw()) +
                  FracPoly::monomial(p.tower, 1, mon_from({Q(5, 3)}), (FieldElement(p.tower, mpq_class(4)) * g / s.pow(8)).raw());
  CHECK(head == want);
  CHECK(residual_vanishes(ps, p, Q(6)));
}

TEST_CASE("square root of x1") {
  ParamSet ps = param(zp("z^2-x1"));
  REQUIRE(ps.params.size() == 1);
  const auto& p = ps.params[0];
  CHECK(p.lattice == Lattice::parse("1/2,0;0,1"));
  CHECK(tower_str(p.tower) == "Q");
  CHECK(p.sigma.is_identity());
  CHECK(p.alpha.expand(Q(10)) == fp("x1^(1/2)"));
  CHECK(ps.total() == 2);
  CHECK(verify_param_set(ps, Q(10)).ok);
}

TEST_CASE("linear and reducible inputs") {
  ParamSet lin = param(zp("z-u", {"u", "z"}));
  REQUIRE(lin.params.size() == 1);
  CHECK(lin.params[0].sigma.is_identity());
  CHECK(lin.params[0].alpha.expand(Q(5)) == fp("u", {"u"}));
  CHECK(lin.params[0].steps.empty());

  // z divides f: the zero root comes from the shortcut
  ParamSet zf = param(zp("z^2-x1*z"));
  CHECK(zf.params.size() == 2);
  CHECK(zf.total() == 2);
  CHECK(verify_param_set(zf, Q(8)).ok);

  // two conjugate branches split over Q
  ParamSet split = param(zp("z^2-x1^2"));
  CHECK(split.params.size() == 2);
  CHECK(verify_param_set(split, Q(8)).ok);

  // irreducible over Q but not over Q(i)
  ParamSet ext = param(zp("z^2+x1^2"));
  REQUIRE(ext.params.size() == 1);
  CHECK(ext.field_degrees[0] == 2);
  CHECK(ext.lattice_indices[0] == 1);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(param(zp("z^2-x1^2-x2^3")), std::invalid_argument);
  CHECK_THROWS_AS(param(zp("2*z^2-x1")), std::invalid_argument);
}

TEST_CASE("verifier catches a corrupted series") {
  ParamSet ps = param(zp(kDuvalF));
  REQUIRE(verify_param_set(ps, Q(5)).ok);
  ParamSet bad = ps;
  auto& a = bad.params[0].alpha;
  FracPoly head = a.expand(Q(2) + Q(2, 3));
  // flip the sign of the second term
  a = a - series_polynomial(fp("1/4*x1^(2/3)*x2"));
  CHECK_FALSE(a.expand(Q(2) + Q(2, 3)) == head);
  // the error is damped by the nearby conjugates, so look far enough out
  ParamReport rep = verify_param_set(bad, Q(8));
  CHECK_FALSE(rep.ok);
  CHECK(rep.index == std::optional<size_t>(0));
  CHECK(rep.message.find("residual") != std::string::npos);

  ParamSet dup = ps;
  dup.params.push_back(ps.params[0]);
  dup.field_degrees.push_back(1);
  dup.lattice_indices.push_back(6);
  CHECK_FALSE(verify_param_set(dup, Q(4)).ok);
}

TEST_CASE("lazy coefficients escalate precision") {
  // sigma(f) for the worked example with x2 replaced by the implicit
  // function y = x2 + x1*y^2: still quasi-ordinary, coefficients lazy
  Series y = implicit_function(zp("-x2+z-x1*z^2"));
  ZPoly f = zp(kDuvalF);
  std::vector<Series> cs;
  for (const auto& c : f.coeffs()) cs.push_back(evaluate_new(series_polynomial(c), {{1, 0}, {0, 1}},
                                                             {series_polynomial(fp("x1")), y}));
  SeriesPoly lazy(2, cs);
  REQUIRE_FALSE(lazy.is_exact());
  ParamSet ps = param(lazy, Lattice::standard(2));
  CHECK(ps.total() == 6);
  CHECK(verify_param_set(ps, Q(6)).ok);
}

TEST_CASE("degree identity on random quasi-ordinary polynomials") {
  corpus::QuasiOrdinaryBuilder gen(7);
  for (int k = 0; k < 50; ++k) {
    ZPoly f = gen.next();
    CAPTURE(f.str(kX));
    ParamSet ps = param(f);
    CHECK(ps.total() == f.degree());
    ParamReport rep = verify_param_set(ps, Q(6));
    CHECK_MESSAGE(rep.ok, rep.message);
  }
}
