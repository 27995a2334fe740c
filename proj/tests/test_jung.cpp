#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "jungdesing/jung.hpp"
#include "jungdesing/parse.hpp"

using namespace jd;

namespace {

const std::vector<std::string> kUVW{"u", "v", "w"};
const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kX{"x0", "x1", "x2", "x3"};

const char* kChart = "w^6+3*v*w^4+u^2*v*w^3+3*v^2*w^2+v^3";
const char* kF0 = "w^6+3*u^2*v^3*w^4+u^4*v^5*w^3+3*u^4*v^6*w^2+u^6*v^9";
const char* kSurface = "x0^6+3*x0^4*x2*x3+x0^3*x1^2*x2+3*x0^2*x2^2*x3^2+x2^3*x3^3";

MPoly uvw(const std::string& s) { return parse_poly(s, kUVW, rational_field()); }
MPoly uv(const std::string& s) { return parse_poly(s, kUV, rational_field()); }

std::vector<int> orders(const FormalPrimeDivisor& d) {
  std::vector<int> o;
  for (const auto& q : divisor_invariants(d).orders) o.push_back(static_cast<int>(q.num()));
  return o;
}

const FormalPrimeDivisor& find(const std::vector<FormalPrimeDivisor>& ds, const std::string& origin) {
  auto it = std::find_if(ds.begin(), ds.end(), [&](const FormalPrimeDivisor& d) { return d.origin == origin; });
  REQUIRE(it != ds.end());
  return *it;
}

FracPoly in_t(const std::string& s, const Tower& t) { return parse_fracpoly(s, {"t"}, t); }

void check_residuals(const MPoly& f, const std::vector<FormalPrimeDivisor>& ds) {
  for (const auto& d : ds) {
    CAPTURE(d.origin);
    for (int n : {8, 16}) CHECK(divisor_residual(f, d, Q(n)).is_zero());
  }
}

// the discriminant at a rational point, from the univariate resultant
mpq_class disc_at(const MPoly& f, long a, long b) {
  Tower q = rational_field();
  MPoly g = f.eval_var(0, fld::from_q(*q, mpq_class(a))).eval_var(1, fld::from_q(*q, mpq_class(b)));
  UPoly p(q, g.to_poly(2));
  int d = p.degree();
  mpq_class r = *resultant(p, p.derivative()).rational();
  return (d * (d - 1) / 2) % 2 ? mpq_class(-r) : r;
}

}  // namespace

TEST_CASE("chart discriminants of the running example") {
  MPoly f = uvw(kChart);
  MPoly disc = discriminant(f, 2);
  CHECK(disc == uvw("729*u^12*v^12-46656*u^8*v^13"));
  Tower q = rational_field();
  for (long a : {1, 2, -3})
    for (long b : {1, -1, 5})
      CHECK(disc.eval({fld::from_q(*q, mpq_class(a)), fld::from_q(*q, mpq_class(b)), fld::zero(*q)}).q == disc_at(f, a, b));

  DiscriminantFactors df = discriminant_factors(f);
  CHECK(df.factors.size() == 3);
  for (const char* e : {"u", "v", "u^4-64*v"}) CHECK(std::count(df.factors.begin(), df.factors.end(), normalize_unit(uv(e))) == 1);

  // u -> uv, v -> u^2 v^3 gives the surface chart polynomial
  MPoly u = uvw("u"), v = uvw("v"), w = uvw("w");
  MPoly g = f.subst({u * v, u * u * v * v * v, w});
  CHECK(g == uvw(kF0));
  CHECK(discriminant(g, 2) == uvw("729*u^36*v^48-46656*u^34*v^47"));
  CHECK(disc_at(g, 1, 2) == mpq_class(729 * (1L << 48) - 46656L * (1L << 47)));
}

TEST_CASE("normal crossing test") {
  CHECK(is_normal_crossing({uv("v"), uv("u")}));
  CHECK(is_normal_crossing({uv("u+v"), uv("v")}));
  CHECK(is_normal_crossing({uv("v"), uv("u^2*v+2*u+v")}));
  CHECK_FALSE(is_normal_crossing({uv("u-v"), uv("u+v")}));
  CHECK_FALSE(is_normal_crossing({uv("v"), uv("u^2-v")}));
  CHECK_FALSE(is_normal_crossing({uv("v")}));
}

TEST_CASE("divisor above a smooth branch curve") {
  MPoly f = uvw("w^2-u");
  auto ds = desing_local(f, {});
  REQUIRE(ds.size() == 1);
  const auto& d = ds[0];
  CHECK(d.origin == "curve u");
  CHECK(orders(d) == std::vector<int>{2, 0, 1});
  CHECK(divisor_invariants(d).degree == 1);
  CHECK(tower_str(d.tower) == "Q(s)");
  CHECK(d.image("u").expand(Q(10)) == in_t("t^2", d.tower));
  CHECK(d.image("v").expand(Q(10)) == in_t("s", d.tower));
  CHECK(d.image("w").expand(Q(10)) == in_t("t", d.tower));
  check_residuals(f, ds);
}

TEST_CASE("focus excludes curves away from the origin") {
  CHECK(desing_local(uvw("w^2-u+1"), {uv("u"), uv("v")}).empty());
  // the same curve is found with the whole plane in focus
  CHECK(desing_local(uvw("w^2-u+1"), {}).size() == 1);
}

TEST_CASE("surface chart polynomial: divisors above the axes and the crossing") {
  MPoly f = uvw(kF0);
  auto ds = desing_local(f, {});
  check_residuals(f, ds);

  const auto& phi3 = find(ds, "curve v");
  CHECK(orders(phi3) == std::vector<int>{0, 6, 9});
  CHECK(divisor_invariants(phi3).degree == 1);
  CHECK(phi3.image("u").expand(Q(20)) == in_t("s", phi3.tower));
  CHECK(phi3.image("v").expand(Q(20)) == in_t("-64*s^10*t^6", phi3.tower));
  CHECK(phi3.image("w").expand(Q(14)) == in_t("-512*s^16*t^9+512*s^18*t^10-256*s^20*t^11+64*s^24*t^13", phi3.tower));

  // over Q(s)(g1), g1^2 + s^3 = 0; u has order 3, not 6
  const auto& phi0 = find(ds, "curve u");
  CHECK(orders(phi0) == std::vector<int>{3, 0, 3});
  CHECK(divisor_invariants(phi0).degree == 2);
  FieldElement g1 = FieldElement::generator(phi0.tower);
  FieldElement s = FieldElement::generator(phi0.tower->parent).in(phi0.tower);
  CHECK((g1 * g1 + s.pow(3)).is_zero());
  auto term = [&](const FieldElement& c, int k) { return FracPoly::monomial(phi0.tower, 1, mon_from({Q(k)}), c.raw()); };
  FieldElement c8 = FieldElement(phi0.tower, mpq_class(-8)) / s.pow(5);
  CHECK(phi0.image("u").expand(Q(10)) == term(c8, 3));
  CHECK(phi0.image("v").expand(Q(10)) == in_t("s", phi0.tower));
  CHECK(phi0.image("w").expand(Q(6)) ==
        term(c8 * g1, 3) + term(c8, 4) + term(FieldElement(phi0.tower, mpq_class(4)) * g1 / s.pow(8), 5));

  const auto& phi1 = find(ds, "crossing (0,6),(1,4)");
  CHECK(orders(phi1) == std::vector<int>{1, 4, 7});
  CHECK(phi1.image("u").expand(Q(10)) == in_t("8*t", phi1.tower));
  CHECK(phi1.image("v").expand(Q(10)) == in_t("-s^6*t^4", phi1.tower));
  CHECK(phi1.image("w").expand(Q(8)) == in_t("-8*s^9*t^7", phi1.tower));

  const auto& phi2 = find(ds, "crossing (1,4),(2,2)");
  CHECK(orders(phi2) == std::vector<int>{2, 2, 5});
  CHECK(phi2.image("u").expand(Q(10)) == in_t("8*s*t^2", phi2.tower));
  CHECK(phi2.image("v").expand(Q(10)) == in_t("-s^4*t^2", phi2.tower));
  CHECK(phi2.image("w").expand(Q(12)) == in_t("-8*s^7*t^5+8*s^8*t^6-4*s^9*t^7+s^11*t^9-1/2*s^13*t^11", phi2.tower));
}

TEST_CASE("crossing count is the number of interior rays") {
  MPoly f = uvw(kF0);
  auto ds = divisors_above_crossing(f, {uv("v"), uv("u")});
  // one parametrization with four dual cone generators
  CHECK(ds.size() == 2);
  check_residuals(f, ds);
  // smooth crossing: the lattice stays standard and nothing is returned
  CHECK(divisors_above_crossing(uvw("w^2-w-u*v"), {uv("v"), uv("u")}).empty());
  CHECK_THROWS_AS(divisors_above_crossing(f, {uv("u-v"), uv("u+v")}), std::invalid_argument);
}

TEST_CASE("running example chart: valuations seen from the surface chart") {
  MPoly f = uvw(kChart);
  auto ds = desing_local(f, {});
  check_residuals(f, ds);
  // the chart map (u, v) -> (uv, u^2 v^3) inverts to u' = u^3/v, v' = v/u^2
  std::set<std::pair<std::vector<int>, long>> seen;
  for (const auto& d : ds) {
    auto o = orders(d);
    seen.insert({{3 * o[0] - o[1], o[1] - 2 * o[0], o[2]}, divisor_invariants(d).degree});
  }
  CHECK(seen.count({{3, 0, 3}, 2}) == 1);
  CHECK(seen.count({{1, 4, 7}, 1}) == 1);
  CHECK(seen.count({{2, 2, 5}, 1}) == 1);
  CHECK(seen.count({{0, 6, 9}, 1}) == 1);

  // the crossing is reached after three blow-ups
  const auto& c = find(ds, "crossing (1,4),(2,2)");
  CHECK(c.chain.size() == 3);
  CHECK(orders(c) == std::vector<int>{4, 10, 5});
}

TEST_CASE("two transversal lines separate after one blow-up") {
  MPoly f = uvw("w^2-u^2+v^2");
  auto ds = desing_recursive(f, {normalize_unit(uv("u-v")), normalize_unit(uv("u+v"))});
  REQUIRE_FALSE(ds.empty());
  for (const auto& d : ds) CHECK(d.chain.size() <= 2);
  check_residuals(f, ds);
}

TEST_CASE("focus soundness") {
  MPoly f = uvw(kChart);
  for (const auto& focus : std::vector<std::vector<MPoly>>{{uv("v")}, {uv("u"), uv("v")}}) {
    auto ds = desing_local(f, focus);
    REQUIRE_FALSE(ds.empty());
    for (const auto& d : ds) {
      CAPTURE(d.origin);
      for (const auto& g : focus) {
        auto o = compose(FracPoly::from_mpoly(g), {d.image("u"), d.image("v")}).order();
        REQUIRE(o);
        CHECK(Q(0) < *o);
      }
    }
  }
}

TEST_CASE("valuations are additive") {
  MPoly f = uvw(kChart);
  auto ds = desing_local(f, {});
  std::vector<MPoly> samples{uvw("u+v"), uvw("w-u*v"), uvw("u^4-64*v+w"), uvw("w^2+3*v"), uvw("u*w-v^2+1")};
  for (const auto& d : ds) {
    auto ord = [&](const MPoly& p) { return *compose(FracPoly::from_mpoly(p), d.images).order(); };
    for (size_t i = 0; i < samples.size(); ++i)
      for (size_t j = i; j < samples.size(); ++j) CHECK(ord(samples[i] * samples[j]) == ord(samples[i]) + ord(samples[j]));
  }
}

TEST_CASE("global run on the running example surface") {
  MPoly F = parse_poly(kSurface, kX, rational_field());
  auto m = choose_automorphism(F);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m[i][j] == (i == j ? 1 : 0));
  auto ds = desing_global(F);
  REQUIRE_FALSE(ds.empty());
  std::map<int, int> per_chart;
  std::set<std::pair<std::vector<Q>, long>> tuples;
  for (const auto& d : ds) {
    ++per_chart[d.chart];
    for (int n : {8, 16}) CHECK(divisor_residual(F, d, Q(n)).is_zero());
    // projective valuation vector, independent of the chart
    std::vector<Q> xo;
    for (const auto& x : kX) xo.push_back(*d.image(x).order());
    Q low = *std::min_element(xo.begin(), xo.end());
    for (auto& q : xo) q = q - low;
    CHECK(tuples.insert({xo, divisor_invariants(d).degree}).second);
  }
  CHECK(per_chart.size() == 3);
  // the x3-chart sees only the divisors above the origin
  for (const auto& d : ds)
    if (d.chart == 3) CHECK(Q(0) < *d.image("u").order());
}

TEST_CASE("smooth quadric has only divisors above discriminant curves") {
  MPoly F = parse_poly("x0^2+x1^2+x2^2-x3^2", kX, rational_field());
  auto ds = desing_global(F);
  REQUIRE_FALSE(ds.empty());
  for (const auto& d : ds) {
    CHECK(d.origin.rfind("curve ", 0) == 0);
    CHECK(d.chain.size() == 1);
    CHECK(divisor_residual(F, d, Q(8)).is_zero());
  }
}

TEST_CASE("automorphism moves the base point off the surface") {
  MPoly F = parse_poly("x1^2+x0*x2-x3^2", kX, rational_field());
  auto m = choose_automorphism(F);
  std::vector<Elem> p;
  for (int i = 0; i < 4; ++i) p.push_back(fld::from_q(*rational_field(), m[i][0]));
  CHECK_FALSE(fld::is_zero(*rational_field(), F.eval(p)));
  auto ds = desing_global(F);
  for (const auto& d : ds) CHECK(divisor_residual(F, d, Q(8)).is_zero());

  CHECK_THROWS_AS(desing_global(parse_poly("x0^2+x1", kX, rational_field())), std::invalid_argument);
  CHECK_THROWS_AS(desing_global(parse_poly("(x0+x1)^2", kX, rational_field())), std::invalid_argument);
}
