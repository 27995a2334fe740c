// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jungdesing/jung.hpp"
#include "jungdesing/parse.hpp"
#include "jungdesing/puiseux.hpp"
#include "support/dag_corpus.hpp"
#include "support/qo_corpus.hpp"

using namespace jd;

namespace {

const std::vector<std::string> kX{"x1", "x2"};
const std::vector<std::string> kXZ{"x1", "x2", "z"};
const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kUVW{"u", "v", "w"};

const char* kChart = "w^6+3*v*w^4+u^2*v*w^3+3*v^2*w^2+v^3";
const char* kF0 = "w^6+3*u^2*v^3*w^4+u^4*v^5*w^3+3*u^4*v^6*w^2+u^6*v^9";
const char* kDuvalF = "z^6+3*x2*z^4+x1^2*x2^3*z^3+3*x2^2*z^2+x2^3";
const char* kExpandF = "z^6-3*x2*z^4-1/64*x1^2*x2^3*z^3+3*x2^2*z^2-x2^3";
const char* kSurface = "x0^6+3*x0^4*x2*x3+x0^3*x1^2*x2+3*x0^2*x2^2*x3^2+x2^3*x3^3";

MPoly uvw(const std::string& s) { return parse_poly(s, kUVW); }
ZPoly zp(const std::string& s, const std::vector<std::string>& names = kXZ, const Tower& t = rational_field()) {
  return ZPoly::from_mpoly(parse_poly(s, names, t));
}
FracPoly fp(const std::string& s, const std::vector<std::string>& names = kX, const Tower& t = rational_field()) {
  return parse_fracpoly(s, names, t);
}

// collects failed sub-checks of one criterion
struct Checks {
  std::vector<std::string> failed;
  int total = 0;
  void operator()(bool ok, const std::string& what) {
    ++total;
    if (!ok) failed.push_back(what);
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from(const Checks& c) {
  if (c.failed.empty()) return {true, std::to_string(c.total) + "/" + std::to_string(c.total) + " checks passed"};
  std::string s = std::to_string(c.failed.size()) + "/" + std::to_string(c.total) + " checks failed:";
  for (const auto& f : c.failed) s += " [" + f + "]";
  return {false, s};
}

FracPoly term(const Tower& t, const FieldElement& c, int k) { return FracPoly::monomial(t, 1, mon_from({Q(k)}), c.in(t).raw()); }

std::vector<int> orders_of(const FormalPrimeDivisor& d) {
  std::vector<int> o;
  for (const auto& x : divisor_invariants(d).orders) o.push_back(static_cast<int>(x.num()));
  return o;
}

const FormalPrimeDivisor* find_origin(const std::vector<FormalPrimeDivisor>& ds, const std::string& origin) {
  for (const auto& d : ds)
    if (d.origin == origin) return &d;
  return nullptr;
}

std::string tuple_str(const std::vector<int>& o, long deg) {
  return "((" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," + std::to_string(o[2]) + ")," + std::to_string(deg) + ")";
}

// ---------------------------------------------------------------- criteria

Outcome discriminants() {
  Checks c;
  MPoly f = uvw(kChart);
  c(discriminant(f, 2) == uvw("729*u^8*v^12*(u^4-64*v)"), "disc of the x3-chart");
  MPoly u = uvw("u"), v = uvw("v"), w = uvw("w");
  MPoly g = f.subst({u * v, u * u * v * v * v, w});
  c(g == uvw(kF0), "transformed equation");
  c(discriminant(g, 2) == uvw("729*u^34*v^47*(u^2*v-64)"), "disc after the substitution");
  return from(c);
}

Outcome surface_param() {
  Checks c;
  ParamSet ps = param(zp(kF0, kUVW));
  c(ps.params.size() == 1, "one parametrization");
  if (ps.params.size() != 1) return from(c);
  const auto& p = ps.params[0];
  auto su = FieldElement(p.tower, p.sigma.evaluate(mon_from({Q(1), Q(0)}))).rational();
  auto sv = FieldElement(p.tower, p.sigma.evaluate(mon_from({Q(0), Q(1)}))).rational();
  c(sv && *sv == -1, "sigma v -> -v");
  c(su && *su == -8, "sigma u -> -8u (computed u -> " + (su ? su->get_str() : std::string("?")) + "u)");
  FracPoly printed = fp(
      "-8*u*v^(3/2)+8*u^(4/3)*v^(5/3)-4*u^(5/3)*v^(11/6)+u^(7/3)*v^(13/6)-1/2*u^3*v^(5/2)"
      "+5/16*u^(11/3)*v^(17/6)-7/32*u^(13/3)*v^(19/6)",
      kUV);
  c(p.alpha.expand(Q(46, 6)) == printed, "seven printed alpha terms");
  c(p.lattice == Lattice::parse("0,1/2;1/3,1/6"), "exponent lattice");
  return from(c);
}

Outcome duval_steps() {
  Checks c;
  ParamSet ps = param(zp(kDuvalF));
  c(ps.params.size() == 1, "one parametrization");
  if (ps.params.size() != 1 || ps.params[0].steps.size() != 2) {
    c(false, "two Duval steps");
    return from(c);
  }
  const auto& p = ps.params[0];
  const auto& s1 = p.steps[0];
  const auto& s2 = p.steps[1];
  // step twists are r^(-v_i) on the basis of the lattice before the step
  c(s1.b == 2 && s1.root.rational() == mpq_class(-1), "step 1: b = 2, r = -1");
  c(s1.v == IntVec{0, 1} && s1.root.pow(-s1.v[1]).rational() == mpq_class(-1), "step 1: x2 -> -x2");
  c(s2.b == 3 && s2.root.rational() == mpq_class(1, 8), "step 2: b = 3, r = 1/8");
  c(s2.v == IntVec{-1, 0} && s2.root.pow(-s2.v[0]).rational() == mpq_class(1, 8), "step 2: x1 -> x1/8");
  c(p.sigma.evaluate(mon_from({Q(1), Q(0)})).q == mpq_class(1, 8) && p.sigma.evaluate(mon_from({Q(0), Q(1)})).q == mpq_class(-1),
    "combined twist");
  return from(c);
}

Outcome expand_root() {
  Checks c;
  Series a = series_new(fp("-x2^(1/2)+1/8*x1^(2/3)*x2"), zp(kExpandF));
  FracPoly want = fp("-x2^(1/2)+1/8*x1^(2/3)*x2-1/128*x1^(4/3)*x2^(3/2)+1/32768*x1^(8/3)*x2^(5/2)-1/4194304*x1^4*x2^(7/2)");
  c(a.expand(Q(8)) == want, "three continuation terms");
  return from(c);
}

// irreducible elements of the dual monoid, by enumeration in a box
std::vector<IntVec> dual_oracle(const Lattice& g, int box) {
  auto in_dual = [&](std::int64_t a, std::int64_t b) {
    for (const auto& r : g.basis()) {
      Q val = Q(a) * r[0] + Q(b) * r[1];
      if (val.den() != 1) return false;
    }
    return true;
  };
  std::vector<IntVec> pts;
  for (int a = 0; a <= box; ++a)
    for (int b = 0; b <= box; ++b)
      if ((a || b) && in_dual(a, b)) pts.push_back({a, b});
  std::set<IntVec> sums;
  for (const auto& x : pts)
    for (const auto& y : pts) sums.insert({x[0] + y[0], x[1] + y[1]});
  std::vector<IntVec> out;
  for (const auto& x : pts)
    if (!sums.count(x)) out.push_back(x);
  // from the second axis towards the first
  std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) { return x[0] * y[1] < y[0] * x[1]; });
  return out;
}

Outcome toric() {
  Checks c;
  Lattice g = Lattice::parse("0,1/2;1/3,1/6");
  auto gens = dual_cone_generators(g);
  std::vector<IntVec> want{{0, 6}, {1, 4}, {2, 2}, {3, 0}};
  c(gens == want, "generators (0,6),(1,4),(2,2),(3,0)");
  c(dual_oracle(g, 20) == want, "enumeration oracle");
  return from(c);
}

Outcome divisors() {
  Checks c;
  const std::set<std::string> want{"((6,0,3),2)", "((1,4,7),1)", "((2,2,5),1)", "((0,6,9),1)"};

  // divisors of the surface chart polynomial, in its own coordinates
  auto ds = desing_local(uvw(kF0), {});
  std::set<std::string> got;
  for (const auto& d : ds) got.insert(tuple_str(orders_of(d), divisor_invariants(d).degree));
  for (const auto& t : want) c(got.count(t) == 1, "surface chart tuple " + t);

  // the x3-chart pipeline, orders mapped through u' = u^3/v, v' = v/u^2
  auto xs = desing_local(uvw(kChart), {});
  std::set<std::string> mapped;
  for (const auto& d : xs) {
    auto o = orders_of(d);
    mapped.insert(tuple_str({3 * o[0] - o[1], o[1] - 2 * o[0], o[2]}, divisor_invariants(d).degree));
  }
  for (const auto& t : want) c(mapped.count(t) == 1, "x3-chart tuple " + t);

  auto check_images = [&](const FormalPrimeDivisor* d, const std::string& name, const std::vector<FracPoly>& imgs,
                          const std::vector<Q>& bounds) {
    if (!d) {
      c(false, name + " missing");
      return;
    }
    for (size_t i = 0; i < imgs.size(); ++i)
      c(d->image(kUVW[i]).expand(bounds[i]) == imgs[i], name + " image of " + kUVW[i] + " is " + d->image(kUVW[i]).str(bounds[i], {"t"}));
  };

  const auto* phi2 = find_origin(ds, "crossing (1,4),(2,2)");
  if (phi2) {
    const Tower& t = phi2->tower;
    check_images(phi2, "phi2",
                 {fp("-8*s*t^2", {"t"}, t), fp("-s^4*t^2", {"t"}, t),
                  fp("-8*s^7*t^5+8*s^8*t^6-4*s^9*t^7+s^11*t^9-1/2*s^13*t^11", {"t"}, t)},
                 {Q(10), Q(10), Q(12)});
  } else {
    c(false, "phi2 missing");
  }

  const auto* phi1 = find_origin(ds, "crossing (0,6),(1,4)");
  if (phi1) {
    const Tower& t = phi1->tower;
    check_images(phi1, "phi1", {fp("-8*t", {"t"}, t), fp("-s^6*t^4", {"t"}, t), fp("-8*s^9*t^7", {"t"}, t)},
                 {Q(10), Q(10), Q(8)});
  } else {
    c(false, "phi1 missing");
  }

  const auto* phi3 = find_origin(ds, "curve v");
  if (phi3) {
    const Tower& t = phi3->tower;
    check_images(phi3, "phi3",
                 {fp("s", {"t"}, t), fp("-64*s^10*t^6", {"t"}, t),
                  fp("-512*s^16*t^9+512*s^18*t^10-256*s^20*t^11+64*s^24*t^13", {"t"}, t)},
                 {Q(20), Q(20), Q(14)});
  } else {
    c(false, "phi3 missing");
  }

  const auto* phi0 = find_origin(ds, "curve u");
  if (phi0) {
    const Tower& t = phi0->tower;
    FieldElement g = FieldElement::generator(t);
    FieldElement s = FieldElement::generator(t->parent).in(t);
    c((g * g + s.pow(3)).is_zero(), "phi0 field gamma^2 + s^3 = 0");
    FieldElement c8 = FieldElement(t, mpq_class(-8)) / s.pow(5);
    check_images(phi0, "phi0",
                 {term(t, c8, 6), fp("s", {"t"}, t),
                  term(t, c8 * g, 3) + term(t, c8, 4) + term(t, FieldElement(t, mpq_class(4)) * g / s.pow(8), 5)},
                 {Q(10), Q(10), Q(6)});
  } else {
    c(false, "phi0 missing");
  }
  return from(c);
}

Outcome degree_identity() {
  Checks c;
  corpus::QuasiOrdinaryBuilder gen(2024);
  for (int k = 0; k < 60; ++k) {
    ZPoly f = gen.next();
    ParamSet ps = param(f);
    c(ps.total() == f.degree(), "instance " + std::to_string(k) + ": " + f.str(kX));
  }
  return from(c);
}

Outcome residuals() {
  Checks c;
  std::vector<std::pair<std::string, ZPoly>> polys{{"worked example", zp(kDuvalF)},
                                                   {"surface chart", zp(kF0, kUVW)},
                                                   {"square root", zp("z^2-x1")},
                                                   {"expand example", zp(kExpandF)}};
  Tower qs = adjoin_transcendental(rational_field(), "s");
  polys.push_back({"univariate over Q(s)", zp("w^6+3*s^3*t^2*w^4+s^5*t^4*w^3+3*s^6*t^4*w^2+s^9*t^6", {"t", "w"}, qs)});
  corpus::QuasiOrdinaryBuilder gen(7);
  for (int k = 0; k < 50; ++k) polys.push_back({"random " + std::to_string(k), gen.next()});
  for (const auto& [name, f] : polys) {
    ParamSet ps = param(f);
    for (int n : {8, 16}) {
      ParamReport rep = verify_param_set(ps, Q(n));
      c(rep.ok, name + " at " + std::to_string(n) + ": " + rep.message);
    }
  }

  std::vector<std::pair<std::string, MPoly>> charts{
      {"x3-chart", uvw(kChart)}, {"surface chart", uvw(kF0)}, {"branch", uvw("w^2-u")}, {"lines", uvw("w^2-u^2+v^2")}};
  for (const auto& [name, f] : charts)
    for (const auto& d : desing_local(f, {}))
      for (int n : {8, 16}) c(divisor_residual(f, d, Q(n)).is_zero(), name + " " + d.origin + " at " + std::to_string(n));

  for (const char* s : {kSurface, "x0^2+x1^2+x2^2-x3^2", "x1^2+x0*x2-x3^2"}) {
    MPoly F = parse_poly(s, {"x0", "x1", "x2", "x3"});
    for (const auto& d : desing_global(F))
      for (int n : {8, 16}) c(divisor_residual(F, d, Q(n)).is_zero(), std::string(s) + " " + d.origin + " at " + std::to_string(n));
  }
  return from(c);
}

Outcome series_properties() {
  Checks c;
  for (unsigned seed = 1; seed <= 24; ++seed) {
    std::string msg = corpus::check_dag(seed);
    c(msg.empty(), "seed " + std::to_string(seed) + ": " + msg);
  }
  return from(c);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "discriminants", 1, discriminants},
      {2, "param on the surface chart polynomial", 5, surface_param},
      {3, "two Duval steps", 5, duval_steps},
      {4, "expand continuation", 1, expand_root},
      {5, "toric generators", 1, toric},
      {6, "divisors of the running example", 60, divisors},
      {7, "degree identity on random quasi-ordinary polynomials", 120, degree_identity},
      {8, "residuals of parametrizations and divisors", 120, residuals},
      {9, "series prefix consistency and precision sufficiency", 60, series_properties},
  };
  int failures = 0;
  for (const auto& cr : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(cr.limit)) + " s limit]";
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << cr.id << " " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << cr.name
         << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
