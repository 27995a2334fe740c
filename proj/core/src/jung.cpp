#include "jungdesing/jung.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jungdesing/factor.hpp"

namespace jd {

namespace {

constexpr int kU = 0, kV = 1, kW = 2;
constexpr int kMaxDepth = 64;
const std::vector<std::string> kUVW{"u", "v", "w"};
const std::vector<std::string> kUV{"u", "v"};

MPoly drop_w(const MPoly& p) {
  MPoly out(p.tower(), 2);
  for (const auto& [m, c] : p.terms()) {
    if (m[kW] != 0) throw std::logic_error("unexpected w in a discriminant factor");
    IMon k;
    k[0] = m[0];
    k[1] = m[1];
    out.add_term(k, c);
  }
  return out;
}

bool vanishes_at_origin(const MPoly& p) { return fld::is_zero(p.level(), p.coeff(IMon{})); }

MPoly var3(const Tower& t, int i) { return MPoly::variable(t, 3, i); }

// images of the outer u, v, w as polynomials in the inner u, v, w
struct ChartMap {
  std::vector<MPoly> uvw;

  const Tower& tower() const { return uvw[0].tower(); }
  bool identity() const {
    for (int i = 0; i < 3; ++i)
      if (!(uvw[i] == var3(tower(), i))) return false;
    return true;
  }
  std::string label() const {
    return "u -> " + uvw[0].str(kUVW) + ", v -> " + uvw[1].str(kUVW);
  }
  MPoly apply(const MPoly& f) const { return f.in(tower()).subst(uvw); }
  MPoly apply_uv(const MPoly& e) const { return e.in(tower()).subst({drop_w(uvw[0]), drop_w(uvw[1])}); }
};

ChartMap translation(const Tower& t, const FieldElement& u0, const FieldElement& v0) {
  return {{var3(t, kU) + MPoly::constant(t, 3, u0.in(t).raw()), var3(t, kV) + MPoly::constant(t, 3, v0.in(t).raw()),
           var3(t, kW)}};
}

ChartMap blowup_u(const Tower& t) { return {{var3(t, kU) * var3(t, kV), var3(t, kV), var3(t, kW)}}; }
ChartMap blowup_v(const Tower& t) { return {{var3(t, kV), var3(t, kU) * var3(t, kV), var3(t, kW)}}; }

std::vector<FormalPrimeDivisor> pull_back(std::vector<FormalPrimeDivisor> ds, const ChartMap& m) {
  if (m.identity()) return ds;
  for (auto& d : ds) {
    std::vector<Series> outer;
    for (int i = 0; i < 3; ++i) {
      int j = -1;
      for (int k = 0; k < 3; ++k)
        if (m.uvw[i] == var3(m.tower(), k)) j = k;
      outer.push_back(j >= 0 ? d.images[j] : compose(FracPoly::from_mpoly(m.uvw[i]), d.images));
    }
    d.images = std::move(outer);
    d.chain.insert(d.chain.begin(), m.label());
  }
  return ds;
}

void append(std::vector<FormalPrimeDivisor>& out, std::vector<FormalPrimeDivisor> more) {
  for (auto& d : more) out.push_back(std::move(d));
}

void add_factor(std::vector<MPoly>& es, const MPoly& e) {
  if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
}

// irreducible factors over the map's tower of the transformed factors that
// pass through the origin
std::vector<MPoly> local_factors(const std::vector<MPoly>& es, const ChartMap& m) {
  std::vector<MPoly> out;
  for (const auto& e : es)
    for (const auto& h : irred_factors(m.apply_uv(e)))
      if (vanishes_at_origin(h)) add_factor(out, h);
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) { return mpoly_cmp(a, b) < 0; });
  return out;
}

MPoly product(const std::vector<MPoly>& es, const Tower& t) {
  MPoly p = MPoly::constant(t, 2, fld::one(*t));
  for (const auto& e : es) p = p * e.in(t);
  return p;
}

// e(u) with u -> s, for a polynomial in u alone
FieldElement at_s(const MPoly& c, const Tower& S) {
  FieldElement s = FieldElement::generator(S);
  FieldElement acc(S, mpq_class(0));
  FieldElement pw(S, mpq_class(1));
  Poly p = c.to_poly(kU);
  for (const auto& k : p) {
    acc = acc + FieldElement(c.tower(), k).in(S) * pw;
    pw = pw * s;
  }
  return acc;
}

std::vector<FormalPrimeDivisor> recursive(const MPoly& f, const std::vector<MPoly>& es, int depth);

std::string form_str(const IntVec& n) {
  std::string s = "(";
  for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

}  // namespace

const Series& FormalPrimeDivisor::image(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return images[i];
  throw std::out_of_range("divisor has no image for " + name);
}

DiscriminantFactors discriminant_factors(const MPoly& f) {
  MPoly disc = discriminant(f, kW);
  if (disc.is_zero()) throw std::invalid_argument("chart polynomial is not squarefree in w");
  DiscriminantFactors df;
  df.d = squarefree_part(drop_w(disc));
  if (!df.d.is_constant()) df.factors = irred_factors(df.d);
  return df;
}

bool is_normal_crossing(const std::vector<MPoly>& es) {
  if (es.size() != 2) return false;
  const Tower& t = es[0].tower();
  MPoly v = MPoly::variable(t, 2, kV);
  for (int i = 0; i < 2; ++i) {
    if (!(normalize_unit(es[i].in(common_tower(t, es[1 - i].tower()))) == v.in(common_tower(t, es[1 - i].tower()))))
      continue;
    const MPoly& e = es[1 - i];
    if (!vanishes_at_origin(e)) return false;
    return !fld::is_zero(e.level(), e.derivative(kU).coeff(IMon{}));
  }
  return false;
}

std::vector<FormalPrimeDivisor> divisors_above_curve(const MPoly& f, const MPoly& e) {
  const Tower& base = common_tower(f.tower(), e.tower());
  Tower f0;
  FieldElement u0, v0;
  bool along_v = e.depends_on(kV);
  if (along_v) {
    // generic point (s, v0) with e(s, v0) = 0
    Tower S = adjoin_transcendental(base, "s");
    Poly mp;
    for (const auto& c : e.in(base).coeffs_in(kV)) mp.push_back(at_s(c, S).raw());
    upoly::trim(*S, mp);
    mp = upoly::monic(*S, mp);
    if (upoly::deg(mp) == 1) {
      f0 = S;
      v0 = FieldElement(S, fld::neg(*S, mp[0]));
    } else {
      f0 = adjoin_algebraic(S, mp, false);
      v0 = FieldElement::generator(f0);
    }
    u0 = FieldElement::generator(S).in(f0);
  } else {
    // generic point (u0, s) with e(u0) = 0
    Poly mp = upoly::monic(*base, e.in(base).to_poly(kU));
    Tower A = base;
    if (upoly::deg(mp) == 1)
      u0 = FieldElement(base, fld::neg(*base, mp[0]));
    else {
      A = adjoin_algebraic(base, mp, false);
      u0 = FieldElement::generator(A);
    }
    f0 = adjoin_transcendental(A, "s");
    u0 = u0.in(f0);
    v0 = FieldElement::generator(f0);
  }

  // u, v -> the generic point plus t in the transversal direction
  auto cst = [&](const FieldElement& c, int nv) { return MPoly::constant(f0, nv, c.raw()); };
  MPoly tvar = MPoly::variable(f0, 2, 0);
  MPoly uimg = along_v ? cst(u0, 2) : cst(u0, 2) + tvar;
  MPoly vimg = along_v ? cst(v0, 2) + tvar : cst(v0, 2);
  ZPoly g = ZPoly::from_mpoly(f.in(f0).subst({uimg, vimg, MPoly::variable(f0, 2, 1)}));
  FracPoly ut = FracPoly::constant(f0, 1, u0.raw());
  FracPoly vt = FracPoly::constant(f0, 1, v0.raw());
  (along_v ? vt : ut) = (along_v ? vt : ut) + FracPoly::variable(f0, 1, 0);

  ParamSet ps = param(SeriesPoly(g), Lattice::standard(1));
  std::vector<FormalPrimeDivisor> out;
  for (const auto& p : ps.params) {
    std::vector<IntVec> rows{{lattice_index(p.lattice, Lattice::standard(1))}};
    FormalPrimeDivisor d;
    d.tower = p.tower;
    d.names = kUVW;
    d.images = {series_polynomial(ut.in(p.tower).apply(p.sigma).map_exponents(rows)),
                series_polynomial(vt.in(p.tower).apply(p.sigma).map_exponents(rows)),
                rescale_exponents(p.alpha, rows)};
    d.local = d.images;
    d.origin = "curve " + e.str(kUV);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<FormalPrimeDivisor> divisors_above_crossing(const MPoly& f, const std::vector<MPoly>& es) {
  if (!is_normal_crossing(es)) throw std::invalid_argument("factors are not a normal crossing");
  const Tower& t0 = f.tower();
  MPoly v = MPoly::variable(t0, 2, kV);
  const MPoly& e = normalize_unit(es[0].in(t0)) == v ? es[1] : es[0];

  // u = U(u', v') solves e(U, v') = u'
  MPoly g = e.in(t0).subst({var3(t0, 2), var3(t0, 1)}) - var3(t0, 0);
  Series uu = implicit_function(ZPoly::from_mpoly(g));
  Series vv = series_variable(t0, 2, kV);
  std::vector<Series> cs;
  for (const auto& c : f.coeffs_in(kW)) cs.push_back(compose(FracPoly::from_mpoly(drop_w(c)), {uu, vv}));
  ParamSet ps = param(SeriesPoly(2, cs), Lattice::standard(2));

  std::vector<FormalPrimeDivisor> out;
  for (const auto& p : ps.params) {
    Tower fs = adjoin_transcendental(p.tower, "s");
    std::vector<Series> st{series_constant(fs, 1, fld::gen(*fs)), series_variable(fs, 1, 0)};
    Series su = apply_hom(p.sigma, uu);
    Series sv = apply_hom(p.sigma, vv);
    auto gens = dual_cone_generators(p.lattice);
    for (size_t i = 0; i + 2 < gens.size(); ++i) {
      std::vector<IntVec> forms{gens[i], gens[i + 1]};
      FormalPrimeDivisor d;
      d.tower = fs;
      d.names = kUVW;
      d.images = {evaluate_new(su, forms, st), evaluate_new(sv, forms, st), evaluate_new(p.alpha, forms, st)};
      d.local = d.images;
      d.origin = "crossing " + form_str(gens[i]) + "," + form_str(gens[i + 1]);
      out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

std::vector<FormalPrimeDivisor> recursive(const MPoly& f, const std::vector<MPoly>& es, int depth) {
  if (depth > kMaxDepth) throw std::runtime_error("blow-up recursion too deep");
  if (is_normal_crossing(es)) return divisors_above_crossing(f, es);
  const Tower& t = f.tower();
  ChartMap mu = blowup_u(t), mv = blowup_v(t);
  MPoly v = MPoly::variable(t, 2, kV);

  // strict transforms e(phi)/v^ord(e)
  auto strict = [&](const ChartMap& m) {
    std::vector<MPoly> out;
    for (const auto& e : es) {
      MPoly q = divexact(m.apply_uv(e), v.pow(e.ord_at_origin()));
      if (divides(v, q)) throw std::logic_error("strict transform vanishes on the exceptional line");
      if (!q.is_constant()) out.push_back(normalize_unit(q));
    }
    return out;
  };
  std::vector<MPoly> eu = strict(mu), ev = strict(mv);
  MPoly fu = mu.apply(f), fv = mv.apply(f);

  std::vector<FormalPrimeDivisor> out;
  std::vector<FormalPrimeDivisor> here = divisors_above_curve(fu, v);

  // points of the exceptional line met by strict transforms in the u-chart
  if (!eu.empty()) {
    for (const auto& pt : zero_set({product(eu, t), v})) {
      ChartMap tr = translation(pt.tower, pt.coords.at(0), pt.coords.at(1));
      std::vector<MPoly> loc = local_factors(eu, tr);
      add_factor(loc, MPoly::variable(pt.tower, 2, kV));
      append(here, pull_back(recursive(tr.apply(fu), loc, depth + 1), tr));
    }
  }
  append(out, pull_back(std::move(here), mu));

  std::vector<MPoly> ev0;
  for (const auto& e : ev)
    if (vanishes_at_origin(e)) ev0.push_back(e);
  if (!ev0.empty()) {
    add_factor(ev0, v);
    append(out, pull_back(recursive(fv, ev0, depth + 1), mv));
  }
  return out;
}

}  // namespace

std::vector<FormalPrimeDivisor> desing_recursive(const MPoly& f, const std::vector<MPoly>& es) {
  for (const auto& e : es)
    if (!vanishes_at_origin(e)) throw std::invalid_argument("factor does not pass through the origin");
  return recursive(f, es, 0);
}

std::vector<FormalPrimeDivisor> desing_local(const MPoly& f, const std::vector<MPoly>& focus) {
  if (f.nvars() != 3) throw std::invalid_argument("chart polynomial must be in u, v, w");
  int d = f.degree(kW);
  if (d < 1 || !f.coeffs_in(kW).back().is_constant()) throw std::invalid_argument("chart polynomial is not monic in w");
  DiscriminantFactors df = discriminant_factors(f);
  std::vector<FormalPrimeDivisor> out;
  if (df.factors.empty()) return out;

  for (const auto& e : df.factors) {
    bool in_focus = std::all_of(focus.begin(), focus.end(), [&](const MPoly& g) { return g.is_zero() || divides(e, g.in(e.tower())); });
    if (in_focus) append(out, divisors_above_curve(f, e));
  }

  std::vector<MPoly> gens(focus.begin(), focus.end());
  gens.push_back(df.d);
  gens.push_back(df.d.derivative(kU));
  gens.push_back(df.d.derivative(kV));
  for (const auto& pt : zero_set(gens)) {
    ChartMap tr = translation(pt.tower, pt.coords.at(0), pt.coords.at(1));
    std::vector<MPoly> loc = local_factors(df.factors, tr);
    append(out, pull_back(recursive(tr.apply(f), loc, 0), tr));
  }
  return out;
}

std::vector<std::vector<mpq_class>> choose_automorphism(const MPoly& F) {
  const Tower& t = F.tower();
  auto off_surface = [&](const std::vector<long>& p) {
    std::vector<Elem> pt;
    for (long x : p) pt.push_back(fld::from_q(*t, mpq_class(x)));
    return !fld::is_zero(*t, F.eval(pt));
  };
  std::vector<std::vector<long>> cands;
  for (int i = 0; i < 4; ++i) {
    std::vector<long> p(4, 0);
    p[i] = 1;
    cands.push_back(p);
  }
  const long vals[] = {0, 1, -1, 2, -2};
  for (int a = 0; a < 625; ++a) {
    std::vector<long> p;
    for (int k = 0, r = a; k < 4; ++k, r /= 5) p.push_back(vals[r % 5]);
    if (std::count(p.begin(), p.end(), 0) < 4) cands.push_back(p);
  }
  for (const auto& p : cands) {
    if (!off_surface(p)) continue;
    std::vector<std::vector<mpq_class>> m(4, std::vector<mpq_class>(4, 0));
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    int j = 0;
    while (p[j] == 0) ++j;
    for (int i = 0; i < 4; ++i) m[i][0] = p[i];
    if (j != 0) {
      for (int i = 0; i < 4; ++i) m[i][j] = i == 0 ? 1 : 0;
    }
    return m;
  }
  throw std::runtime_error("no small point off the surface");
}

std::vector<FormalPrimeDivisor> desing_global(const MPoly& F) {
  if (F.nvars() != 4 || F.is_zero() || F.is_constant()) throw std::invalid_argument("surface needs a nonconstant polynomial in x0..x3");
  int deg = F.total_degree();
  for (const auto& [m, c] : F.terms())
    if (m.degree() != deg) throw std::invalid_argument("surface polynomial is not homogeneous");
  const Tower& t = F.tower();
  auto m = choose_automorphism(F);
  bool identity = true;
  std::vector<MPoly> lin;
  for (int i = 0; i < 4; ++i) {
    MPoly row(t, 4);
    for (int j = 0; j < 4; ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) identity = false;
      if (m[i][j] != 0) row = row + MPoly::variable(t, 4, j).scaled(fld::from_q(*t, m[i][j]));
    }
    lin.push_back(row);
  }
  MPoly G = identity ? F : F.subst(lin);

  MPoly u = var3(t, kU), v = var3(t, kV), w = var3(t, kW), one = MPoly::constant(t, 3, fld::one(*t));
  const std::vector<std::vector<MPoly>> charts{{w, one, u, v}, {w, v, one, u}, {w, u, v, one}};
  MPoly u2 = MPoly::variable(t, 2, kU), v2 = MPoly::variable(t, 2, kV);
  const std::vector<std::vector<MPoly>> foci{{}, {v2}, {u2, v2}};
  const std::vector<std::string> xs{"x0", "x1", "x2", "x3"};

  std::vector<FormalPrimeDivisor> out;
  for (int k = 0; k < 3; ++k) {
    MPoly f = G.subst(charts[k]);
    Elem lc = f.coeffs_in(kW).back().coeff(IMon{});
    f = f.scaled(fld::inv(*t, lc));
    std::string label = "chart " + std::to_string(k + 1) + ":";
    for (int i = 0; i < 4; ++i) label += std::string(i ? "," : "") + " x" + std::to_string(i) + " -> " + charts[k][i].str(kUVW);
    for (auto& d : desing_local(f, foci[k])) {
      std::vector<Series> xp;
      for (int i = 0; i < 4; ++i) xp.push_back(compose(FracPoly::from_mpoly(charts[k][i]), d.images));
      for (int i = 0; i < 4; ++i) {
        if (identity) {
          d.images.push_back(xp[i]);
        } else {
          FracPoly row = FracPoly::from_mpoly(lin[i]);
          d.images.push_back(compose(row, xp));
        }
        d.names.push_back(xs[i]);
      }
      d.chart = k + 1;
      d.chain.insert(d.chain.begin(), label);
      out.push_back(std::move(d));
    }
  }
  return out;
}

DivisorInvariants divisor_invariants(const FormalPrimeDivisor& d) {
  DivisorInvariants inv;
  for (const auto& name : kUVW) {
    auto o = d.image(name).order();
    if (!o) throw std::logic_error("divisor image of " + name + " is zero");
    inv.orders.push_back(*o);
  }
  inv.degree = d.tower->algebraic_degree();
  return inv;
}

FracPoly divisor_residual(const MPoly& f, const FormalPrimeDivisor& d, const Q& order) {
  std::vector<Series> args;
  if (f.nvars() == 4) {
    for (const auto& x : {"x0", "x1", "x2", "x3"}) args.push_back(d.image(x));
  } else {
    for (const auto& x : kUVW) args.push_back(d.image(x));
  }
  return compose(FracPoly::from_mpoly(f), args).expand(order);
}

std::string divisor_str(const FormalPrimeDivisor& d, const Q& order) {
  std::ostringstream os;
  os << "divisor " << d.origin;
  if (d.chart) os << " (chart " << d.chart << ")";
  os << " over " << tower_str(d.tower) << "\n";
  for (const auto& c : d.chain) os << "  via " << c << "\n";
  for (size_t i = 0; i < d.names.size(); ++i) os << "  " << d.names[i] << " -> " << d.images[i].str(order, {"t"}) << "\n";
  return os.str();
}

}  // namespace jd
