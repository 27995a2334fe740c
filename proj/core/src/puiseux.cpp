#include "jungdesing/puiseux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jungdesing/factor.hpp"

namespace jd {

namespace {

// Newton polygon data of f with every hull edge certified
struct Polygon {
  ZPoly g;
  bool exact = true;
  Q known{0};

  EdgeData edge(const Mon& n) const { return exact ? edge_equation(g, n) : edge_equation(g, n, known); }
};

Polygon certified_polygon(const SeriesPoly& f) {
  if (f.is_exact()) return {f.exact(), true, Q(0)};
  Q cap = precision_cap();
  Q p(1 + f.degree());
  for (;;) {
    Polygon pg{f.truncated(p), false, p};
    try {
      // z^2 never divides f, so gamma_0 or gamma_1 must show up
      if (pg.g.low_degree() >= 2) throw PrecisionError("low coefficients not visible yet");
      for (const auto& n : hull_slopes(pg.g)) pg.edge(n);
      return pg;
    } catch (const PrecisionError&) {
      if (!(p < cap)) throw PrecisionError("Newton polygon not certified below the precision cap");
      p = std::min(p * Q(2), cap);
    }
  }
}

// f(z + a) for lazy coefficients
SeriesPoly shift_lazy(const SeriesPoly& f, const FracPoly& a) {
  int d = f.degree();
  std::vector<Series> out;
  const Tower& t = a.tower();
  for (int k = 0; k <= d; ++k) {
    Series acc = f.coeff(k);
    mpz_class binom = 1;
    FracPoly apow = FracPoly::constant(t, f.nvars(), fld::one(*t));
    for (int j = k + 1; j <= d; ++j) {
      binom = binom * j / (j - k);
      apow = apow * a;
      acc = acc + series_polynomial(apow.scaled(fld::from_q(*t, mpq_class(binom)))) * f.coeff(j);
    }
    out.push_back(acc);
  }
  return SeriesPoly(f.nvars(), std::move(out));
}

SeriesPoly shift_any(const SeriesPoly& f, const FracPoly& a) {
  if (f.is_exact()) return SeriesPoly(shift(f.exact().in(a.tower()), a));
  return shift_lazy(f, a);
}

// the edge polynomial in T = z^b with the z^low factor removed
UPoly reduced_edge(const EdgeData& e, std::int64_t b, const Tower& t) {
  int l = e.low();
  Poly c;
  for (int i = l; i <= e.high(); ++i) {
    FracPoly ci = e.poly.coeff(i);
    if (ci.is_zero()) continue;
    if ((i - l) % b != 0) throw std::logic_error("edge support is not spaced by the denominator");
    size_t k = static_cast<size_t>((i - l) / b);
    if (c.size() <= k) c.resize(k + 1, fld::zero(*t));
    c[k] = fld::lift(*ci.tower(), *t, ci.terms().begin()->second);
  }
  return UPoly(t, std::move(c));
}

std::optional<Mon> initial_exponent(const Series& a) {
  if (auto p = a.polynomial()) return p->is_zero() ? std::nullopt : std::optional<Mon>(p->order());
  try {
    auto o = a.order();
    if (!o) return std::nullopt;
    return a.expand(*o + Q(1)).order();
  } catch (const PrecisionError&) {
    if (is_zero(a)) return std::nullopt;
    throw;
  }
}

Mon below_everything(int n) {
  std::vector<Q> v(static_cast<size_t>(n), Q(-1));
  return mon_from(v);
}

bool monic(const SeriesPoly& f) {
  if (f.degree() < 1) return false;
  auto lc = f.coeff(f.degree()).polynomial();
  return lc && lc->is_constant() && !lc->is_zero() && fld::is_one(*lc->tower(), lc->terms().begin()->second);
}

}  // namespace

long ParamSet::total() const {
  long s = 0;
  for (size_t i = 0; i < params.size(); ++i) s += field_degrees[i] * lattice_indices[i];
  return s;
}

std::vector<Parametrization> param_rec(const SeriesPoly& f, const Lattice& base, const Mon& lower) {
  const int n = f.nvars();
  const Tower& tower = f.tower();
  Polygon pg = certified_polygon(f);

  std::vector<EdgeData> edges;
  for (const auto& s : nontrivial_slopes(pg.g, lower)) edges.push_back(pg.edge(s));

  std::vector<Parametrization> out;
  bool all_high = std::all_of(edges.begin(), edges.end(), [](const EdgeData& e) { return e.low() >= 1; });
  auto linear = std::find_if(edges.begin(), edges.end(), [](const EdgeData& e) { return e.high() == 1; });
  if (all_high || linear != edges.end()) {
    Parametrization p;
    p.sigma = LatticeHom::identity(base, tower);
    p.alpha = series_new(FracPoly(tower, n), f);
    p.lattice = base;
    p.tower = tower;
    if (linear != edges.end())
      p.order = linear->slope;
    else if (!pg.exact)
      p.order = initial_exponent(p.alpha);
    out.push_back(std::move(p));
    edges.erase(std::remove_if(edges.begin(), edges.end(), [](const EdgeData& e) { return e.high() == 1; }),
                edges.end());
  }

  for (const auto& e : edges) {
    BezoutData bd = minimal_denominator(base, e.slope);
    UPoly red = reduced_edge(e, bd.b, tower);
    Lattice next = lattice_join(base, e.slope);
    for (const auto& pt : zero_set(std::vector<UPoly>{red})) {
      const Tower& ext = pt.tower;
      const FieldElement& r = pt.coords.at(0);
      std::vector<Elem> vals;
      for (auto vi : bd.v) vals.push_back(r.pow(-vi).raw());
      LatticeHom step_hom(base, ext, vals);
      FracPoly lead = FracPoly::monomial(ext, n, e.slope, r.pow(bd.u).raw());

      // the twisted edge vanishes at the new term
      if (!e.poly.apply(step_hom).eval(lead).is_zero()) throw std::logic_error("Duval step does not solve its edge");

      DuvalStep st;
      st.slope = e.slope;
      st.b = bd.b;
      st.c = bd.c;
      st.u = bd.u;
      st.v = bd.v;
      st.edge = red;
      st.root = r;
      if (ext.get() == tower.get())
        st.minpoly = UPoly(tower, {fld::neg(*tower, r.raw()), fld::one(*tower)});
      else
        st.minpoly = UPoly(ext->parent, ext->minpoly);

      SeriesPoly shifted = shift_any(f.apply(step_hom), lead);
      for (auto& q : param_rec(shifted, next, e.slope)) {
        Parametrization p;
        p.tower = common_tower(q.tower, ext);
        p.sigma = hom_compose(q.sigma, step_hom);
        FracPoly moved = lead.in(q.sigma.tower()).apply(q.sigma);
        p.alpha = series_polynomial(moved) + q.alpha;
        p.lattice = q.lattice;
        p.order = e.slope;
        p.steps.push_back(st);
        p.steps.insert(p.steps.end(), q.steps.begin(), q.steps.end());
        out.push_back(std::move(p));
      }
    }
  }

  // extension bound: at most the largest edge degree above `lower`; far
  // enough out every edge is the lowest vertex alone
  int bound = pg.g.low_degree();
  for (const auto& s : hull_slopes(pg.g))
    if (order_compare(s, lower) > 0) bound = std::max(bound, pg.edge(s).high());
  long sum = 0;
  for (const auto& p : out) sum += p.tower->degree_over(*tower) * lattice_index(p.lattice, base);
  if (sum > bound) throw std::logic_error("parametrizations exceed the extension bound");
  return out;
}

ParamSet param(const SeriesPoly& f, const Lattice& base) {
  if (!monic(f)) throw std::invalid_argument("polynomial is not monic in z");
  ParamSet ps;
  ps.f = f;
  ps.base = base;
  ps.params = param_rec(f, base, below_everything(f.nvars()));
  for (const auto& p : ps.params) {
    ps.field_degrees.push_back(p.tower->degree_over(*f.tower()));
    ps.lattice_indices.push_back(lattice_index(p.lattice, base));
  }
  if (ps.total() != f.degree()) throw std::logic_error("degree identity fails for the parametrizations");
  return ps;
}

ParamSet param(const ZPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("polynomial is not monic in z");
  if (!is_quasi_ordinary(f).quasi_ordinary) throw std::invalid_argument("polynomial is not quasi-ordinary");
  return param(SeriesPoly(f), lattice_join(Lattice::standard(f.nvars()), f.lattice()));
}

ParamReport verify_param_set(const ParamSet& ps, const Q& order) {
  ParamReport rep;
  auto fail = [&](std::string msg, std::optional<size_t> i) {
    rep.ok = false;
    rep.message = std::move(msg);
    rep.index = i;
    return rep;
  };
  std::map<std::string, size_t> seen;
  for (size_t i = 0; i < ps.params.size(); ++i) {
    const auto& p = ps.params[i];
    ZPoly g = ps.f.apply(p.sigma).truncated(order);
    FracPoly a = p.alpha.expand(order);
    Tower t = common_tower(g.tower(), a.tower());
    FracPoly res = g.in(t).eval_trunc(a.in(t), order);
    if (!res.is_zero()) {
      auto [m, c] = res.initial_term();
      return fail("parametrization " + std::to_string(i) + " leaves residual term (" + c.str() + ")*" +
                      exponent_monomial_str(m, default_names(res.nvars()), res.nvars()),
                  i);
    }
    std::string key = "zero";
    if (p.order) {
      key = mon_str(*p.order, ps.f.nvars()) + "|" + tower_str(p.tower) + "|" + a.str() + "|" +
            p.sigma.str(default_names(ps.f.nvars()));
    }
    auto [it, fresh] = seen.emplace(key, i);
    if (!fresh) return fail("parametrizations " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide", i);
  }
  if (ps.total() != ps.f.degree())
    return fail("degree identity: " + std::to_string(ps.total()) + " != " + std::to_string(ps.f.degree()), std::nullopt);
  return rep;
}

}  // namespace jd
