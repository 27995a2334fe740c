#include "jungdesing/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jd {

namespace {
Q g_cap = 128;
}

void set_precision_cap(const Q& cap) {
  if (cap.sign() <= 0) throw std::invalid_argument("precision cap must be positive");
  g_cap = cap;
}
Q precision_cap() { return g_cap; }

class SeriesNode {
 public:
  SeriesKind kind = SeriesKind::Polynomial;
  Tower tower = rational_field();
  int nvars = 0;
  Lattice lattice = Lattice::standard(0);
  std::mutex mu;

  // polynomial nodes, and completed roots / substitutions
  bool complete = false;
  FracPoly poly;

  // roots
  FracPoly a0;
  SeriesPoly f;
  Mon o1;
  Elem c1;
  Q cdeg;
  FracPoly tail;
  Q reached;

  // substitutions
  Series src{std::shared_ptr<SeriesNode>()};
  std::vector<IntVec> forms;
  std::vector<Series> xi;
  std::vector<std::optional<Q>> xi_ord;  // nullopt: xi is zero
  std::vector<bool> xi_monomial;
  std::vector<Q> nt;
  std::vector<bool> nt_inf;
  Q contraction;
  bool contraction_finite = false;
  bool src_complete = false;
  FracPoly cache;
  std::optional<Q> cached_to;
  bool complete_checked = false;

  // twists
  LatticeHom sigma;

  std::optional<std::optional<Q>> order;
};

namespace {

using NodePtr = std::shared_ptr<SeriesNode>;

// every nonzero lattice point with nonnegative entries has degree >= this
Q lattice_step(const Lattice& g) {
  std::int64_t l = 1;
  for (const auto& r : g.basis())
    for (int i = 0; i < g.dim(); ++i) l = lcm_checked(l, r[i].den());
  return Q(1, l);
}

bool is_monomial(const FracPoly& p) { return p.size() == 1; }

FracPoly expand_node(SeriesNode& n, const Q& bound);
std::optional<FracPoly> complete_value(SeriesNode& n);

void root_extend(SeriesNode& n, const Q& o) {
  Q P = n.cdeg + o;
  FracPoly cur = n.a0 + n.tail;
  ZPoly g = shift_trunc(n.f.truncated(P), cur, P);
  const TowerNode& L = *n.tower;
  for (;;) {
    FracPoly g1 = g.coeff(1);
    if (g1.is_zero() || !(g1.order() == n.o1) || !fld::eq(L, g1.terms().begin()->second, n.c1))
      throw std::logic_error("linear coefficient changed during root expansion");
    FracPoly g0 = g.coeff(0);
    if (g0.is_zero()) break;
    const auto& [m0, e0] = *g0.terms().begin();
    Mon e = m0 - n.o1;
    if (!e.nonneg()) throw std::domain_error("root is not a power series");
    FracPoly t = FracPoly::monomial(n.tower, n.nvars, e, fld::neg(L, fld::div(L, e0, n.c1)));
    n.tail = n.tail + t;
    g = shift_trunc(g, t, P);
  }
  n.reached = o;
  // small linear or short roots are checked for being polynomials
  if (n.f.is_exact() && (n.f.degree() == 1 || n.tail.size() <= 4)) {
    FracPoly val = n.a0 + n.tail;
    if (n.f.exact().eval(val).is_zero()) {
      n.complete = true;
      n.poly = val;
    }
  }
}

FracPoly power_product(SeriesNode& n, const Mon& m, const Elem& coef, const Q& o) {
  const TowerNode& L = *n.tower;
  size_t l = n.xi.size();
  std::vector<std::int64_t> k(l);
  Q total;
  for (size_t i = 0; i < l; ++i) {
    Q v = form_value(n.forms[i], m);
    if (!v.is_integer()) throw std::domain_error("form not integral on an exponent");
    k[i] = v.num();
    if (k[i] == 0) continue;
    if (!n.xi_ord[i]) return FracPoly(n.tower, n.nvars);
    total += Q(k[i]) * *n.xi_ord[i];
  }
  if (total >= o) return FracPoly(n.tower, n.nvars);
  FracPoly acc = FracPoly::constant(n.tower, n.nvars, coef);
  Q have;
  for (size_t i = 0; i < l; ++i) {
    if (k[i] == 0 || !n.xi_monomial[i]) continue;
    FracPoly x = expand_node(*n.xi[i].node(), Q(1) + abs(*n.xi_ord[i])).in(n.tower);
    const auto& [e, c] = *x.terms().begin();
    acc = acc.times_monomial(Q(k[i]) * e).scaled(fld::pow(L, c, static_cast<long>(k[i])));
    have += Q(k[i]) * *n.xi_ord[i];
  }
  for (size_t i = 0; i < l; ++i) {
    if (k[i] == 0 || n.xi_monomial[i]) continue;
    if (k[i] < 0) throw std::domain_error("negative power of a series");
    Q d = *n.xi_ord[i];
    FracPoly x = n.xi[i].expand(o - (total - d)).in(n.tower);
    for (std::int64_t j = 0; j < k[i]; ++j) {
      have += d;
      acc = mul_trunc(acc, x, o - (total - have));
    }
  }
  return acc.truncated(o);
}

FracPoly subst_expand(SeriesNode& n, const Q& o) {
  FracPoly sp;
  if (n.src_complete)
    sp = *n.src.polynomial();
  else if (n.contraction_finite)
    sp = n.src.expand(o / n.contraction);
  else
    sp = n.src.expand(lattice_step(n.src.lattice()));
  FracPoly r(n.tower, n.nvars);
  Tower st = sp.tower();
  for (const auto& [m, c] : sp.terms()) {
    Elem cl = st == n.tower ? c : fld::lift(*st, *n.tower, c);
    r = r + power_product(n, m, cl, o);
  }
  return r;
}

FracPoly expand_node(SeriesNode& n, const Q& bound) {
  switch (n.kind) {
    case SeriesKind::Polynomial:
      return n.poly.truncated(bound);
    case SeriesKind::Root: {
      std::lock_guard<std::mutex> lock(n.mu);
      if (n.complete) return n.poly.truncated(bound);
      if (bound > n.reached) root_extend(n, bound);
      return (n.a0 + n.tail).truncated(bound);
    }
    case SeriesKind::Substitution: {
      std::lock_guard<std::mutex> lock(n.mu);
      if (n.complete) return n.poly.truncated(bound);
      if (n.cached_to && bound <= *n.cached_to) return n.cache.truncated(bound);
      n.cache = subst_expand(n, bound);
      n.cached_to = bound;
      return n.cache;
    }
    case SeriesKind::Twist:
      return n.src.expand(bound).apply(n.sigma);
  }
  throw std::logic_error("unknown series node");
}

std::optional<FracPoly> complete_value(SeriesNode& n) {
  switch (n.kind) {
    case SeriesKind::Polynomial:
      return n.poly;
    case SeriesKind::Root: {
      std::lock_guard<std::mutex> lock(n.mu);
      if (n.complete) return n.poly;
      return std::nullopt;
    }
    case SeriesKind::Substitution: {
      {
        std::lock_guard<std::mutex> lock(n.mu);
        if (n.complete) return n.poly;
        if (n.complete_checked) return std::nullopt;
      }
      auto sp = n.src.polynomial();
      bool all = sp.has_value();
      for (const auto& x : n.xi) all = all && x.is_complete();
      std::lock_guard<std::mutex> lock(n.mu);
      n.complete_checked = true;
      if (!all) return std::nullopt;
      // the degree of the image is bounded, so a large enough truncation is exact
      Q top = 1;
      for (const auto& [m, c] : sp->terms()) {
        Q d;
        for (size_t i = 0; i < n.xi.size(); ++i) {
          Q k = form_value(n.forms[i], m);
          auto p = n.xi[i].polynomial();
          if (!p->is_zero()) d += k * (k.sign() >= 0 ? p->max_degree() : p->order().degree());
        }
        top = std::max(top, d + 1);
      }
      n.poly = subst_expand(n, top);
      n.complete = true;
      return n.poly;
    }
    case SeriesKind::Twist: {
      auto p = n.src.polynomial();
      if (!p) return std::nullopt;
      return p->apply(n.sigma);
    }
  }
  return std::nullopt;
}

Series make_poly(const FracPoly& p) {
  auto n = std::make_shared<SeriesNode>();
  n->kind = SeriesKind::Polynomial;
  n->tower = p.tower();
  n->nvars = p.nvars();
  n->poly = p;
  n->complete = true;
  n->lattice = p.lattice();
  return Series(n);
}

Elem constant_term(const Series& a) {
  FracPoly p = a.expand(lattice_step(a.lattice()));
  return p.coeff(Mon{});
}

}  // namespace

// ---------------------------------------------------------------- handles

Series::Series() : node_(make_poly(FracPoly()).node()) {}

const Tower& Series::tower() const { return node_->tower; }
int Series::nvars() const { return node_->nvars; }
const Lattice& Series::lattice() const { return node_->lattice; }
SeriesKind Series::kind() const { return node_->kind; }
FracPoly Series::expand(const Q& bound) const { return expand_node(*node_, bound); }
bool Series::is_complete() const { return complete_value(*node_).has_value(); }
std::optional<FracPoly> Series::polynomial() const { return complete_value(*node_); }

std::optional<Q> Series::order() const {
  {
    std::lock_guard<std::mutex> lock(node_->mu);
    if (node_->order) return *node_->order;
  }
  std::optional<Q> out;
  if (auto p = polynomial()) {
    if (!p->is_zero()) out = p->order().degree();
  } else if (node_->kind == SeriesKind::Twist) {
    out = node_->src.order();
  } else {
    Q start = 1;
    const SeriesNode& n = *node_;
    if (n.kind == SeriesKind::Root && !n.a0.is_zero()) start = n.a0.order().degree() + 1;
    if (n.kind == SeriesKind::Substitution) {
      // the image of the initial source term, barring cancellation
      std::optional<Q> so = n.src.order();
      if (!so) return std::nullopt;
      Mon m = n.src.expand(*so + lattice_step(n.src.lattice())).order();
      Q est;
      bool finite = true;
      for (int j = 0; j < n.src.nvars(); ++j) {
        if (m[j].is_zero()) continue;
        finite = finite && !n.nt_inf[j];
        est += m[j] * n.nt[j];
      }
      if (finite) start = std::max(Q(1), est + 1);
    }
    for (Q b = start;; b = b * Q(2)) {
      if (b > precision_cap()) throw PrecisionError("no term of the series below the precision cap");
      FracPoly e = expand(b);
      if (!e.is_zero()) {
        out = e.order().degree();
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(node_->mu);
  node_->order = out;
  return out;
}

std::string Series::str(const Q& bound, const std::vector<std::string>& names) const {
  FracPoly p = expand(bound);
  std::string tail = "O(deg " + bound.str() + ")";
  return p.is_zero() ? tail : p.str(names) + " + " + tail;
}

std::string Series::str(const Q& bound) const { return str(bound, default_names(nvars())); }

// ---------------------------------------------------------------- SeriesPoly

SeriesPoly::SeriesPoly(int nvars, std::vector<Series> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    tower_ = common_tower(tower_, c.tower());
    if (c.nvars() > nvars_) throw std::invalid_argument("coefficient has too many variables");
  }
  while (!c_.empty()) {
    auto p = c_.back().polynomial();
    if (!p || !p->is_zero()) break;
    c_.pop_back();
  }
}

SeriesPoly::SeriesPoly(const ZPoly& f) : tower_(f.tower()), nvars_(f.nvars()) {
  for (const auto& c : f.coeffs()) c_.push_back(make_poly(FracPoly(f.tower(), f.nvars()) + c));
}

bool SeriesPoly::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Series& s) { return s.is_complete(); });
}

ZPoly SeriesPoly::exact() const {
  std::vector<FracPoly> cs;
  for (const auto& c : c_) {
    auto p = c.polynomial();
    if (!p) throw std::logic_error("coefficient is not a polynomial");
    cs.push_back(FracPoly(tower_, nvars_) + *p);
  }
  return ZPoly(nvars_, std::move(cs)).in(tower_);
}

ZPoly SeriesPoly::truncated(const Q& bound) const {
  std::vector<FracPoly> cs;
  for (const auto& c : c_) cs.push_back(FracPoly(tower_, nvars_) + c.expand(bound));
  return ZPoly(nvars_, std::move(cs)).in(tower_);
}

SeriesPoly SeriesPoly::apply(const LatticeHom& s) const {
  std::vector<Series> cs;
  for (const auto& c : c_) cs.push_back(apply_hom(s, c));
  return SeriesPoly(nvars_, std::move(cs));
}

Lattice SeriesPoly::lattice() const {
  Lattice g = Lattice::standard(nvars_);
  for (const auto& c : c_) g = lattice_join(g, c.lattice());
  return g;
}

// ---------------------------------------------------------------- constructors

Series series_polynomial(const FracPoly& p) { return make_poly(p); }

Series series_constant(const Tower& t, int nvars, const Elem& c) {
  return make_poly(FracPoly::constant(t, nvars, c));
}

Series series_variable(const Tower& t, int nvars, int var) { return make_poly(FracPoly::variable(t, nvars, var)); }

Series series_new(const FracPoly& a0_in, const SeriesPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("root of a constant polynomial");
  for (const auto& [m, c] : a0_in.terms())
    if (!m.nonneg()) throw std::invalid_argument("initial segment has negative exponents");
  int nv = std::max(f.nvars(), a0_in.nvars());
  Tower t = common_tower(a0_in.tower(), f.tower());
  FracPoly a0 = FracPoly(t, nv) + a0_in;
  const TowerNode& L = *t;

  std::optional<ZPoly> fex;
  if (f.is_exact()) {
    fex = f.exact().in(t);
    if (fex->eval(a0).is_zero()) return make_poly(a0);
  }

  auto n = std::make_shared<SeriesNode>();
  n->kind = SeriesKind::Root;
  n->tower = t;
  n->nvars = nv;
  n->a0 = a0;
  n->f = f;
  n->tail = FracPoly(t, nv);
  n->lattice = lattice_join(lattice_join(Lattice::standard(nv), a0.lattice()), f.lattice());

  Q P = a0.is_zero() ? Q(1) : std::max(Q(1), a0.max_degree() + 1);
  for (;; P = P * Q(2)) {
    if (P > precision_cap()) throw PrecisionError("precision cap reached while separating a root");
    ZPoly g = shift_trunc(f.truncated(P).in(t), a0, P);
    FracPoly g1 = g.coeff(1);
    if (g1.is_zero()) {
      if (fex && shift(*fex, a0).coeff(1).is_zero()) throw std::invalid_argument("ambiguous root");
      continue;
    }
    Mon o1 = g1.order();
    Q cdeg = o1.degree();
    FracPoly g0 = g.coeff(0);
    bool more = false;
    if (!g0.is_zero()) {
      Mon o0 = g0.order();
      Mon slope = o0 - o1;
      if (!slope.nonneg()) throw std::invalid_argument("ambiguous root");
      for (int i = 2; i <= f.degree(); ++i) {
        FracPoly gi = g.coeff(i);
        if (!gi.is_zero()) {
          if (graded_compare(gi.order() + Q(i) * slope, o0) <= 0) throw std::invalid_argument("ambiguous root");
        } else if (!(P + Q(i) * slope.degree() > o0.degree())) {
          more = true;
        }
      }
    } else {
      if (!(P > cdeg)) more = true;
      for (int i = 2; i <= f.degree(); ++i) {
        FracPoly gi = g.coeff(i);
        if (!gi.is_zero() && !(Q(i - 1) * (P - cdeg) > cdeg - gi.order().degree())) more = true;
      }
    }
    if (more) continue;
    n->o1 = o1;
    n->c1 = g1.terms().begin()->second;
    n->cdeg = cdeg;
    break;
  }
  (void)L;
  return Series(n);
}

Series series_new(const FracPoly& a0, const ZPoly& f) { return series_new(a0, SeriesPoly(f)); }

Series evaluate_new(const Series& src, const std::vector<IntVec>& forms, const std::vector<Series>& xi) {
  if (forms.size() != xi.size()) throw std::invalid_argument("one form per substituted series");
  auto n = std::make_shared<SeriesNode>();
  n->kind = SeriesKind::Substitution;
  n->src = src;
  n->forms = forms;
  n->xi = xi;
  Tower t = src.tower();
  int m = 0;
  for (const auto& x : xi) {
    t = common_tower(t, x.tower());
    m = std::max(m, x.nvars());
  }
  n->tower = t;
  n->nvars = m;
  int k = src.nvars();
  for (const auto& form : forms) {
    if (static_cast<int>(form.size()) < k) throw std::invalid_argument("form has the wrong length");
    for (const auto& row : src.lattice().basis())
      if (!form_value(form, row).is_integer()) throw std::invalid_argument("form not integral on the lattice");
  }
  Lattice g = Lattice::standard(m);
  for (size_t i = 0; i < xi.size(); ++i) {
    auto p = xi[i].polynomial();
    bool mono = p && is_monomial(*p);
    n->xi_monomial.push_back(mono);
    bool negative = std::any_of(forms[i].begin(), forms[i].end(), [](std::int64_t v) { return v < 0; });
    if (negative && !mono) throw std::invalid_argument("negative form on a non-monomial series");
    n->xi_ord.push_back(xi[i].order());
    g = lattice_join(g, xi[i].lattice());
  }
  n->lattice = g;
  n->src_complete = src.is_complete();
  n->contraction_finite = false;
  for (int j = 0; j < k; ++j) {
    Q v;
    bool inf = false;
    for (size_t i = 0; i < xi.size(); ++i) {
      if (forms[i][j] == 0) continue;
      if (!n->xi_ord[i]) {
        inf = true;
        continue;
      }
      v += Q(forms[i][j]) * *n->xi_ord[i];
    }
    n->nt.push_back(v);
    n->nt_inf.push_back(inf);
    if (inf) continue;
    if (!n->contraction_finite || v < n->contraction) n->contraction = v;
    n->contraction_finite = true;
  }
  if (!n->src_complete && n->contraction_finite && n->contraction.sign() <= 0)
    throw std::invalid_argument("non-contractive substitution");
  if (auto p = src.polynomial(); p && p->is_constant()) {
    FracPoly c(t, m);
    if (!p->is_zero()) c.add_term(Mon{}, fld::lift(*p->tower(), *t, p->terms().begin()->second));
    return make_poly(c);
  }
  return Series(n);
}

Series implicit_function(const SeriesPoly& g) {
  if (g.degree() < 1) throw std::invalid_argument("implicit function needs a z term");
  const TowerNode& L = *g.tower();
  Elem c0 = fld::lift(*g.coeff(0).tower(), L, constant_term(g.coeff(0)));
  Elem c1 = fld::lift(*g.coeff(1).tower(), L, constant_term(g.coeff(1)));
  if (!fld::is_zero(L, c0)) throw std::invalid_argument("implicit function: g does not vanish at the origin");
  if (fld::is_zero(L, c1)) throw std::invalid_argument("implicit function: dg/dz vanishes at the origin");
  return series_new(FracPoly(g.tower(), g.nvars()), g);
}

Series implicit_function(const ZPoly& g) { return implicit_function(SeriesPoly(g)); }

Series apply_hom(const LatticeHom& s_in, const Series& a) {
  LatticeHom s = s_in;
  if (s.domain().dim() != a.lattice().dim()) throw std::invalid_argument("homomorphism has the wrong dimension");
  if (!s.domain().contains(a.lattice())) s = hom_extend(s, lattice_join(s.domain(), a.lattice()));
  if (s.is_identity()) return a;
  if (auto p = a.polynomial()) return make_poly(p->apply(s));
  auto n = std::make_shared<SeriesNode>();
  n->kind = SeriesKind::Twist;
  n->src = a;
  n->sigma = s;
  n->tower = common_tower(a.tower(), s.tower());
  n->nvars = a.nvars();
  n->lattice = a.lattice();
  return Series(n);
}

Series rescale_exponents(const Series& a, const std::vector<IntVec>& rows) {
  int k = static_cast<int>(rows.size());
  std::vector<Series> vars;
  for (int j = 0; j < k; ++j) vars.push_back(series_variable(a.tower(), k, j));
  for (const auto& r : rows)
    for (const auto& b : a.lattice().basis())
      if (!form_value(r, b).is_integer()) throw std::invalid_argument("rescaled exponent is not integral");
  return evaluate_new(a, rows, vars);
}

// ---------------------------------------------------------------- arithmetic

namespace {

bool identity_forms(const SeriesNode& n) {
  int k = n.src.nvars();
  if (static_cast<int>(n.forms.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (n.forms[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

Series compose(const FracPoly& p, const std::vector<Series>& args) {
  if (static_cast<int>(args.size()) < p.nvars()) throw std::invalid_argument("missing arguments");
  if (!p.integral()) throw std::invalid_argument("composition needs integral exponents");
  // flatten nested polynomial substitutions onto shared atoms
  std::vector<Series> atoms;
  std::map<const SeriesNode*, int> index;
  auto atom_of = [&](const Series& s) -> std::optional<int> {
    auto it = index.find(s.id());
    if (it != index.end()) return it->second;
    if (static_cast<int>(atoms.size()) >= kMaxVars) return std::nullopt;
    index[s.id()] = static_cast<int>(atoms.size());
    atoms.push_back(s);
    return static_cast<int>(atoms.size()) - 1;
  };
  Tower t = p.tower();
  for (const auto& a : args) t = common_tower(t, a.tower());
  std::vector<FracPoly> images;
  bool ok = true;
  for (const auto& a : args) {
    const SeriesNode& n = *a.node();
    if (n.kind == SeriesKind::Substitution && n.src_complete && identity_forms(n) && ok) {
      FracPoly inner = *n.src.polynomial();
      std::vector<FracPoly> sub;
      for (const auto& x : n.xi) {
        auto j = atom_of(x);
        if (!j) {
          ok = false;
          break;
        }
        sub.push_back(FracPoly::variable(t, kMaxVars, *j));
      }
      if (ok) {
        FracPoly img(t, kMaxVars);
        for (const auto& [m, c] : inner.terms()) {
          FracPoly term = FracPoly::constant(t, kMaxVars, fld::lift(*inner.tower(), *t, c));
          for (int v = 0; v < inner.nvars(); ++v) term = term * sub[v].pow(static_cast<int>(m[v].num()));
          img = img + term;
        }
        images.push_back(img);
        continue;
      }
    }
    auto j = atom_of(a);
    if (!j) {
      ok = false;
      break;
    }
    images.push_back(FracPoly::variable(t, kMaxVars, *j));
  }
  if (!ok) {
    atoms = args;
    images.clear();
    for (size_t j = 0; j < args.size(); ++j) images.push_back(FracPoly::variable(t, kMaxVars, static_cast<int>(j)));
  }
  int na = static_cast<int>(atoms.size());
  FracPoly q(t, kMaxVars);
  for (const auto& [m, c] : p.terms()) {
    FracPoly term = FracPoly::constant(t, kMaxVars, fld::lift(*p.tower(), *t, c));
    for (int v = 0; v < p.nvars(); ++v) term = term * images[v].pow(static_cast<int>(m[v].num()));
    q = q + term;
  }
  FracPoly src(t, na);
  for (const auto& [m, c] : q.terms()) src.add_term(m, c);
  int nv = 0;
  for (const auto& a : atoms) nv = std::max(nv, a.nvars());
  if (src.is_constant()) return series_constant(t, nv, src.coeff(Mon{}));
  std::vector<IntVec> forms;
  for (int i = 0; i < na; ++i) {
    IntVec f(na, 0);
    f[i] = 1;
    forms.push_back(f);
  }
  Series out = evaluate_new(make_poly(src), forms, atoms);
  if (auto v = out.polynomial()) return make_poly(FracPoly(v->tower(), nv) + *v);
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Tower q = rational_field();
  return compose(FracPoly::variable(q, 2, 0) + FracPoly::variable(q, 2, 1), {a, b});
}

Series operator-(const Series& a, const Series& b) {
  Tower q = rational_field();
  return compose(FracPoly::variable(q, 2, 0) - FracPoly::variable(q, 2, 1), {a, b});
}

Series operator*(const Series& a, const Series& b) {
  Tower q = rational_field();
  return compose(FracPoly::variable(q, 2, 0) * FracPoly::variable(q, 2, 1), {a, b});
}

Series operator-(const Series& a) { return compose(-FracPoly::variable(rational_field(), 1, 0), {a}); }

// ---------------------------------------------------------------- elimination

namespace {

// copy of p in `nv` variables with variable i renamed to map[i]
MPoly remap(const MPoly& p, int nv, const std::vector<int>& map) {
  if (nv > kMaxVars) throw std::length_error("elimination needs too many variables");
  MPoly r(p.tower(), nv);
  for (const auto& [m, c] : p.terms()) {
    IMon e;
    for (int i = 0; i < p.nvars(); ++i)
      if (m[i] != 0) e[map.at(i)] += m[i];
    r.add_term(e, c);
  }
  return r;
}

std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

MPoly defpoly_in(const Series& a, int n);

// z - p with p a polynomial with rational exponents
MPoly defpoly_of_poly(const FracPoly& p, int n) {
  Tower t = p.tower();
  std::vector<std::int64_t> den(n, 1), shift(n, 0);
  for (const auto& [m, c] : p.terms())
    for (int j = 0; j < p.nvars(); ++j) {
      den[j] = lcm_checked(den[j], m[j].den());
      if (m[j].sign() < 0) shift[j] = std::max(shift[j], -m[j].floor());
    }
  std::vector<int> aux(n, -1);
  int nv = n + 1;
  for (int j = 0; j < n; ++j)
    if (den[j] > 1) aux[j] = nv++;
  if (nv > kMaxVars) throw std::length_error("elimination needs too many variables");
  MPoly d(t, nv);
  IMon zm;
  zm[n] = 1;
  for (int j = 0; j < n; ++j) zm[j] = static_cast<std::int32_t>(shift[j]);
  d.add_term(zm, fld::one(*t));
  for (const auto& [m, c] : p.terms()) {
    IMon e;
    for (int j = 0; j < p.nvars(); ++j) {
      Q v = m[j] + Q(shift[j]);
      if (aux[j] >= 0)
        e[aux[j]] = static_cast<std::int32_t>((v * Q(den[j])).num());
      else
        e[j] = static_cast<std::int32_t>(v.num());
    }
    d.add_term(e, fld::neg(*t, c));
  }
  for (int j = 0; j < n; ++j) {
    if (aux[j] < 0) continue;
    IMon ym, xm;
    ym[aux[j]] = static_cast<std::int32_t>(den[j]);
    xm[j] = 1;
    MPoly rel = MPoly::monomial(t, nv, ym, fld::one(*t)) - MPoly::monomial(t, nv, xm, fld::one(*t));
    d = resultant(rel, d, aux[j]);
  }
  return remap(d, n + 1, identity_map(n + 1));
}

MPoly defpoly_root(const SeriesNode& node, int n) {
  Tower t = node.tower;
  int zv = n, yv = n + 1, wv = n + 2;
  int nv = n + 3;
  if (nv > kMaxVars) throw std::length_error("elimination needs too many variables");
  MPoly h = MPoly::variable(t, nv, yv);
  std::vector<std::pair<int, Series>> lazy;
  for (int i = 0; i <= node.f.degree(); ++i) {
    const Series& c = node.f.coeff(i);
    auto p = c.polynomial();
    if (p && p->integral()) {
      MPoly cm = remap(p->to_mpoly(), nv, identity_map(p->nvars()));
      IMon zi;
      zi[zv] = i;
      h = h + cm.in(t) * MPoly::monomial(t, nv, zi, fld::one(*t));
    } else {
      lazy.emplace_back(i, c);
    }
  }
  for (const auto& [i, c] : lazy) {
    std::vector<int> map = identity_map(n + 1);
    map[n] = wv;
    MPoly dc = remap(defpoly_in(c, n), nv, map).in(t);
    std::vector<MPoly> images;
    for (int v = 0; v < nv; ++v) images.push_back(MPoly::variable(t, nv, v));
    IMon wz;
    wz[wv] = 1;
    wz[zv] = i;
    images[yv] = images[yv] + MPoly::monomial(t, nv, wz, fld::one(*t));
    h = resultant(dc, h.subst(images), wv);
  }
  h = h.eval_var(yv, fld::zero(*t));
  return remap(h, n + 1, identity_map(n + 1));
}

MPoly defpoly_subst(const SeriesNode& node, int n) {
  Tower t = node.tower;
  int k = node.src.nvars();
  int l = static_cast<int>(node.xi.size());
  // integral polynomials are substituted directly, the rest get a variable
  std::vector<std::optional<FracPoly>> direct(l);
  std::vector<int> wvar(l, -1);
  int nv = n + 1;
  for (int i = 0; i < l; ++i) {
    auto p = node.xi[i].polynomial();
    if (p && p->integral())
      direct[i] = FracPoly(t, kMaxVars) + *p;
    else
      wvar[i] = nv++;
  }
  if (nv > kMaxVars) throw std::length_error("elimination needs too many variables");
  MPoly ds = defpoly_in(node.src, k).in(t);
  FracPoly acc(t, nv);
  for (const auto& [m, c] : ds.terms()) {
    Mon e;
    e[n] = m[k];
    FracPoly term(t, kMaxVars);
    std::vector<std::int64_t> w(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < k; ++j) w[i] += node.forms[i][j] * m[j];
    for (int i = 0; i < l; ++i)
      if (wvar[i] >= 0) e[wvar[i]] = Q(w[i]);
    term.add_term(e, c);
    for (int i = 0; i < l && !term.is_zero(); ++i) {
      if (!direct[i] || w[i] == 0) continue;
      if (w[i] > 0) {
        term = term * direct[i]->pow(static_cast<int>(w[i]));
      } else {
        const auto& [me, mc] = *direct[i]->terms().begin();
        term = term.times_monomial(Q(w[i]) * me).scaled(fld::inv(*t, fld::pow(*t, mc, static_cast<long>(-w[i]))));
      }
    }
    for (const auto& [tm, tc] : term.terms()) acc.add_term(tm, tc);
  }
  Mon low;
  for (const auto& [m, c] : acc.terms())
    for (int v = 0; v < nv; ++v) low[v] = std::min(low[v], m[v]);
  MPoly d = remap(acc.times_monomial(Q(-1) * low).to_mpoly(), nv, identity_map(nv));
  for (int i = 0; i < l; ++i) {
    if (wvar[i] < 0) continue;
    std::vector<int> map = identity_map(n + 1);
    map[n] = wvar[i];
    MPoly dx = remap(defpoly_in(node.xi[i], n), nv, map).in(t);
    d = resultant(dx, d, wvar[i]);
  }
  return remap(d, n + 1, identity_map(n + 1));
}

MPoly defpoly_twist(const SeriesNode& node, int n) {
  MPoly ds = defpoly_in(node.src, n);
  Tower t = node.tower;
  LatticeHom s = node.sigma.in(t);
  MPoly r(t, n + 1);
  for (const auto& [m, c] : ds.terms()) {
    Mon e;
    for (int j = 0; j < n; ++j) e[j] = m[j];
    Elem cl = ds.tower() == t ? c : fld::lift(*ds.tower(), *t, c);
    r.add_term(m, fld::mul(*t, cl, s.evaluate(e)));
  }
  return r;
}

MPoly defpoly_in(const Series& a, int n) {
  if (auto p = a.polynomial()) return defpoly_of_poly(FracPoly(p->tower(), n) + *p, n);
  const SeriesNode& node = *a.node();
  switch (node.kind) {
    case SeriesKind::Root:
      return defpoly_root(node, n);
    case SeriesKind::Substitution:
      return defpoly_subst(node, n);
    case SeriesKind::Twist:
      return defpoly_twist(node, n);
    case SeriesKind::Polynomial:
      break;
  }
  throw std::logic_error("unknown series node");
}

}  // namespace

MPoly defining_polynomial(const Series& a) {
  int n = a.nvars();
  MPoly d = defpoly_in(a, n);
  if (d.is_zero() || d.degree(n) < 1) throw std::logic_error("elimination lost the series");
  return squarefree_part(primitive_part(d, n));
}

bool is_zero(const Series& a) {
  if (auto p = a.polynomial()) return p->is_zero();
  if (!a.expand(std::min(Q(8), precision_cap())).is_zero()) return false;
  int n = a.nvars();
  MPoly d = defining_polynomial(a);
  if (!d.eval_var(n, fld::zero(d.level())).is_zero()) return false;
  int deg = d.degree(n);
  if (deg == 1) return true;
  MPoly disc = discriminant(d, n);
  MPoly lc = d.coeffs_in(n).back();
  Q bound = Q(disc.ord_at_origin() + std::max(0, deg * deg - 3 * deg) * lc.ord_at_origin(), 2);
  return a.expand(bound + 1).is_zero();
}

SeriesInfo series_info(const Series& a) {
  const SeriesNode& n = *a.node();
  SeriesInfo out;
  out.kind = n.kind;
  switch (n.kind) {
    case SeriesKind::Polynomial:
      out.initial = n.poly;
      break;
    case SeriesKind::Root:
      out.initial = n.a0;
      out.equation = n.f;
      out.shift_order = n.o1;
      out.children = n.f.coeffs();
      break;
    case SeriesKind::Substitution:
      out.contraction = n.contraction;
      out.contraction_finite = n.contraction_finite;
      out.order_vector = n.nt;
      out.forms = n.forms;
      out.children = n.xi;
      out.children.insert(out.children.begin(), n.src);
      break;
    case SeriesKind::Twist:
      out.children = {n.src};
      break;
  }
  return out;
}

}  // namespace jd
