#include "jungdesing/fracpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jd {

namespace {

Elem lift_elem(const Tower& from, const Tower& to, const Elem& x) {
  if (from == to) return x;
  return fld::lift(*from, *to, x);
}

std::string exponent_str(const Q& q) {
  if (q.is_integer() && q.sign() > 0) return q.num() == 1 ? "" : "^" + q.str();
  return "^(" + q.str() + ")";
}

}  // namespace

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string exponent_monomial_str(const Mon& m, const std::vector<std::string>& names, int n) {
  std::string mono;
  for (int i = 0; i < n; ++i) {
    if (m[i].is_zero()) continue;
    if (!mono.empty()) mono += "*";
    mono += names.at(i) + exponent_str(m[i]);
  }
  return mono;
}

// ---------------------------------------------------------------- FracPoly

FracPoly FracPoly::constant(const Tower& t, int nvars, const Elem& c) {
  return monomial(t, nvars, Mon{}, c);
}

FracPoly FracPoly::constant(const Tower& t, int nvars, const mpq_class& c) {
  return constant(t, nvars, fld::from_q(*t, c));
}

FracPoly FracPoly::monomial(const Tower& t, int nvars, const Mon& m, const Elem& c) {
  FracPoly p(t, nvars);
  p.add_term(m, c);
  return p;
}

FracPoly FracPoly::variable(const Tower& t, int nvars, int var) {
  Mon m;
  m[var] = 1;
  return monomial(t, nvars, m, fld::one(*t));
}

FracPoly FracPoly::from_mpoly(const MPoly& p) {
  FracPoly r(p.tower(), p.nvars());
  for (const auto& [im, c] : p.terms()) {
    Mon m;
    for (int i = 0; i < p.nvars(); ++i) m[i] = im[i];
    r.terms_.emplace(m, c);
  }
  return r;
}

bool FracPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Elem FracPoly::coeff(const Mon& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? fld::zero(*tower_) : it->second;
}

void FracPoly::add_term(const Mon& m, const Elem& c) {
  if (fld::is_zero(*tower_, c)) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second = fld::add(*tower_, it->second, c);
  if (fld::is_zero(*tower_, it->second)) terms_.erase(it);
}

const Mon& FracPoly::order() const {
  if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
  return terms_.begin()->first;
}

std::pair<Mon, FieldElement> FracPoly::initial_term() const {
  if (terms_.empty()) throw std::domain_error("initial term of the zero polynomial");
  return {terms_.begin()->first, FieldElement(tower_, terms_.begin()->second)};
}

Q FracPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first.degree();
}

Lattice FracPoly::lattice() const {
  std::vector<Mon> supp;
  for (const auto& [m, c] : terms_) supp.push_back(m);
  return lattice_of_support(supp, nvars_);
}

bool FracPoly::integral() const {
  for (const auto& [m, c] : terms_)
    if (!m.integral() || !m.nonneg()) return false;
  return true;
}

FracPoly FracPoly::truncated(const Q& bound) const {
  FracPoly r(tower_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() >= bound) break;
    r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

FracPoly FracPoly::in(const Tower& bigger) const {
  if (bigger == tower_) return *this;
  if (!bigger->extends(*tower_)) throw std::invalid_argument("tower does not extend the coefficient field");
  FracPoly r(bigger, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, fld::lift(*tower_, *bigger, c));
  return r;
}

FracPoly FracPoly::scaled(const Elem& c) const {
  FracPoly r(tower_, nvars_);
  if (fld::is_zero(*tower_, c)) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, fld::mul(*tower_, x, c));
  return r;
}

FracPoly FracPoly::times_monomial(const Mon& m) const {
  FracPoly r(tower_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
  return r;
}

FracPoly FracPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power of a polynomial");
  FracPoly r = constant(tower_, nvars_, fld::one(*tower_));
  FracPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FracPoly FracPoly::apply(const LatticeHom& s) const {
  Tower t = common_tower(tower_, s.tower());
  FracPoly r(t, nvars_);
  for (const auto& [m, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), m, fld::mul(*t, lift_elem(tower_, t, c), s.in(t).evaluate(m)));
  return r;
}

FracPoly FracPoly::map_exponents(const std::vector<IntVec>& forms) const {
  int k = static_cast<int>(forms.size());
  if (k > kMaxVars) throw std::invalid_argument("too many variables");
  FracPoly r(tower_, k);
  for (const auto& [m, c] : terms_) {
    Mon e;
    for (int j = 0; j < k; ++j) e[j] = form_value(forms[j], m);
    r.add_term(e, c);
  }
  return r;
}

MPoly FracPoly::to_mpoly() const {
  MPoly r(tower_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (!m.integral() || !m.nonneg()) throw std::domain_error("exponent is not a nonnegative integer");
    IMon im;
    for (int i = 0; i < nvars_; ++i) im[i] = static_cast<std::int32_t>(m[i].num());
    r.add_term(im, c);
  }
  return r;
}

std::string FracPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono = exponent_monomial_str(m, names, nvars_);
    std::string cs = fld::str(*tower_, c);
    bool atomic = fld::is_atomic_str(cs);
    std::string term;
    if (mono.empty())
      term = atomic ? cs : "(" + cs + ")";
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = (atomic ? cs : "(" + cs + ")") + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string FracPoly::str() const { return str(default_names(nvars_)); }

FracPoly operator+(const FracPoly& a, const FracPoly& b) {
  if (a.tower_ != b.tower_) {
    Tower t = common_tower(a.tower_, b.tower_);
    return a.in(t) + b.in(t);
  }
  const FracPoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const FracPoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  FracPoly r = big;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [m, c] : small.terms_) r.add_term(m, c);
  return r;
}

FracPoly FracPoly::operator-() const {
  FracPoly r(tower_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, fld::neg(*tower_, c));
  return r;
}

FracPoly operator-(const FracPoly& a, const FracPoly& b) { return a + (-b); }

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  if (a.tower_ != b.tower_) {
    Tower t = common_tower(a.tower_, b.tower_);
    return a.in(t) * b.in(t);
  }
  FracPoly r(a.tower_, std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, fld::mul(*a.tower_, ca, cb));
  return r;
}

bool operator==(const FracPoly& a, const FracPoly& b) {
  if (a.tower_ != b.tower_) {
    Tower t = common_tower(a.tower_, b.tower_);
    return a.in(t) == b.in(t);
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !fld::eq(*a.tower_, i->second, j->second)) return false;
  return true;
}

FracPoly mul_trunc(const FracPoly& a, const FracPoly& b, const Q& bound) {
  if (a.tower() != b.tower()) {
    Tower t = common_tower(a.tower(), b.tower());
    return mul_trunc(a.in(t), b.in(t), bound);
  }
  const TowerNode& L = a.level();
  FracPoly r(a.tower(), std::max(a.nvars(), b.nvars()));
  for (const auto& [ma, ca] : a.terms()) {
    Q da = ma.degree();
    if (b.is_zero() || da + b.order().degree() >= bound) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() >= bound) break;
      r.add_term(ma + mb, fld::mul(L, ca, cb));
    }
  }
  return r;
}

FracPoly pow_trunc(const FracPoly& a, int e, const Q& bound) {
  if (e < 0) throw std::domain_error("negative power of a polynomial");
  FracPoly r = FracPoly::constant(a.tower(), a.nvars(), fld::one(a.level())).truncated(bound);
  FracPoly b = a.truncated(bound);
  while (e > 0) {
    if (e & 1) r = mul_trunc(r, b, bound);
    e >>= 1;
    if (e) b = mul_trunc(b, b, bound);
  }
  return r;
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(int nvars, std::vector<FracPoly> coeffs) : tower_(rational_field()), nvars_(nvars) {
  for (const auto& c : coeffs) tower_ = common_tower(tower_, c.tower());
  for (auto& c : coeffs) {
    c = c.in(tower_);
    if (c.nvars() > nvars_) throw std::invalid_argument("coefficient has too many variables");
  }
  c_ = std::move(coeffs);
  for (auto& c : c_) c = FracPoly(tower_, nvars_) + c;
  trim();
}

ZPoly ZPoly::from_mpoly(const MPoly& p) {
  int n = p.nvars() - 1;
  if (n < 0) throw std::invalid_argument("polynomial needs a z variable");
  ZPoly r(p.tower(), n);
  r.c_.assign(std::max(0, p.degree(n) + 1), FracPoly(p.tower(), n));
  for (const auto& [im, c] : p.terms()) {
    Mon m;
    for (int i = 0; i < n; ++i) m[i] = im[i];
    r.c_[im[n]].add_term(m, c);
  }
  r.trim();
  return r;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool ZPoly::is_monic() const {
  if (c_.empty()) return false;
  const FracPoly& l = c_.back();
  return l.size() == 1 && l.order().is_zero() && fld::is_one(*tower_, l.terms().begin()->second);
}

FracPoly ZPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return FracPoly(tower_, nvars_);
  return c_[i];
}

int ZPoly::low_degree() const {
  for (int i = 0; i <= degree(); ++i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

bool ZPoly::integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const FracPoly& c) { return c.integral(); });
}

Lattice ZPoly::lattice() const {
  std::vector<Mon> supp;
  for (const auto& c : c_)
    for (const auto& [m, x] : c.terms()) supp.push_back(m);
  return lattice_of_support(supp, nvars_);
}

ZPoly ZPoly::truncated(const Q& bound) const {
  ZPoly r(tower_, nvars_);
  for (const auto& c : c_) r.c_.push_back(c.truncated(bound));
  r.trim();
  return r;
}

ZPoly ZPoly::in(const Tower& bigger) const {
  if (bigger == tower_) return *this;
  ZPoly r(bigger, nvars_);
  for (const auto& c : c_) r.c_.push_back(c.in(bigger));
  return r;
}

ZPoly ZPoly::apply(const LatticeHom& s) const {
  std::vector<FracPoly> cs;
  for (const auto& c : c_) cs.push_back(c.apply(s));
  ZPoly r(nvars_, std::move(cs));
  return r.in(common_tower(r.tower_, s.tower()));
}

ZPoly ZPoly::map_exponents(const std::vector<IntVec>& forms) const {
  std::vector<FracPoly> cs;
  for (const auto& c : c_) cs.push_back(c.map_exponents(forms));
  ZPoly r(static_cast<int>(forms.size()), std::move(cs));
  return r.in(tower_);
}

FracPoly ZPoly::eval_trunc(const FracPoly& a, const Q& bound) const {
  Tower t = common_tower(tower_, a.tower());
  FracPoly r(t, nvars_);
  for (int i = degree(); i >= 0; --i) r = mul_trunc(r, a, bound) + c_[i].truncated(bound).in(t);
  return r;
}

FracPoly ZPoly::eval(const FracPoly& a) const {
  Tower t = common_tower(tower_, a.tower());
  FracPoly r(t, nvars_);
  for (int i = degree(); i >= 0; --i) r = r * a + c_[i].in(t);
  return r;
}

MPoly ZPoly::to_mpoly() const {
  MPoly r(tower_, nvars_ + 1);
  for (int i = 0; i <= degree(); ++i) {
    MPoly ci = c_[i].to_mpoly();
    for (const auto& [im, c] : ci.terms()) {
      IMon e = im;
      e[nvars_] = i;
      r.add_term(e, c);
    }
  }
  return r;
}

std::string ZPoly::str(const std::vector<std::string>& names, const std::string& zname) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string zp = i == 0 ? "" : (i == 1 ? zname : zname + "^" + std::to_string(i));
    std::string cs = c_[i].str(names);
    std::string term;
    if (zp.empty())
      term = c_[i].size() == 1 ? cs : "(" + cs + ")";
    else if (cs == "1")
      term = zp;
    else if (cs == "-1")
      term = "-" + zp;
    else if (c_[i].size() == 1)
      term = cs + "*" + zp;
    else
      term = "(" + cs + ")*" + zp;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  int n = std::max(a.nvars_, b.nvars_);
  std::vector<FracPoly> cs(std::max(a.c_.size(), b.c_.size()), FracPoly(a.tower_, n));
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return ZPoly(n, std::move(cs));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  int n = std::max(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return ZPoly(common_tower(a.tower_, b.tower_), n);
  std::vector<FracPoly> cs(a.c_.size() + b.c_.size() - 1, FracPoly(a.tower_, n));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) cs[i + j] = cs[i + j] + a.c_[i] * b.c_[j];
  return ZPoly(n, std::move(cs));
}

bool operator==(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

namespace {

// Horner step r*(z + a), all products truncated when bound is set
std::vector<FracPoly> times_linear(const std::vector<FracPoly>& r, const FracPoly& a, const Q* bound) {
  std::vector<FracPoly> out(r.size() + 1, FracPoly(a.tower(), a.nvars()));
  for (size_t i = 0; i < r.size(); ++i) {
    out[i + 1] = out[i + 1] + r[i];
    out[i] = out[i] + (bound ? mul_trunc(r[i], a, *bound) : r[i] * a);
  }
  return out;
}

ZPoly shift_impl(const ZPoly& f, const FracPoly& a, const Q* bound) {
  if (f.is_zero()) return f;
  Tower t = common_tower(f.tower(), a.tower());
  int n = std::max(f.nvars(), a.nvars());
  FracPoly al = FracPoly(t, n) + a.in(t);
  if (bound) al = al.truncated(*bound);
  std::vector<FracPoly> r;
  for (int i = f.degree(); i >= 0; --i) {
    r = times_linear(r, al, bound);
    if (r.empty()) r.push_back(FracPoly(t, n));
    FracPoly c = f.coeff(i).in(t);
    r[0] = r[0] + (bound ? c.truncated(*bound) : c);
  }
  return ZPoly(n, std::move(r));
}

}  // namespace

ZPoly shift(const ZPoly& f, const FracPoly& a) { return shift_impl(f, a, nullptr); }
ZPoly shift_trunc(const ZPoly& f, const FracPoly& a, const Q& bound) { return shift_impl(f, a, &bound); }

// ---------------------------------------------------------------- edges

size_t EdgeData::size() const {
  size_t k = 0;
  for (const auto& c : poly.coeffs()) k += c.size();
  return k;
}

namespace {

EdgeData edge_impl(const ZPoly& g, const Mon& slope, const Q* known) {
  if (g.is_zero()) throw std::domain_error("edge of the zero polynomial");
  bool have = false;
  Mon best;
  for (int i = 0; i <= g.degree(); ++i) {
    const FracPoly& c = g.coeffs()[i];
    if (c.is_zero()) continue;
    Mon v = c.order() + Q(i) * slope;
    if (!have || graded_compare(v, best) < 0) best = v, have = true;
  }
  if (known) {
    Q top = best.degree(), sd = slope.degree();
    for (int i = 0; i < g.degree(); ++i)
      if (g.coeffs()[i].is_zero() && !(*known + Q(i) * sd > top))
        throw PrecisionError("coefficient precision too low to certify the edge");
  }
  EdgeData e;
  e.slope = slope;
  e.value = best;
  std::vector<FracPoly> cs(g.degree() + 1, FracPoly(g.tower(), g.nvars()));
  for (int i = 0; i <= g.degree(); ++i) {
    if (g.coeffs()[i].is_zero()) continue;
    auto [m, c] = g.coeffs()[i].initial_term();
    if (m + Q(i) * slope == best) cs[i].add_term(m, c.raw());
  }
  e.poly = ZPoly(g.nvars(), std::move(cs)).in(g.tower());
  return e;
}

std::vector<Mon> candidate_slopes(const ZPoly& g) {
  std::vector<std::pair<int, Mon>> pts;
  for (int i = 0; i <= g.degree(); ++i)
    if (!g.coeffs()[i].is_zero()) pts.emplace_back(i, g.coeffs()[i].order());
  std::set<Mon, GradedLess> out;
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      out.insert(Q(1, pts[b].first - pts[a].first) * (pts[a].second - pts[b].second));
  return {out.begin(), out.end()};
}

}  // namespace

EdgeData edge_equation(const ZPoly& g, const Mon& slope) { return edge_impl(g, slope, nullptr); }
EdgeData edge_equation(const ZPoly& g, const Mon& slope, const Q& known) { return edge_impl(g, slope, &known); }

std::vector<Mon> hull_slopes(const ZPoly& g) {
  std::vector<Mon> out;
  for (const auto& n : candidate_slopes(g))
    if (edge_equation(g, n).size() >= 2) out.push_back(n);
  return out;
}

std::vector<Mon> nontrivial_slopes(const ZPoly& g, const Mon& lower) {
  std::vector<Mon> out;
  for (const auto& n : candidate_slopes(g))
    if (n.nonneg() && graded_compare(n, lower) > 0 && edge_equation(g, n).size() >= 2) out.push_back(n);
  return out;
}

QuasiOrdinaryData is_quasi_ordinary(const ZPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("quasi-ordinary test needs a monic polynomial");
  if (!f.integral()) throw std::invalid_argument("quasi-ordinary test needs integral exponents");
  QuasiOrdinaryData out;
  int n = f.nvars();
  out.exponents.assign(n, 0);
  if (f.degree() <= 1) {
    out.quasi_ordinary = true;
    out.discriminant = MPoly::constant(f.tower(), n + 1, mpq_class(1));
    return out;
  }
  out.discriminant = discriminant(f.to_mpoly(), n);
  if (out.discriminant.is_zero()) return out;
  const auto& terms = out.discriminant.terms();
  for (int j = 0; j < n; ++j) {
    int lo = terms.begin()->first[j];
    for (const auto& [m, c] : terms) lo = std::min(lo, static_cast<int>(m[j]));
    out.exponents[j] = lo;
  }
  IMon mono;
  for (int j = 0; j < n; ++j) mono[j] = out.exponents[j];
  out.quasi_ordinary = out.discriminant.terms().count(mono) > 0;
  return out;
}

}  // namespace jd
