#include "jungdesing/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jd {

MPoly MPoly::constant(const Tower& t, int nvars, const Elem& c) {
  MPoly p(t, nvars);
  p.add_term(IMon{}, c);
  return p;
}

MPoly MPoly::constant(const Tower& t, int nvars, const mpq_class& c) { return constant(t, nvars, fld::from_q(*t, c)); }

MPoly MPoly::variable(const Tower& t, int nvars, int var) {
  IMon m;
  m[var] = 1;
  return monomial(t, nvars, m, fld::one(*t));
}

MPoly MPoly::monomial(const Tower& t, int nvars, const IMon& m, const Elem& c) {
  MPoly p(t, nvars);
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == IMon{}); }

Elem MPoly::coeff(const IMon& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? fld::zero(*tower_) : it->second;
}

void MPoly::add_term(const IMon& m, const Elem& c) {
  const TowerNode& L = *tower_;
  if (fld::is_zero(L, c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = fld::add(L, it->second, c);
    if (fld::is_zero(L, it->second)) terms_.erase(it);
  }
}

int MPoly::degree(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int MPoly::ord_at_origin() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
  int d = degree(var);
  std::vector<MPoly> out(std::max(d + 1, 0), MPoly(tower_, nvars_));
  for (const auto& [m, c] : terms_) {
    IMon r = m;
    r[var] = 0;
    out[m[var]].terms_.emplace(r, c);
  }
  return out;
}

MPoly MPoly::from_coeffs(int var, const std::vector<MPoly>& cs, const Tower& t, int nvars) {
  MPoly p(t, nvars);
  for (size_t k = 0; k < cs.size(); ++k)
    for (const auto& [m, c] : cs[k].terms_) {
      IMon r = m;
      r[var] += static_cast<std::int32_t>(k);
      p.add_term(r, c);
    }
  return p;
}

MPoly MPoly::derivative(int var) const {
  MPoly p(tower_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    IMon r = m;
    r[var] -= 1;
    p.add_term(r, fld::mul(*tower_, c, fld::from_q(*tower_, mpq_class(m[var]))));
  }
  return p;
}

MPoly MPoly::eval_var(int var, const Elem& value) const {
  const TowerNode& L = *tower_;
  MPoly p(tower_, nvars_);
  std::vector<Elem> powers{fld::one(L)};
  for (const auto& [m, c] : terms_) {
    while (static_cast<int>(powers.size()) <= m[var]) powers.push_back(fld::mul(L, powers.back(), value));
    IMon r = m;
    r[var] = 0;
    p.add_term(r, fld::mul(L, c, powers[m[var]]));
  }
  return p;
}

MPoly MPoly::subst(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution needs one image per variable");
  Tower t = images.empty() ? tower_ : images[0].tower_;
  int nv = images.empty() ? nvars_ : images[0].nvars_;
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly out(t, nv);
  const TowerNode& T = *t;
  for (const auto& [m, c] : terms_) {
    MPoly term = MPoly::constant(t, nv, fld::lift(*tower_, T, c));
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(t, nv, fld::one(T)));
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[m[i]];
    }
    out = out + term;
  }
  return out;
}

MPoly MPoly::in(const Tower& bigger) const {
  if (bigger == tower_) return *this;
  MPoly p(bigger, nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, fld::lift(*tower_, *bigger, c));
  return p;
}

MPoly MPoly::scaled(const Elem& c) const {
  MPoly p(tower_, nvars_);
  if (fld::is_zero(*tower_, c)) return p;
  for (const auto& [m, x] : terms_) p.terms_.emplace(m, fld::mul(*tower_, x, c));
  return p;
}

MPoly MPoly::pow(int e) const {
  MPoly r = constant(tower_, nvars_, fld::one(*tower_)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly MPoly::to_poly(int var) const {
  Poly p(std::max(degree(var) + 1, 0), fld::zero(*tower_));
  for (const auto& [m, c] : terms_) {
    IMon r = m;
    r[var] = 0;
    if (r != IMon{}) throw std::invalid_argument("polynomial involves more than one variable");
    p[m[var]] = c;
  }
  return p;
}

MPoly MPoly::from_poly(const Tower& t, int nvars, int var, const Poly& p) {
  MPoly r(t, nvars);
  for (size_t k = 0; k < p.size(); ++k) {
    IMon m;
    m[var] = static_cast<std::int32_t>(k);
    r.add_term(m, p[k]);
  }
  return r;
}

Elem MPoly::eval(const std::vector<Elem>& point) const {
  const TowerNode& L = *tower_;
  Elem s = fld::zero(L);
  for (const auto& [m, c] : terms_) {
    Elem t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = fld::mul(L, t, fld::pow(L, point[i], m[i]));
    s = fld::add(L, s, t);
  }
  return s;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
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

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.tower_ != b.tower_) {
    Tower t = common_tower(a.tower_, b.tower_);
    return a.in(t) + b.in(t);
  }
  const MPoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const MPoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  MPoly r = big;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [m, c] : small.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(tower_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, fld::neg(*tower_, c));
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.tower_ != b.tower_) {
    Tower t = common_tower(a.tower_, b.tower_);
    return a.in(t) * b.in(t);
  }
  const TowerNode& L = *a.tower_;
  MPoly r(a.tower_, std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      IMon m;
      for (int i = 0; i < kMaxVars; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, fld::mul(L, ca, cb));
    }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  if (t != a.tower_ || t != b.tower_) return a.in(t) == b.in(t);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !fld::eq(*t, ia->second, ib->second)) return false;
  return true;
}

// ---------------------------------------------------------------- division

bool divides(const MPoly& b, const MPoly& a0, MPoly* quotient) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Tower t = common_tower(a0.tower(), b.tower());
  MPoly a = a0.in(t);
  MPoly bb = b.in(t);
  const TowerNode& L = *t;
  MPoly q(t, std::max(a.nvars(), bb.nvars()));
  const auto& [bm, bc] = bb.lead();
  Elem ibc = fld::inv(L, bc);
  while (!a.is_zero()) {
    const auto& [am, ac] = a.lead();
    IMon m;
    for (int i = 0; i < kMaxVars; ++i) {
      m[i] = am[i] - bm[i];
      if (m[i] < 0) return false;
    }
    Elem c = fld::mul(L, ac, ibc);
    q.add_term(m, c);
    Elem nc = fld::neg(L, c);
    for (const auto& [em, ec] : bb.terms()) {
      IMon s;
      for (int i = 0; i < kMaxVars; ++i) s[i] = em[i] + m[i];
      a.add_term(s, fld::mul(L, ec, nc));
    }
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!divides(b, a, &q)) throw std::domain_error("inexact multivariate division");
  return q;
}

namespace {

using CoeffVec = std::vector<MPoly>;

int vdeg(const CoeffVec& v) { return static_cast<int>(v.size()) - 1; }

void vtrim(CoeffVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// pseudo remainder on coefficient vectors: lc(b)^{da-db+1} a mod b
CoeffVec vprem(CoeffVec a, const CoeffVec& b) {
  int db = vdeg(b);
  int e = vdeg(a) - db + 1;
  const MPoly& lb = b.back();
  while (vdeg(a) >= db) {
    MPoly la = a.back();
    int shift = vdeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[j + shift] = a[j + shift] - la * b[j];
    vtrim(a);
    --e;
  }
  if (e > 0) {
    MPoly f = lb.pow(e);
    for (auto& c : a) c = c * f;
  }
  return a;
}

}  // namespace

MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var) {
  Tower t = common_tower(a.tower(), b.tower());
  int nv = std::max(a.nvars(), b.nvars());
  CoeffVec av = a.in(t).coeffs_in(var), bv = b.in(t).coeffs_in(var);
  if (bv.empty()) throw std::domain_error("pseudo remainder by zero");
  if (vdeg(av) < vdeg(bv)) return a.in(t);
  return MPoly::from_coeffs(var, vprem(av, bv), t, nv);
}

MPoly content_in(const MPoly& a, int var) {
  MPoly g(a.tower(), a.nvars());
  for (const auto& c : a.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : mpoly_gcd(g, c);
    if (g.is_constant()) return MPoly::constant(a.tower(), a.nvars(), fld::one(a.level()));
  }
  return g.is_zero() ? g : normalize_unit(g);
}

MPoly primitive_part(const MPoly& a, int var) {
  if (a.is_zero()) return a;
  return divexact(a, content_in(a, var));
}

namespace {

int main_variable(const MPoly& a, const MPoly& b) {
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

MPoly make_monic_lex(const MPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(fld::inv(p.level(), p.lead().second));
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a0, const MPoly& b0) {
  Tower t = common_tower(a0.tower(), b0.tower());
  MPoly a = a0.in(t), b = b0.in(t);
  int nv = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  int x = main_variable(a, b);
  if (x < 0 || a.is_constant() || b.is_constant()) return MPoly::constant(t, nv, fld::one(*t));
  MPoly ca = content_in(a, x), cb = content_in(b, x);
  MPoly c = mpoly_gcd(ca, cb);
  MPoly pa = divexact(a, ca), pb = divexact(b, cb);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  MPoly g;
  if (pb.degree(x) <= 0) {
    g = MPoly::constant(t, nv, fld::one(*t));
  } else {
    for (;;) {
      MPoly r = pseudo_rem(pa, pb, x);
      if (r.is_zero()) {
        g = primitive_part(pb, x);
        break;
      }
      if (r.degree(x) <= 0) {
        g = MPoly::constant(t, nv, fld::one(*t));
        break;
      }
      pa = std::move(pb);
      pb = primitive_part(r, x);
    }
  }
  return normalize_unit(c * g);
}

MPoly resultant(const MPoly& a0, const MPoly& b0, int var) {
  if (a0.is_zero() || b0.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  Tower t = common_tower(a0.tower(), b0.tower());
  int nv = std::max(a0.nvars(), b0.nvars());
  CoeffVec A = a0.in(t).coeffs_in(var), B = b0.in(t).coeffs_in(var);
  MPoly one = MPoly::constant(t, nv, fld::one(*t));
  bool negate = false;
  if (vdeg(A) < vdeg(B)) {
    if ((vdeg(A) & 1) && (vdeg(B) & 1)) negate = true;
    std::swap(A, B);
  }
  if (vdeg(B) == 0) {
    MPoly r = B[0].pow(vdeg(A));
    return negate ? -r : r;
  }
  MPoly g = one, h = one;
  for (;;) {
    int da = vdeg(A), db = vdeg(B);
    int delta = da - db;
    if ((da & 1) && (db & 1)) negate = !negate;
    CoeffVec R = vprem(A, B);
    A = std::move(B);
    MPoly div = g * h.pow(delta);
    for (auto& c : R) c = divexact(c, div);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = divexact(g.pow(delta), h.pow(delta - 1));
    }
    if (B.empty()) return MPoly(t, nv);
    if (vdeg(B) == 0) break;
  }
  int da = vdeg(A);
  MPoly r = divexact(B[0].pow(da), h.pow(da - 1));
  return negate ? -r : r;
}

MPoly discriminant(const MPoly& f, int var) {
  int d = f.degree(var);
  if (d < 1) throw std::invalid_argument("discriminant needs positive degree");
  MPoly r = resultant(f, f.derivative(var), var);
  auto cs = f.coeffs_in(var);
  r = divexact(r, cs.back());
  if ((d * (d - 1) / 2) & 1) r = -r;
  return r;
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
  if (p.is_constant()) return MPoly::constant(p.tower(), p.nvars(), fld::one(p.level()));
  MPoly g = p;
  for (int v = 0; v < p.nvars(); ++v)
    if (p.degree(v) > 0) g = mpoly_gcd(g, p.derivative(v));
  return normalize_unit(divexact(p, g));
}

MPoly normalize_unit(const MPoly& p) {
  if (p.is_zero()) return p;
  const TowerNode& L = p.level();
  if (L.kind != LevelKind::Rational) return make_monic_lex(p);
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    den = lcm(den, mpz_class(c.q.get_den()));
    num = gcd(num, mpz_class(c.q.get_num()));
  }
  mpq_class f(den, num);
  if (sgn(p.lead().second.q) < 0) f = -f;
  f.canonicalize();
  Elem e;
  e.q = f;
  return p.scaled(e);
}

int mpoly_cmp(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = fld::cmp(a.level(), ia->second, ib->second); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace jd
