#include "jungdesing/field.hpp"

#include <stdexcept>

#include "jungdesing/factor.hpp"

namespace jd {

// ---------------------------------------------------------------- towers

bool TowerNode::has_transcendental() const {
  for (const TowerNode* p = this; p; p = p->parent.get())
    if (p->kind == LevelKind::Transcendental) return true;
  return false;
}

long TowerNode::algebraic_degree() const {
  long d = 1;
  for (const TowerNode* p = this; p; p = p->parent.get()) d *= p->degree();
  return d;
}

long TowerNode::degree_over(const TowerNode& anc) const {
  long d = 1;
  const TowerNode* p = this;
  for (; p && p != &anc; p = p->parent.get()) d *= p->degree();
  if (!p) throw std::invalid_argument("tower is not an extension of the given field");
  return d;
}

bool TowerNode::extends(const TowerNode& anc) const {
  for (const TowerNode* p = this; p; p = p->parent.get())
    if (p == &anc) return true;
  return false;
}

Tower rational_field() {
  static const Tower q = std::make_shared<const TowerNode>();
  return q;
}

Tower adjoin_transcendental(const Tower& base, const std::string& name) {
  auto n = std::make_shared<TowerNode>();
  n->kind = LevelKind::Transcendental;
  n->name = name;
  n->parent = base;
  n->depth = base->depth + 1;
  n->alg_count = base->alg_count;
  return n;
}

Tower adjoin_algebraic(const Tower& base, Poly minpoly, bool verify, std::string name) {
  const TowerNode& B = *base;
  upoly::trim(B, minpoly);
  if (minpoly.size() < 3) throw std::invalid_argument("minimal polynomial must have degree >= 2");
  if (!fld::is_one(B, minpoly.back())) throw std::invalid_argument("minimal polynomial must be monic");
  if (verify) {
    auto fs = factor_univariate(UPoly(base, minpoly));
    if (fs.size() != 1 || fs[0].degree() != upoly::deg(minpoly))
      throw std::invalid_argument("minimal polynomial is reducible");
  }
  auto n = std::make_shared<TowerNode>();
  n->kind = LevelKind::Algebraic;
  n->alg_count = base->alg_count + 1;
  n->name = name.empty() ? "g" + std::to_string(n->alg_count) : std::move(name);
  n->parent = base;
  n->depth = base->depth + 1;
  n->minpoly = std::move(minpoly);
  return n;
}

Tower common_tower(const Tower& a, const Tower& b) {
  if (a == b) return a;
  if (a->extends(*b)) return a;
  if (b->extends(*a)) return b;
  throw std::invalid_argument("elements live in unrelated field towers");
}

std::string tower_str(const Tower& t) {
  std::vector<const TowerNode*> chain;
  for (const TowerNode* p = t.get(); p; p = p->parent.get()) chain.push_back(p);
  std::string out = "Q";
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const TowerNode* n = *it;
    if (n->kind == LevelKind::Transcendental) out += "(" + n->name + ")";
    if (n->kind == LevelKind::Algebraic)
      out += "(" + n->name + " : " + upoly::str(*n->parent, n->minpoly, n->name) + " = 0)";
  }
  return out;
}

// ---------------------------------------------------------------- elements

namespace fld {

Elem zero(const TowerNode& L) {
  Elem e;
  if (L.kind == LevelKind::Transcendental) e.b.push_back(one(*L.parent));
  return e;
}

Elem one(const TowerNode& L) {
  Elem e;
  switch (L.kind) {
    case LevelKind::Rational:
      e.q = 1;
      break;
    case LevelKind::Algebraic:
      e.a.push_back(one(*L.parent));
      break;
    case LevelKind::Transcendental:
      e.a.push_back(one(*L.parent));
      e.b.push_back(one(*L.parent));
      break;
  }
  return e;
}

Elem from_q(const TowerNode& L, const mpq_class& q) {
  if (L.kind == LevelKind::Rational) {
    Elem e;
    e.q = q;
    return e;
  }
  Elem inner = from_q(*L.parent, q);
  Elem e;
  if (!is_zero(*L.parent, inner)) e.a.push_back(std::move(inner));
  if (L.kind == LevelKind::Transcendental) e.b.push_back(one(*L.parent));
  return e;
}

Elem gen(const TowerNode& L) {
  if (L.kind == LevelKind::Rational) throw std::invalid_argument("rational level has no generator");
  Elem e;
  e.a = upoly::x(*L.parent);
  if (L.kind == LevelKind::Transcendental) e.b.push_back(one(*L.parent));
  if (L.kind == LevelKind::Algebraic && L.degree() == 1) e.a = upoly::rem(*L.parent, e.a, L.minpoly);
  return e;
}

bool is_zero(const TowerNode& L, const Elem& x) {
  return L.kind == LevelKind::Rational ? sgn(x.q) == 0 : x.a.empty();
}

bool is_one(const TowerNode& L, const Elem& x) {
  if (L.kind == LevelKind::Rational) return x.q == 1;
  if (x.a.size() != 1 || !is_one(*L.parent, x.a[0])) return false;
  return L.kind != LevelKind::Transcendental || (x.b.size() == 1 && is_one(*L.parent, x.b[0]));
}

bool eq(const TowerNode& L, const Elem& x, const Elem& y) {
  if (L.kind == LevelKind::Rational) return x.q == y.q;
  if (!upoly::eq(*L.parent, x.a, y.a)) return false;
  return L.kind != LevelKind::Transcendental || upoly::eq(*L.parent, x.b, y.b);
}

int cmp(const TowerNode& L, const Elem& x, const Elem& y) {
  if (L.kind == LevelKind::Rational) return cmp(x.q, y.q) < 0 ? -1 : (cmp(x.q, y.q) > 0 ? 1 : 0);
  if (int c = upoly::cmp(*L.parent, x.a, y.a); c != 0) return c;
  if (L.kind == LevelKind::Transcendental) return upoly::cmp(*L.parent, x.b, y.b);
  return 0;
}

namespace {

// bring num/den to lowest terms with a monic denominator
Elem normalize_fraction(const TowerNode& L, Poly num, Poly den) {
  const TowerNode& P = *L.parent;
  if (den.empty()) throw std::domain_error("division by zero");
  Elem e;
  if (num.empty()) {
    e.b.push_back(one(P));
    return e;
  }
  if (den.size() > 1) {
    Poly g = upoly::gcd(P, num, den);
    if (g.size() > 1) {
      num = upoly::quo(P, num, g);
      den = upoly::quo(P, den, g);
    }
  }
  if (!is_one(P, den.back())) {
    Elem c = inv(P, den.back());
    num = upoly::scale(P, num, c);
    den = upoly::scale(P, den, c);
  }
  e.a = std::move(num);
  e.b = std::move(den);
  return e;
}

}  // namespace

Elem add(const TowerNode& L, const Elem& x, const Elem& y) {
  switch (L.kind) {
    case LevelKind::Rational: {
      Elem e;
      e.q = x.q + y.q;
      return e;
    }
    case LevelKind::Algebraic: {
      Elem e;
      e.a = upoly::add(*L.parent, x.a, y.a);
      return e;
    }
    case LevelKind::Transcendental: {
      const TowerNode& P = *L.parent;
      if (x.a.empty()) return y;
      if (y.a.empty()) return x;
      if (upoly::eq(P, x.b, y.b)) {
        Poly num = upoly::add(P, x.a, y.a);
        if (x.b.size() == 1) {
          Elem e;
          e.a = std::move(num);
          e.b = x.b;
          return e;
        }
        return normalize_fraction(L, std::move(num), x.b);
      }
      Poly num = upoly::add(P, upoly::mul(P, x.a, y.b), upoly::mul(P, y.a, x.b));
      return normalize_fraction(L, std::move(num), upoly::mul(P, x.b, y.b));
    }
  }
  return {};
}

Elem neg(const TowerNode& L, const Elem& x) {
  Elem e;
  if (L.kind == LevelKind::Rational) {
    e.q = -x.q;
    return e;
  }
  e.a = upoly::neg(*L.parent, x.a);
  e.b = x.b;
  return e;
}

Elem sub(const TowerNode& L, const Elem& x, const Elem& y) { return add(L, x, neg(L, y)); }

Elem mul(const TowerNode& L, const Elem& x, const Elem& y) {
  switch (L.kind) {
    case LevelKind::Rational: {
      Elem e;
      e.q = x.q * y.q;
      return e;
    }
    case LevelKind::Algebraic: {
      Elem e;
      if (x.a.empty() || y.a.empty()) return e;
      e.a = upoly::rem(*L.parent, upoly::mul(*L.parent, x.a, y.a), L.minpoly);
      return e;
    }
    case LevelKind::Transcendental: {
      const TowerNode& P = *L.parent;
      if (x.a.empty() || y.a.empty()) return zero(L);
      if (x.b.size() == 1 && y.b.size() == 1) {
        Elem e;
        e.a = upoly::mul(P, x.a, y.a);
        e.b = x.b;
        return e;
      }
      Poly n1 = x.a, d1 = x.b, n2 = y.a, d2 = y.b;
      if (d2.size() > 1) {
        Poly g = upoly::gcd(P, n1, d2);
        if (g.size() > 1) n1 = upoly::quo(P, n1, g), d2 = upoly::quo(P, d2, g);
      }
      if (d1.size() > 1) {
        Poly g = upoly::gcd(P, n2, d1);
        if (g.size() > 1) n2 = upoly::quo(P, n2, g), d1 = upoly::quo(P, d1, g);
      }
      Poly num = upoly::mul(P, n1, n2), den = upoly::mul(P, d1, d2);
      Elem e;
      if (!is_one(P, den.back())) {
        Elem c = inv(P, den.back());
        num = upoly::scale(P, num, c);
        den = upoly::scale(P, den, c);
      }
      e.a = std::move(num);
      e.b = std::move(den);
      return e;
    }
  }
  return {};
}

Elem inv(const TowerNode& L, const Elem& x) {
  if (is_zero(L, x)) throw std::domain_error("division by zero");
  switch (L.kind) {
    case LevelKind::Rational: {
      Elem e;
      e.q = 1 / x.q;
      return e;
    }
    case LevelKind::Algebraic: {
      Poly s, t;
      Poly g = upoly::xgcd(*L.parent, x.a, L.minpoly, s, t);
      if (g.size() != 1) throw std::domain_error("element not invertible: minimal polynomial is reducible");
      Elem e;
      e.a = std::move(s);
      return e;
    }
    case LevelKind::Transcendental: {
      const TowerNode& P = *L.parent;
      Poly num = x.b, den = x.a;
      Elem c = inv(P, den.back());
      Elem e;
      e.a = upoly::scale(P, num, c);
      e.b = upoly::scale(P, den, c);
      return e;
    }
  }
  return {};
}

Elem div(const TowerNode& L, const Elem& x, const Elem& y) { return mul(L, x, inv(L, y)); }

Elem pow(const TowerNode& L, const Elem& x, long e) {
  if (e < 0) return pow(L, inv(L, x), -e);
  Elem r = one(L), b = x;
  while (e > 0) {
    if (e & 1) r = mul(L, r, b);
    e >>= 1;
    if (e) b = mul(L, b, b);
  }
  return r;
}

Elem lift(const TowerNode& from, const TowerNode& to, const Elem& x) {
  if (&from == &to) return x;
  if (!to.parent) throw std::invalid_argument("cannot lift into a smaller tower");
  Elem inner = lift(from, *to.parent, x);
  Elem e;
  if (!is_zero(*to.parent, inner)) e.a.push_back(std::move(inner));
  if (to.kind == LevelKind::Transcendental) e.b.push_back(one(*to.parent));
  return e;
}

std::optional<mpq_class> as_rational(const TowerNode& L, const Elem& x) {
  if (L.kind == LevelKind::Rational) return x.q;
  if (x.a.empty()) return mpq_class(0);
  if (x.a.size() != 1) return std::nullopt;
  if (L.kind == LevelKind::Transcendental && x.b.size() != 1) return std::nullopt;
  return as_rational(*L.parent, x.a[0]);
}

bool is_atomic_str(const std::string& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return false;
  return true;
}

std::string str(const TowerNode& L, const Elem& x) {
  if (L.kind == LevelKind::Rational) return x.q.get_str();
  const TowerNode& P = *L.parent;
  std::string num = upoly::str(P, x.a, L.name);
  if (L.kind == LevelKind::Algebraic || x.b.size() == 1) return num;
  std::string den = upoly::str(P, x.b, L.name);
  bool den_atomic = is_atomic_str(den) && den.find('*') == std::string::npos && den.find('/') == std::string::npos;
  if (!is_atomic_str(num) || num.find('/') != std::string::npos) num = "(" + num + ")";
  if (!den_atomic) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace fld

// ---------------------------------------------------------------- polynomials

namespace upoly {

void trim(const TowerNode& L, Poly& p) {
  while (!p.empty() && fld::is_zero(L, p.back())) p.pop_back();
}

Poly constant(const TowerNode& L, const Elem& c) {
  Poly p;
  if (!fld::is_zero(L, c)) p.push_back(c);
  return p;
}

Poly monomial(const TowerNode& L, const Elem& c, int k) {
  if (fld::is_zero(L, c)) return {};
  Poly p(k + 1, fld::zero(L));
  p[k] = c;
  return p;
}

Poly x(const TowerNode& L) { return monomial(L, fld::one(L), 1); }

Poly add(const TowerNode& L, const Poly& a, const Poly& b) {
  const Poly& lo = a.size() < b.size() ? a : b;
  const Poly& hi = a.size() < b.size() ? b : a;
  Poly r = hi;
  for (size_t i = 0; i < lo.size(); ++i) r[i] = fld::add(L, hi[i], lo[i]);
  trim(L, r);
  return r;
}

Poly neg(const TowerNode& L, const Poly& a) {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(fld::neg(L, c));
  return r;
}

Poly sub(const TowerNode& L, const Poly& a, const Poly& b) { return add(L, a, neg(L, b)); }

Poly mul(const TowerNode& L, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, fld::zero(L));
  for (size_t i = 0; i < a.size(); ++i) {
    if (fld::is_zero(L, a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (fld::is_zero(L, b[j])) continue;
      r[i + j] = fld::add(L, r[i + j], fld::mul(L, a[i], b[j]));
    }
  }
  trim(L, r);
  return r;
}

Poly scale(const TowerNode& L, const Poly& a, const Elem& c) {
  if (fld::is_zero(L, c)) return {};
  if (fld::is_one(L, c)) return a;
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(fld::mul(L, x, c));
  trim(L, r);
  return r;
}

Poly pow(const TowerNode& L, const Poly& a, int e) {
  Poly r = constant(L, fld::one(L)), b = a;
  while (e > 0) {
    if (e & 1) r = mul(L, r, b);
    e >>= 1;
    if (e) b = mul(L, b, b);
  }
  return r;
}

void divmod(const TowerNode& L, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, fld::zero(L));
  bool monic_b = fld::is_one(L, b.back());
  Elem ilc = monic_b ? fld::one(L) : fld::inv(L, b.back());
  for (int k = deg(r) - deg(b); k >= 0; --k) {
    const Elem& top = r[k + b.size() - 1];
    if (fld::is_zero(L, top)) continue;
    Elem c = monic_b ? top : fld::mul(L, top, ilc);
    for (size_t j = 0; j < b.size(); ++j) {
      if (fld::is_zero(L, b[j])) continue;
      r[k + j] = fld::sub(L, r[k + j], fld::mul(L, c, b[j]));
    }
    q[k] = std::move(c);
  }
  r.resize(b.size() - 1);
  trim(L, r);
  trim(L, q);
}

Poly rem(const TowerNode& L, const Poly& a, const Poly& b) {
  if (a.size() < b.size()) return a;
  Poly q, r;
  divmod(L, a, b, q, r);
  return r;
}

Poly quo(const TowerNode& L, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(L, a, b, q, r);
  return q;
}

Poly divexact(const TowerNode& L, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(L, a, b, q, r);
  if (!r.empty()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly monic(const TowerNode& L, const Poly& a) {
  if (a.empty() || fld::is_one(L, a.back())) return a;
  return scale(L, a, fld::inv(L, a.back()));
}

Poly gcd(const TowerNode& L, const Poly& a, const Poly& b) {
  Poly x = monic(L, a), y = monic(L, b);
  while (!y.empty()) {
    Poly r = monic(L, rem(L, x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly xgcd(const TowerNode& L, const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0 = constant(L, fld::one(L)), s1, t0, t1 = constant(L, fld::one(L));
  while (!r1.empty()) {
    Poly q, r;
    divmod(L, r0, r1, q, r);
    Poly s2 = sub(L, s0, mul(L, q, s1));
    Poly t2 = sub(L, t0, mul(L, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  Elem c = fld::inv(L, r0.back());
  s = scale(L, s0, c);
  t = scale(L, t0, c);
  return scale(L, r0, c);
}

Poly deriv(const TowerNode& L, const Poly& a) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(fld::mul(L, a[i], fld::from_q(L, mpq_class(static_cast<long>(i)))));
  trim(L, r);
  return r;
}

Elem eval(const TowerNode& L, const Poly& a, const Elem& x) {
  Elem r = fld::zero(L);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = fld::add(L, fld::mul(L, r, x), *it);
  return r;
}

Poly compose(const TowerNode& L, const Poly& a, const Poly& b) {
  Poly r;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = add(L, mul(L, r, b), constant(L, *it));
  return r;
}

Poly shift(const TowerNode& L, const Poly& a, const Elem& c) {
  Poly lin = constant(L, c);
  lin = add(L, lin, x(L));
  return compose(L, a, lin);
}

Elem resultant(const TowerNode& L, const Poly& a0, const Poly& b0) {
  if (a0.empty() || b0.empty()) throw std::invalid_argument("resultant of zero polynomial");
  Poly a = a0, b = b0;
  Elem acc = fld::one(L);
  for (;;) {
    int da = deg(a), db = deg(b);
    if (db == 0) return fld::mul(L, acc, fld::pow(L, b[0], da));
    if (da == 0) return fld::mul(L, acc, fld::pow(L, a[0], db));
    if (da < db) {
      if ((da & 1) && (db & 1)) acc = fld::neg(L, acc);
      std::swap(a, b);
      continue;
    }
    Poly r = rem(L, a, b);
    if (r.empty()) return fld::zero(L);
    // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    if ((da & 1) && (db & 1)) acc = fld::neg(L, acc);
    acc = fld::mul(L, acc, fld::pow(L, b.back(), da - deg(r)));
    a = std::move(b);
    b = std::move(r);
  }
}

Poly lift(const TowerNode& from, const TowerNode& to, const Poly& a) {
  if (&from == &to) return a;
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(fld::lift(from, to, c));
  return r;
}

bool eq(const TowerNode& L, const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!fld::eq(L, a[i], b[i])) return false;
  return true;
}

int cmp(const TowerNode& L, const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (int c = fld::cmp(L, a[i], b[i]); c != 0) return c;
  return 0;
}

bool is_squarefree(const TowerNode& L, const Poly& a) { return deg(gcd(L, a, deriv(L, a))) <= 0; }

std::string str(const TowerNode& L, const Poly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int k = deg(a); k >= 0; --k) {
    if (fld::is_zero(L, a[k])) continue;
    std::string c = fld::str(L, a[k]);
    bool atomic = fld::is_atomic_str(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = atomic ? c : "(" + c + ")";
    } else if (c == "1") {
      term = mono;
    } else if (c == "-1") {
      term = "-" + mono;
    } else {
      term = (atomic ? c : "(" + c + ")") + "*" + mono;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace upoly

// ---------------------------------------------------------------- wrappers

FieldElement FieldElement::in(const Tower& bigger) const {
  if (bigger == tower_) return *this;
  return {bigger, fld::lift(*tower_, *bigger, e_)};
}

FieldElement FieldElement::inverse() const { return {tower_, fld::inv(*tower_, e_)}; }
FieldElement FieldElement::pow(long e) const { return {tower_, fld::pow(*tower_, e_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, fld::add(*t, a.in(t).e_, b.in(t).e_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, fld::sub(*t, a.in(t).e_, b.in(t).e_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, fld::mul(*t, a.in(t).e_, b.in(t).e_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, fld::div(*t, a.in(t).e_, b.in(t).e_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return fld::eq(*t, a.in(t).e_, b.in(t).e_);
}

UPoly UPoly::from_rationals(const Tower& t, const std::vector<mpq_class>& coeffs) {
  Poly p;
  for (const auto& q : coeffs) p.push_back(fld::from_q(*t, q));
  return {t, std::move(p)};
}

FieldElement UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {tower_, fld::zero(*tower_)};
  return {tower_, c_[k]};
}

FieldElement UPoly::operator()(const FieldElement& x) const {
  Tower t = common_tower(tower_, x.tower());
  return {t, upoly::eval(*t, upoly::lift(*tower_, *t, c_), x.in(t).raw())};
}

UPoly UPoly::in(const Tower& bigger) const { return {bigger, upoly::lift(*tower_, *bigger, c_)}; }

UPoly operator+(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, upoly::add(*t, a.in(t).c_, b.in(t).c_)};
}
UPoly operator-(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, upoly::sub(*t, a.in(t).c_, b.in(t).c_)};
}
UPoly operator*(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return {t, upoly::mul(*t, a.in(t).c_, b.in(t).c_)};
}
bool operator==(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  return upoly::eq(*t, a.in(t).c_, b.in(t).c_);
}

UPoly poly_gcd(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower(), b.tower());
  return {t, upoly::gcd(*t, a.in(t).coeffs(), b.in(t).coeffs())};
}

FieldElement resultant(const UPoly& a, const UPoly& b) {
  Tower t = common_tower(a.tower(), b.tower());
  return {t, upoly::resultant(*t, a.in(t).coeffs(), b.in(t).coeffs())};
}

std::vector<Tower> tower_extend(const Tower& t, const UPoly& minpoly) {
  if (minpoly.degree() < 1) throw std::invalid_argument("extension polynomial must have positive degree");
  if (!minpoly.lc().is_one()) throw std::invalid_argument("extension polynomial must be monic");
  std::vector<Tower> out;
  for (const auto& f : factor_univariate(minpoly.in(t))) {
    if (f.degree() == 1)
      out.push_back(t);
    else
      out.push_back(adjoin_algebraic(t, f.coeffs(), false));
  }
  return out;
}

}  // namespace jd
