#include "jungdesing/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jungdesing/factor.hpp"

namespace jd {

namespace {

using ZRow = std::vector<mpz_class>;

// row Hermite normal form of a full-column-rank integer matrix; returns n rows
std::vector<ZRow> hnf(std::vector<ZRow> a, int n) {
  size_t m = a.size();
  size_t r = 0;
  for (int j = 0; j < n; ++j) {
    for (;;) {
      size_t piv = m;
      for (size_t i = r; i < m; ++i)
        if (sgn(a[i][j]) != 0 && (piv == m || abs(a[i][j]) < abs(a[piv][j]))) piv = i;
      if (piv == m) throw std::invalid_argument("lattice rows are linearly dependent");
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (sgn(a[i][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
        for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
        if (sgn(a[i][j]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(a[r][j]) < 0)
      for (int k = 0; k < n; ++k) a[r][k] = -a[r][k];
    for (size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
      for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
    }
    ++r;
  }
  a.resize(n);
  return a;
}

Q to_q(const mpq_class& x) {
  if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p()) throw std::overflow_error("exponent overflow");
  return Q(x.get_num().get_si(), x.get_den().get_si());
}

std::vector<Mon> canonical_rows(const std::vector<Mon>& rows, int n) {
  std::int64_t den = 1;
  for (const auto& r : rows)
    for (int k = 0; k < n; ++k) den = lcm_checked(den, r[k].den());
  std::vector<ZRow> a;
  for (const auto& r : rows) {
    ZRow z(n);
    for (int k = 0; k < n; ++k) z[k] = mpz_class(static_cast<long>(r[k].num())) * (den / r[k].den());
    a.push_back(z);
  }
  std::vector<Mon> out;
  for (const auto& z : hnf(a, n)) {
    Mon m;
    for (int k = 0; k < n; ++k) m[k] = to_q(mpq_class(z[k], static_cast<long>(den)));
    out.push_back(m);
  }
  return out;
}

}  // namespace

Lattice Lattice::standard(int n) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("lattice dimension out of range");
  Lattice l;
  l.n_ = n;
  for (int i = 0; i < n; ++i) {
    Mon m;
    m[i] = Q(1);
    l.rows_.push_back(m);
  }
  return l;
}

Lattice Lattice::from_rows(const std::vector<Mon>& rows, int n) {
  if (static_cast<int>(rows.size()) < n) throw std::invalid_argument("too few lattice rows");
  Lattice l;
  l.n_ = n;
  l.rows_ = canonical_rows(rows, n);
  for (int i = 0; i < n; ++i) {
    Mon e;
    e[i] = Q(1);
    if (!l.contains(e)) throw std::invalid_argument("lattice must contain the integer lattice");
  }
  return l;
}

Lattice Lattice::parse(const std::string& text) {
  std::vector<Mon> rows;
  int n = -1;
  std::stringstream rs(text);
  std::string row;
  auto parse_q = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s.empty()) throw std::invalid_argument("empty lattice entry");
    size_t slash = s.find('/');
    size_t used = 0;
    try {
      if (slash == std::string::npos) {
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number");
        return Q(v);
      }
      std::int64_t a = std::stoll(s.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("bad number");
      std::string d = s.substr(slash + 1);
      std::int64_t b = std::stoll(d, &used);
      if (used != d.size()) throw std::invalid_argument("bad number");
      return Q(a, b);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad lattice entry '" + s + "'");
    }
  };
  while (std::getline(rs, row, ';')) {
    std::stringstream es(row);
    std::string entry;
    Mon m;
    int k = 0;
    while (std::getline(es, entry, ',')) {
      if (k >= kMaxVars) throw std::invalid_argument("lattice dimension too large");
      m[k++] = parse_q(entry);
    }
    if (n >= 0 && k != n) throw std::invalid_argument("lattice rows have different lengths");
    n = k;
    rows.push_back(m);
  }
  if (n <= 0) throw std::invalid_argument("empty lattice");
  return from_rows(rows, n);
}

std::vector<Q> Lattice::rational_coords(const Mon& m) const {
  // rows form an upper triangular matrix
  std::vector<Q> x(n_);
  for (int j = 0; j < n_; ++j) {
    Q s = m[j];
    for (int i = 0; i < j; ++i) s -= x[i] * rows_[i][j];
    x[j] = s / rows_[j][j];
  }
  return x;
}

std::optional<IntVec> Lattice::coords(const Mon& m) const {
  for (int k = n_; k < kMaxVars; ++k)
    if (!m[k].is_zero()) return std::nullopt;
  IntVec out;
  for (const auto& q : rational_coords(m)) {
    if (!q.is_integer()) return std::nullopt;
    out.push_back(q.num());
  }
  return out;
}

bool Lattice::contains(const Lattice& sub) const {
  if (sub.n_ != n_) return false;
  for (const auto& r : sub.rows_)
    if (!contains(r)) return false;
  return true;
}

Q Lattice::det() const {
  Q d(1);
  for (int i = 0; i < n_; ++i) d *= rows_[i][i];
  return d;
}

std::string Lattice::str() const {
  std::string s;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ";";
    for (int k = 0; k < n_; ++k) {
      if (k) s += ",";
      s += rows_[i][k].str();
    }
  }
  return s;
}

Lattice lattice_join(const Lattice& g, const Mon& m) {
  if (g.contains(m)) return g;
  std::vector<Mon> rows = g.basis();
  rows.push_back(m);
  return Lattice::from_rows(rows, g.dim());
}

Lattice lattice_join(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimensions differ");
  if (a.contains(b)) return a;
  std::vector<Mon> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Lattice::from_rows(rows, a.dim());
}

std::int64_t lattice_index(const Lattice& big, const Lattice& small) {
  if (!big.contains(small)) throw std::invalid_argument("lattice is not a sublattice");
  Q r = small.det() / big.det();
  if (!r.is_integer()) throw std::logic_error("non-integral lattice index");
  return r.num();
}

Lattice lattice_of_support(const std::vector<Mon>& support, int n) {
  Lattice l = Lattice::standard(n);
  std::vector<Mon> rows = l.basis();
  bool extra = false;
  for (const auto& m : support)
    if (!m.integral()) rows.push_back(m), extra = true;
  if (!extra) return l;
  return Lattice::from_rows(rows, n);
}

BezoutData minimal_denominator(const Lattice& g, const Mon& m) {
  BezoutData bd;
  auto x = g.rational_coords(m);
  bd.b = 1;
  for (const auto& q : x) bd.b = lcm_checked(bd.b, q.den());
  for (const auto& q : x) bd.c.push_back((q * Q(bd.b)).num());
  auto [u, v] = bezout_vector(bd.b, bd.c);
  bd.u = u;
  bd.v = v;
  return bd;
}

std::pair<std::int64_t, IntVec> bezout_vector(std::int64_t b, const IntVec& c) {
  std::int64_t g = b;
  for (auto x : c) g = std::gcd(g, x);
  if (g != 1 && g != -1) throw std::invalid_argument("Bezout data has nontrivial gcd");
  if (b == 1) return {1, IntVec(c.size(), 0)};
  size_t k = c.size() + 1;
  std::vector<std::int64_t> coef{b};
  coef.insert(coef.end(), c.begin(), c.end());
  std::optional<std::vector<std::int64_t>> best;
  __int128 best_norm = 0;
  for (std::int64_t R = 1; R <= 64; ++R) {
    std::vector<std::int64_t> x(k, -R);
    for (;;) {
      __int128 s = 0, nrm = 0;
      for (size_t i = 0; i < k; ++i) s += __int128(coef[i]) * x[i], nrm += __int128(x[i]) * x[i];
      if (s == 1 && (!best || nrm < best_norm || (nrm == best_norm && x < *best))) best = x, best_norm = nrm;
      size_t i = k;
      while (i > 0 && x[i - 1] == R) x[--i] = -R;
      if (i == 0) break;
      ++x[i - 1];
    }
    if (best && best_norm < __int128(R + 1) * (R + 1)) break;
  }
  if (!best) {
    // fall back to iterated extended gcd
    std::vector<std::int64_t> x(k, 0);
    std::int64_t acc = coef[0];
    x[0] = 1;
    for (size_t i = 1; i < k; ++i) {
      std::int64_t a = acc, bb = coef[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (bb != 0) {
        std::int64_t q = a / bb;
        std::tie(a, bb) = std::make_pair(bb, a - q * bb);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
      }
      for (size_t j = 0; j < i; ++j) x[j] *= s0;
      x[i] = t0;
      acc = a;
    }
    if (acc < 0)
      for (auto& e : x) e = -e;
    best = x;
  }
  return {(*best)[0], IntVec(best->begin() + 1, best->end())};
}

std::vector<IntVec> dual_cone_generators(const Lattice& g) {
  if (g.dim() != 2) throw std::invalid_argument("dual cone generators need a 2-dimensional lattice");
  const Mon& r0 = g.basis()[0];
  const Mon& r1 = g.basis()[1];
  Q a = r0[0], b = r0[1], d = r1[1];
  // dual basis: columns of the inverse basis matrix
  Q w1x = Q(1) / a;
  Q w2x = -b / (a * d), w2y = Q(1) / d;
  if (!w1x.is_integer() || !w2x.is_integer() || !w2y.is_integer()) throw std::logic_error("dual lattice is not integral");
  // primitive ray on the second axis: y*w2 + x*w1 with zero first coordinate
  std::int64_t y = 1;
  while (!(Q(y) * b / d).is_integer()) ++y;
  IntVec rho1{0, (Q(y) * w2y).num()};
  IntVec rho2{w1x.num(), 0};
  std::int64_t n = y;
  auto in_dual = [&](Q px, Q py) {
    // coordinates with respect to w1 = (w1x, 0), w2 = (w2x, w2y)
    Q cy = py / w2y;
    Q cx = (px - cy * w2x) / w1x;
    return cx.is_integer() && cy.is_integer();
  };
  std::int64_t k = -1;
  for (std::int64_t kk = 0; kk < n; ++kk) {
    Q px = Q(rho2[0]) / Q(n), py = Q(kk * rho1[1]) / Q(n);
    if (px.is_integer() && py.is_integer() && in_dual(px, py)) {
      k = kk;
      break;
    }
  }
  if (k < 0) throw std::logic_error("no adapted dual basis");
  IntVec g1{rho2[0] / n, k * rho1[1] / n};
  std::vector<IntVec> gens{rho1, g1};
  if (k == 0) return gens;
  std::int64_t rp = n, rc = k;
  IntVec up = rho1, uc = g1;
  while (rc != 0) {
    std::int64_t ai = (rp + rc - 1) / rc;
    std::int64_t rn = ai * rc - rp;
    IntVec un{ai * uc[0] - up[0], ai * uc[1] - up[1]};
    gens.push_back(un);
    up = uc, uc = un, rp = rc, rc = rn;
  }
  if (gens.back() != rho2) throw std::logic_error("continued fraction did not reach the first axis");
  return gens;
}

std::strong_ordering order_compare(const Mon& a, const Mon& b) { return graded_compare(a, b); }

Q form_value(const IntVec& form, const Mon& m) {
  Q s;
  for (size_t i = 0; i < form.size(); ++i) s += Q(form[i]) * m[static_cast<int>(i)];
  return s;
}

LatticeHom::LatticeHom(Lattice domain, Tower tower, std::vector<Elem> values)
    : domain_(std::move(domain)), tower_(std::move(tower)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != domain_.dim()) throw std::invalid_argument("hom needs one value per basis row");
  for (const auto& v : values_)
    if (fld::is_zero(*tower_, v)) throw std::invalid_argument("hom values must be units");
}

LatticeHom LatticeHom::identity(const Lattice& domain, const Tower& tower) {
  return {domain, tower, std::vector<Elem>(domain.dim(), fld::one(*tower))};
}

Elem LatticeHom::evaluate(const Mon& m) const {
  auto c = domain_.coords(m);
  if (!c) throw std::domain_error("exponent " + mon_str(m, domain_.dim()) + " outside the hom domain");
  Elem r = fld::one(*tower_);
  for (size_t i = 0; i < c->size(); ++i)
    if ((*c)[i] != 0) r = fld::mul(*tower_, r, fld::pow(*tower_, values_[i], (*c)[i]));
  return r;
}

bool LatticeHom::is_identity() const {
  for (const auto& v : values_)
    if (!fld::is_one(*tower_, v)) return false;
  return true;
}

LatticeHom LatticeHom::in(const Tower& bigger) const {
  std::vector<Elem> vs;
  for (const auto& v : values_) vs.push_back(fld::lift(*tower_, *bigger, v));
  return {domain_, bigger, vs};
}

LatticeHom LatticeHom::restrict_to(const Lattice& sub) const {
  std::vector<Elem> vs;
  for (const auto& r : sub.basis()) vs.push_back(evaluate(r));
  return {sub, tower_, vs};
}

LatticeHom LatticeHom::inverse() const {
  std::vector<Elem> vs;
  for (const auto& v : values_) vs.push_back(fld::inv(*tower_, v));
  return {domain_, tower_, vs};
}

std::string LatticeHom::str(const std::vector<std::string>& names) const {
  std::string s;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ", ";
    std::string mon;
    const Mon& r = domain_.basis()[i];
    for (int k = 0; k < domain_.dim(); ++k) {
      if (r[k].is_zero()) continue;
      if (!mon.empty()) mon += "*";
      mon += names[k];
      if (r[k] != Q(1)) mon += "^(" + r[k].str() + ")";
    }
    s += mon + " -> " + fld::str(*tower_, values_[i]) + "*" + mon;
  }
  return s;
}

LatticeHom hom_compose(const LatticeHom& outer, const LatticeHom& inner) {
  if (!outer.domain().contains(inner.domain())) throw std::invalid_argument("hom domains are not nested");
  Tower t = common_tower(outer.tower(), inner.tower());
  LatticeHom o = outer.in(t), i = inner.in(t);
  std::vector<Elem> vs;
  for (const auto& r : inner.domain().basis()) vs.push_back(fld::mul(*t, o.evaluate(r), i.evaluate(r)));
  return {inner.domain(), t, vs};
}

namespace {

// Smith form U * C * V = D for a square integer matrix
void smith(std::vector<IntVec>& c, std::vector<IntVec>& u, std::vector<IntVec>& v) {
  size_t n = c.size();
  u.assign(n, IntVec(n, 0));
  v.assign(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = v[i][i] = 1;
  auto row_op = [&](size_t dst, size_t src, std::int64_t q) {  // row dst -= q * row src
    for (size_t k = 0; k < n; ++k) c[dst][k] -= q * c[src][k], u[dst][k] -= q * u[src][k];
  };
  auto col_op = [&](size_t dst, size_t src, std::int64_t q) {
    for (size_t k = 0; k < n; ++k) c[k][dst] -= q * c[k][src], v[k][dst] -= q * v[k][src];
  };
  for (size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero entry in the trailing block
      size_t pi = n, pj = n;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < n; ++j)
          if (c[i][j] != 0 && (pi == n || std::llabs(c[i][j]) < std::llabs(c[pi][pj]))) pi = i, pj = j;
      if (pi == n) return;
      std::swap(c[t], c[pi]);
      std::swap(u[t], u[pi]);
      for (size_t k = 0; k < n; ++k) std::swap(c[k][t], c[k][pj]), std::swap(v[k][t], v[k][pj]);
      bool done = true;
      for (size_t i = t + 1; i < n; ++i) {
        row_op(i, t, c[i][t] / c[t][t]);
        if (c[i][t] != 0) done = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        col_op(j, t, c[t][j] / c[t][t]);
        if (c[t][j] != 0) done = false;
      }
      if (!done) continue;
      // divisibility of the trailing block
      bool divides = true;
      for (size_t i = t + 1; i < n && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (c[i][j] % c[t][t] != 0) {
            for (size_t k = 0; k < n; ++k) c[t][k] += c[i][k], u[t][k] += u[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
}

// some b-th root of x, extending the tower when needed
FieldElement root_of(const FieldElement& x, std::int64_t b) {
  if (b == 1) return x;
  const Tower& t = x.tower();
  Poly p(b + 1, fld::zero(*t));
  p[0] = fld::neg(*t, x.raw());
  p[b] = fld::one(*t);
  auto fs = factor_univariate(UPoly(t, p));
  const UPoly& h = fs.front();
  if (h.degree() == 1) return -(h.coeff(0) / h.coeff(1));
  Tower e = adjoin_algebraic(t, h.coeffs(), false);
  return FieldElement::generator(e);
}

}  // namespace

LatticeHom hom_extend(const LatticeHom& s, const Lattice& bigger) {
  const Lattice& small = s.domain();
  if (!bigger.contains(small)) throw std::invalid_argument("hom_extend needs a larger lattice");
  int n = small.dim();
  std::vector<IntVec> c;
  for (const auto& r : small.basis()) c.push_back(*bigger.coords(r));
  std::vector<IntVec> u, v;
  smith(c, u, v);
  // new small basis m'_i = sum_k u_ik m_k equals d_i e'_i with e = V e'
  std::vector<FieldElement> roots;
  Tower t = s.tower();
  for (int i = 0; i < n; ++i) {
    const Tower& base = s.tower();
    FieldElement val(base, fld::one(*base));
    for (int k = 0; k < n; ++k)
      if (u[i][k] != 0) val = val * FieldElement(base, fld::pow(*base, s.values()[k], u[i][k]));
    std::int64_t d = c[i][i];
    if (d < 0) d = -d, val = val.inverse();
    FieldElement r = root_of(val.in(t), d);
    t = r.tower();
    roots.push_back(r);
  }
  std::vector<Elem> vals;
  for (int l = 0; l < n; ++l) {
    FieldElement e(t, fld::one(*t));
    for (int j = 0; j < n; ++j)
      if (v[l][j] != 0) e = e * roots[j].in(t).pow(v[l][j]);
    vals.push_back(e.raw());
  }
  // basis e of `bigger` is V applied to e'; values on e_l computed above use e = V e'
  return {bigger, t, vals};
}

}  // namespace jd
