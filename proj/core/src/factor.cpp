#include "jungdesing/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace jd {

namespace {

// ================================================================ Z/p[x]

using PP = std::vector<std::int64_t>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((__int128)a * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

void pp_trim(PP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PP pp_sub(const PP& a, const PP& b, std::int64_t p) {
  PP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  pp_trim(r);
  return r;
}

PP pp_mul(const PP& a, const PP& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  pp_trim(r);
  return r;
}

void pp_divmod(const PP& a, const PP& b, std::int64_t p, PP& q, PP& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  std::int64_t il = invmod(b.back(), p);
  for (int k = static_cast<int>(r.size()) - static_cast<int>(b.size()); k >= 0; --k) {
    std::int64_t c = mulmod(r[k + b.size() - 1], il, p);
    if (!c) continue;
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] = ((r[k + j] - mulmod(c, b[j], p)) % p + p) % p;
  }
  r.resize(b.size() - 1);
  pp_trim(r);
  pp_trim(q);
}

PP pp_rem(const PP& a, const PP& b, std::int64_t p) {
  PP q, r;
  pp_divmod(a, b, p, q, r);
  return r;
}

PP pp_monic(const PP& a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t il = invmod(a.back(), p);
  PP r = a;
  for (auto& c : r) c = mulmod(c, il, p);
  return r;
}

PP pp_gcd(PP a, PP b, std::int64_t p) {
  while (!b.empty()) {
    PP r = pp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pp_monic(a, p);
}

PP pp_deriv(const PP& a, std::int64_t p) {
  PP r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], static_cast<std::int64_t>(i) % p, p));
  pp_trim(r);
  return r;
}

PP pp_powmod(PP base, const mpz_class& e, const PP& m, std::int64_t p) {
  PP r{1};
  base = pp_rem(base, m, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = pp_rem(pp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pp_rem(pp_mul(r, base, p), m, p);
  }
  return r;
}

// distinct degree factorization of a monic squarefree polynomial
std::vector<std::pair<PP, int>> pp_ddf(PP f, std::int64_t p) {
  std::vector<std::pair<PP, int>> out;
  PP x{0, 1};
  PP h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = pp_powmod(h, mpz_class(static_cast<long>(p)), f, p);
    PP g = pp_gcd(f, pp_sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      PP q, r;
      pp_divmod(f, g, p, q, r);
      f = q;
      h = pp_rem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

void pp_edf(const PP& g, int d, std::int64_t p, std::mt19937_64& rng, std::vector<PP>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    PP a(n);
    for (auto& c : a) c = dist(rng);
    pp_trim(a);
    if (a.size() < 2) continue;
    PP b = pp_powmod(a, e, g, p);
    if (b.empty()) continue;
    b[0] = (b[0] - 1 + p) % p;
    pp_trim(b);
    PP c = pp_gcd(g, b, p);
    int dc = static_cast<int>(c.size()) - 1;
    if (dc > 0 && dc < n) {
      PP q, r;
      pp_divmod(g, c, p, q, r);
      pp_edf(c, d, p, rng, out);
      pp_edf(pp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// ================================================================ Z[x] and (Z/m)[x]

using ZP = std::vector<mpz_class>;

void zp_trim(ZP& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void zp_reduce(ZP& a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (sgn(c) < 0) c += m;
  }
  zp_trim(a);
}

ZP zp_add(const ZP& a, const ZP& b, const mpz_class& m) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_reduce(r, m);
  return r;
}

ZP zp_sub(const ZP& a, const ZP& b, const mpz_class& m) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_reduce(r, m);
  return r;
}

ZP zp_mul(const ZP& a, const ZP& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_reduce(r, m);
  return r;
}

mpz_class zinv(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw std::domain_error("not invertible modulo m");
  return r;
}

// division by a polynomial with invertible leading coefficient modulo m
void zp_divmod(const ZP& a, const ZP& b, const mpz_class& m, ZP& q, ZP& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  mpz_class il = zinv(b.back(), m);
  for (int k = static_cast<int>(r.size()) - static_cast<int>(b.size()); k >= 0; --k) {
    mpz_class c = r[k + b.size() - 1] * il % m;
    if (sgn(c) == 0) continue;
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) {
      r[k + j] -= c * b[j];
      r[k + j] %= m;
    }
  }
  r.resize(b.size() - 1);
  zp_reduce(r, m);
  zp_reduce(q, m);
}

ZP to_zp(const PP& a) {
  ZP r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

PP to_pp(const ZP& a, std::int64_t p) {
  PP r;
  for (const auto& c : a) {
    mpz_class x = c % p;
    if (sgn(x) < 0) x += p;
    r.push_back(x.get_si());
  }
  pp_trim(r);
  return r;
}

// one quadratic Hensel step (von zur Gathen-Gerhard 15.10) from m to m*m
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const mpz_class& m2) {
  ZP e = zp_sub(f, zp_mul(g, h, m2), m2);
  ZP q, r;
  zp_divmod(zp_mul(s, e, m2), h, m2, q, r);
  ZP gs = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
  ZP hs = zp_add(h, r, m2);
  ZP b = zp_sub(zp_add(zp_mul(s, gs, m2), zp_mul(t, hs, m2), m2), ZP{1}, m2);
  ZP c, d;
  zp_divmod(zp_mul(s, b, m2), hs, m2, c, d);
  s = zp_sub(s, d, m2);
  t = zp_sub(t, zp_add(zp_mul(t, b, m2), zp_mul(c, gs, m2), m2), m2);
  g = std::move(gs);
  h = std::move(hs);
}

// f with lc(f) invertible mod p; us monic factors mod p with f == lc * prod(us)
std::vector<ZP> multi_lift(const ZP& f, const std::vector<PP>& us, std::int64_t p, const mpz_class& M) {
  if (us.size() == 1) {
    ZP g = f;
    zp_reduce(g, M);
    mpz_class il = zinv(g.back(), M);
    for (auto& c : g) c = c * il % M;
    return {g};
  }
  size_t half = us.size() / 2;
  PP g0{to_pp(ZP{f.back()}, p).empty() ? 0 : to_pp(ZP{f.back()}, p)[0]};
  PP h0{1};
  for (size_t i = 0; i < half; ++i) g0 = pp_mul(g0, us[i], p);
  for (size_t i = half; i < us.size(); ++i) h0 = pp_mul(h0, us[i], p);
  // xgcd mod p
  PP r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PP q, r;
    pp_divmod(r0, r1, p, q, r);
    PP s2 = pp_sub(s0, pp_mul(q, s1, p), p), t2 = pp_sub(t0, pp_mul(q, t1, p), p);
    r0 = r1, r1 = r, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  std::int64_t il = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, il, p);
  for (auto& c : t0) c = mulmod(c, il, p);
  ZP g = to_zp(g0), h = to_zp(h0), s = to_zp(s0), t = to_zp(t0);
  mpz_class m = p;
  while (m < M) {
    mpz_class m2 = m * m;
    ZP fm = f;
    zp_reduce(fm, m2);
    hensel_step(fm, g, h, s, t, m2);
    m = m2;
  }
  zp_reduce(g, M);
  zp_reduce(h, M);
  std::vector<PP> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
  auto a = multi_lift(g, left, p, M);
  auto b = multi_lift(h, right, p, M);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool z_divexact(const ZP& a, const ZP& b, ZP& q) {
  ZP r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int k = static_cast<int>(r.size()) - static_cast<int>(b.size()); k >= 0; --k) {
    const mpz_class& top = r[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c = top / b.back();
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  zp_trim(r);
  zp_trim(q);
  return r.empty();
}

ZP z_primitive(ZP a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

std::vector<std::int64_t> small_primes() {
  std::vector<std::int64_t> ps;
  for (std::int64_t n = 11; ps.size() < 200; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(n);
  }
  return ps;
}

}  // namespace

std::vector<std::vector<mpz_class>> factor_integer_squarefree(const std::vector<mpz_class>& f0) {
  ZP f = f0;
  zp_trim(f);
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // prime selection: fewest modular factors among a few good primes
  static const auto primes = small_primes();
  std::int64_t best_p = 0;
  size_t best_count = 0;
  int good = 0;
  for (auto p : primes) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    PP fp = pp_monic(to_pp(f, p), p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (pp_gcd(fp, pp_deriv(fp, p), p).size() != 1) continue;
    size_t count = 0;
    for (auto& [g, d] : pp_ddf(fp, p)) count += (g.size() - 1) / d;
    if (best_p == 0 || count < best_count) best_p = p, best_count = count;
    if (++good >= 6 || count == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best_count == 1) return {z_primitive(f)};
  std::int64_t p = best_p;
  std::mt19937_64 rng(0x6a756e67);
  std::vector<PP> us;
  for (auto& [g, d] : pp_ddf(pp_monic(to_pp(f, p), p), p)) pp_edf(g, d, p, rng, us);
  std::sort(us.begin(), us.end());
  // coefficient bound for lc * (factor)
  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = abs(f.back()) * maxc * (n + 1);
  bound <<= n + 1;
  mpz_class M = p;
  while (M <= bound) M *= M;
  auto lifted = multi_lift(f, us, p, M);
  mpz_class half = M / 2;
  auto symm = [&](ZP a) {
    for (auto& c : a) {
      c %= M;
      if (c < 0) c += M;
      if (c > half) c -= M;
    }
    zp_trim(a);
    return a;
  };
  std::vector<ZP> out;
  ZP F = f;
  std::vector<ZP> rest = lifted;
  size_t s = 1;
  while (2 * s <= rest.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZP g{F.back()};
      for (auto i : idx) g = zp_mul(g, rest[i], M);
      g = symm(g);
      ZP q;
      if (!g.empty()) {
        g = z_primitive(g);
        if (z_divexact(F, g, q)) {
          out.push_back(g);
          F = q;
          std::vector<ZP> keep;
          for (size_t i = 0; i < rest.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(rest[i]);
          rest = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[k] == rest.size() - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (F.size() > 1) out.push_back(z_primitive(F));
  return out;
}

namespace {

// ================================================================ helpers over towers

Poly squarefree_poly(const TowerNode& L, const Poly& f) {
  Poly g = upoly::gcd(L, f, upoly::deriv(L, f));
  if (g.size() <= 1) return upoly::monic(L, f);
  return upoly::monic(L, upoly::quo(L, f, g));
}

void sort_canonical(const TowerNode& L, std::vector<Poly>& fs) {
  std::sort(fs.begin(), fs.end(), [&](const Poly& a, const Poly& b) { return upoly::cmp(L, a, b) < 0; });
}

std::vector<Poly> factor_sqfree_monic(const TowerNode& L, const Poly& f);

std::vector<Poly> factor_over_q(const Poly& f) {
  // clear denominators
  mpz_class den = 1;
  for (const auto& c : f) den = lcm(den, mpz_class(c.q.get_den()));
  ZP z;
  for (const auto& c : f) z.push_back(mpz_class(c.q * den));
  std::vector<Poly> out;
  for (auto& g : factor_integer_squarefree(z_primitive(z))) {
    Poly p;
    for (auto& c : g) {
      Elem e;
      e.q = mpq_class(c);
      p.push_back(e);
    }
    out.push_back(upoly::monic(*rational_field(), p));
  }
  return out;
}

// ---------------------------------------------------------------- dense bivariate

using BP = std::vector<Poly>;  // index: y-degree; entry: polynomial in x

void bp_trim(const TowerNode& L, BP& f) {
  for (auto& c : f) upoly::trim(L, c);
  while (!f.empty() && f.back().empty()) f.pop_back();
}

int bp_degx(const BP& f) {
  int d = -1;
  for (const auto& c : f) d = std::max(d, upoly::deg(c));
  return d;
}

Poly trunc_x(const Poly& p, int k) {
  if (static_cast<int>(p.size()) <= k) return p;
  return Poly(p.begin(), p.begin() + k);
}

BP bp_mul_trunc(const TowerNode& L, const BP& a, const BP& b, int k) {
  if (a.empty() || b.empty()) return {};
  BP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = trunc_x(upoly::add(L, r[i + j], upoly::mul(L, a[i], b[j])), k);
  bp_trim(L, r);
  return r;
}

Poly bp_eval_x(const TowerNode& L, const BP& f, const Elem& x0) {
  Poly r;
  for (const auto& c : f) r.push_back(upoly::eval(L, c, x0));
  upoly::trim(L, r);
  return r;
}

BP bp_shift_x(const TowerNode& L, const BP& f, const Elem& c) {
  BP r;
  for (const auto& p : f) r.push_back(upoly::shift(L, p, c));
  bp_trim(L, r);
  return r;
}

Poly bp_content(const TowerNode& L, const BP& f) {
  Poly g;
  for (const auto& c : f) {
    if (c.empty()) continue;
    g = g.empty() ? upoly::monic(L, c) : upoly::gcd(L, g, c);
    if (g.size() == 1) break;
  }
  return g;
}

// exact division in L[x][y]; false when b does not divide a
bool bp_divexact(const TowerNode& L, const BP& a, const BP& b, BP& q) {
  BP r = a;
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < db) return a.empty();
  q.assign(da - db + 1, Poly{});
  for (int k = da - db; k >= 0; --k) {
    const Poly& top = r[k + db];
    if (top.empty()) continue;
    Poly qq, rr;
    upoly::divmod(L, top, b.back(), qq, rr);
    if (!rr.empty()) return false;
    for (int j = 0; j <= db; ++j) r[k + j] = upoly::sub(L, r[k + j], upoly::mul(L, qq, b[j]));
    q[k] = std::move(qq);
  }
  for (const auto& c : r)
    if (!c.empty()) return false;
  bp_trim(L, q);
  return true;
}

// power series inverse of p modulo x^k (p(0) != 0)
Poly series_inverse(const TowerNode& L, const Poly& p, int k) {
  Poly inv(k, fld::zero(L));
  Elem i0 = fld::inv(L, p[0]);
  inv[0] = i0;
  for (int n = 1; n < k; ++n) {
    Elem s = fld::zero(L);
    for (int j = 1; j <= n && j < static_cast<int>(p.size()); ++j) s = fld::add(L, s, fld::mul(L, p[j], inv[n - j]));
    inv[n] = fld::neg(L, fld::mul(L, s, i0));
  }
  upoly::trim(L, inv);
  return inv;
}

Elem small_int(const TowerNode& L, int i) {
  // 0, 1, -1, 2, -2, ...
  int v = (i + 1) / 2;
  if (i % 2 == 0) v = -v;
  return fld::from_q(L, mpq_class(v));
}

// irreducible factors of F in L[x][y], F primitive in y, squarefree, deg_y >= 1
std::vector<BP> bp_factor_primitive(const TowerNode& L, const BP& F) {
  int n = static_cast<int>(F.size()) - 1;
  int dx = bp_degx(F);
  if (n == 1) return {F};
  if (dx == 0) {
    Poly uni;
    for (const auto& c : F) uni.push_back(c.empty() ? fld::zero(L) : c[0]);
    std::vector<BP> out;
    for (auto& g : factor_sqfree_monic(L, upoly::monic(L, uni))) {
      BP b;
      for (auto& c : g) b.push_back(upoly::constant(L, c));
      out.push_back(b);
    }
    return out;
  }
  // good specialization point
  Elem x0;
  Poly f0;
  for (int i = 0;; ++i) {
    if (i > 400) throw std::runtime_error("no squarefree specialization found");
    x0 = small_int(L, i);
    if (fld::is_zero(L, upoly::eval(L, F.back(), x0))) continue;
    f0 = bp_eval_x(L, F, x0);
    if (upoly::is_squarefree(L, f0)) break;
  }
  std::vector<Poly> gs = factor_sqfree_monic(L, upoly::monic(L, f0));
  if (gs.size() == 1) return {F};
  int k = dx + 1;
  BP G = bp_shift_x(L, F, x0);
  Poly ilc = series_inverse(L, G.back(), k);
  BP M;
  for (const auto& c : G) M.push_back(trunc_x(upoly::mul(L, c, ilc), k));
  // cofactors s_i with sum s_i * prod_{j != i} g_j = 1
  size_t r = gs.size();
  std::vector<Poly> s(r);
  for (size_t i = 0; i < r; ++i) {
    Poly P = upoly::constant(L, fld::one(L));
    for (size_t j = 0; j < r; ++j)
      if (j != i) P = upoly::rem(L, upoly::mul(L, P, gs[j]), gs[i]);
    Poly a, b;
    upoly::xgcd(L, P, gs[i], a, b);
    s[i] = a;
  }
  std::vector<BP> Gs(r);
  for (size_t i = 0; i < r; ++i)
    for (const auto& c : gs[i]) Gs[i].push_back(upoly::constant(L, c));
  for (int step = 1; step < k; ++step) {
    BP prod = Gs[0];
    for (size_t i = 1; i < r; ++i) prod = bp_mul_trunc(L, prod, Gs[i], step + 1);
    Poly e;
    for (size_t j = 0; j < M.size(); ++j) {
      Elem a = static_cast<int>(M[j].size()) > step ? M[j][step] : fld::zero(L);
      Elem b = j < prod.size() && static_cast<int>(prod[j].size()) > step ? prod[j][step] : fld::zero(L);
      e.push_back(fld::sub(L, a, b));
    }
    upoly::trim(L, e);
    if (e.empty()) continue;
    for (size_t i = 0; i < r; ++i) {
      Poly d = upoly::rem(L, upoly::mul(L, e, s[i]), gs[i]);
      for (size_t j = 0; j < d.size(); ++j) {
        if (fld::is_zero(L, d[j])) continue;
        Poly& c = Gs[i][j];
        if (static_cast<int>(c.size()) <= step) c.resize(step + 1, fld::zero(L));
        c[step] = fld::add(L, c[step], d[j]);
        upoly::trim(L, c);
      }
    }
  }
  // recombination
  std::vector<BP> found;
  BP Frem = G;
  std::vector<BP> rest = Gs;
  size_t sz = 1;
  while (2 * sz <= rest.size()) {
    bool hit = false;
    std::vector<size_t> idx(sz);
    for (size_t i = 0; i < sz; ++i) idx[i] = i;
    for (;;) {
      BP H{Frem.back()};
      for (auto i : idx) H = bp_mul_trunc(L, H, rest[i], k);
      Poly c = bp_content(L, H);
      if (!c.empty()) {
        for (auto& h : H) h = upoly::quo(L, h, c);
        bp_trim(L, H);
        BP q;
        if (H.size() > 1 && bp_divexact(L, Frem, H, q)) {
          found.push_back(H);
          Frem = q;
          std::vector<BP> keep;
          for (size_t i = 0; i < rest.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(rest[i]);
          rest = std::move(keep);
          hit = true;
          break;
        }
      }
      int kk = static_cast<int>(sz) - 1;
      while (kk >= 0 && idx[kk] == rest.size() - sz + kk) --kk;
      if (kk < 0) break;
      ++idx[kk];
      for (size_t j = kk + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++sz;
  }
  if (Frem.size() > 1) found.push_back(Frem);
  Elem back = fld::neg(L, x0);
  for (auto& h : found) h = bp_shift_x(L, h, back);
  return found;
}

// all irreducible factors (with content factors) of a squarefree F in L[x][y]
std::vector<BP> bp_factor(const TowerNode& L, BP F) {
  bp_trim(L, F);
  std::vector<BP> out;
  Poly c = bp_content(L, F);
  if (c.size() > 1) {
    for (auto& g : factor_sqfree_monic(L, squarefree_poly(L, c))) out.push_back(BP{g});
    for (auto& h : F) h = upoly::quo(L, h, c);
    bp_trim(L, F);
  }
  if (F.size() > 1) {
    auto fs = bp_factor_primitive(L, F);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

// ---------------------------------------------------------------- Trager

std::vector<Poly> factor_algebraic(const TowerNode& L, const Poly& f) {
  const TowerNode& K = *L.parent;
  int n = upoly::deg(f);
  int dm = L.degree();
  int D = n * dm;
  Elem alpha = fld::gen(L);
  for (int ci = 0; ci < 60; ++ci) {
    Elem c = small_int(L, ci);
    // g(y) = f(y - c*alpha)
    Poly g = upoly::shift(L, f, fld::neg(L, fld::mul(L, c, alpha)));
    // norm by evaluation at y = 0..D and interpolation
    std::vector<Elem> ys, vals;
    for (int k = 0; k <= D; ++k) {
      Elem yk = fld::from_q(K, mpq_class(k));
      // G(yk, z) in K[z]
      Poly Gz;
      Elem ypow = fld::one(K);
      for (size_t j = 0; j < g.size(); ++j) {
        Gz = upoly::add(K, Gz, upoly::scale(K, g[j].a, ypow));
        ypow = fld::mul(K, ypow, yk);
      }
      Elem v = Gz.empty() ? fld::zero(K) : upoly::resultant(K, L.minpoly, Gz);
      ys.push_back(yk);
      vals.push_back(v);
    }
    // Newton interpolation
    std::vector<Elem> dd = vals;
    for (int j = 1; j <= D; ++j)
      for (int i = D; i >= j; --i)
        dd[i] = fld::div(K, fld::sub(K, dd[i], dd[i - 1]), fld::sub(K, ys[i], ys[i - j]));
    Poly N = upoly::constant(K, dd[D]);
    for (int i = D - 1; i >= 0; --i) {
      Poly lin = upoly::add(K, upoly::x(K), upoly::constant(K, fld::neg(K, ys[i])));
      N = upoly::add(K, upoly::mul(K, N, lin), upoly::constant(K, dd[i]));
    }
    if (upoly::deg(N) != D || !upoly::is_squarefree(K, N)) continue;
    auto Ns = factor_sqfree_monic(K, upoly::monic(K, N));
    if (Ns.size() == 1) return {f};
    std::vector<Poly> out;
    Elem back = fld::mul(L, c, alpha);
    for (const auto& Nj : Ns) {
      Poly h = upoly::gcd(L, upoly::lift(K, L, Nj), g);
      if (upoly::deg(h) < 1) continue;
      out.push_back(upoly::monic(L, upoly::shift(L, h, back)));
    }
    return out;
  }
  throw std::runtime_error("no separating shift found for the norm");
}

bool alg_only(const TowerNode& L) {
  for (const TowerNode* p = &L; p; p = p->parent.get())
    if (p->kind == LevelKind::Transcendental) return false;
  return true;
}

std::vector<Poly> factor_transcendental(const TowerNode& L, const Poly& f) {
  const TowerNode& K = *L.parent;
  if (!alg_only(K)) throw std::runtime_error("factorization over nested transcendental levels is not supported");
  Poly den = upoly::constant(K, fld::one(K));
  for (const auto& c : f) den = upoly::quo(K, upoly::mul(K, den, c.b), upoly::gcd(K, den, c.b));
  BP F;
  for (const auto& c : f) F.push_back(upoly::mul(K, c.a, upoly::quo(K, den, c.b)));
  std::vector<Poly> out;
  for (auto& h : bp_factor(K, F)) {
    if (h.size() < 2) continue;
    Poly u;
    for (auto& c : h) {
      Elem e;
      e.a = c;
      e.b = upoly::constant(K, fld::one(K));
      u.push_back(e);
    }
    out.push_back(upoly::monic(L, u));
  }
  return out;
}

std::vector<Poly> factor_sqfree_monic(const TowerNode& L, const Poly& f) {
  if (upoly::deg(f) <= 0) return {};
  if (upoly::deg(f) == 1) return {f};
  std::vector<Poly> out;
  switch (L.kind) {
    case LevelKind::Rational:
      out = factor_over_q(f);
      break;
    case LevelKind::Algebraic:
      out = factor_algebraic(L, f);
      break;
    case LevelKind::Transcendental:
      out = factor_transcendental(L, f);
      break;
  }
  sort_canonical(L, out);
  return out;
}

}  // namespace

std::vector<UPoly> factor_univariate(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
  const TowerNode& L = *f.tower();
  std::vector<UPoly> out;
  for (auto& p : factor_sqfree_monic(L, squarefree_poly(L, f.coeffs()))) out.emplace_back(f.tower(), std::move(p));
  return out;
}

std::vector<MPoly> irred_factors(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
  std::vector<int> vars;
  for (int v = 0; v < p.nvars(); ++v)
    if (p.degree(v) > 0) vars.push_back(v);
  std::vector<MPoly> out;
  if (vars.empty()) return out;
  if (vars.size() > 2) throw std::invalid_argument("irred_factors supports at most two variables");
  MPoly sf = squarefree_part(p);
  const TowerNode& L = sf.level();
  if (vars.size() == 1) {
    for (auto& g : factor_univariate(UPoly(sf.tower(), sf.to_poly(vars[0]))))
      out.push_back(normalize_unit(MPoly::from_poly(sf.tower(), p.nvars(), vars[0], g.coeffs())));
  } else {
    if (!alg_only(L)) throw std::runtime_error("bivariate factorization over a transcendental tower is not supported");
    int xv = vars[0], yv = vars[1];
    BP F(sf.degree(yv) + 1);
    for (const auto& [m, c] : sf.terms()) {
      Poly& slot = F[m[yv]];
      if (static_cast<int>(slot.size()) <= m[xv]) slot.resize(m[xv] + 1, fld::zero(L));
      slot[m[xv]] = c;
    }
    for (auto& h : bp_factor(L, F)) {
      MPoly g(sf.tower(), p.nvars());
      for (size_t j = 0; j < h.size(); ++j)
        for (size_t i = 0; i < h[j].size(); ++i) {
          IMon m;
          m[xv] = static_cast<std::int32_t>(i);
          m[yv] = static_cast<std::int32_t>(j);
          g.add_term(m, h[j][i]);
        }
      if (!g.is_constant()) out.push_back(normalize_unit(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) { return mpoly_cmp(a, b) < 0; });
  return out;
}

// ================================================================ zero sets

namespace {

struct Root {
  Tower tower;
  FieldElement value;
};

// one root per irreducible factor, extending the tower when needed
std::vector<Root> roots_of(const UPoly& g) {
  std::vector<Root> out;
  for (const auto& h : factor_univariate(g)) {
    if (h.degree() == 1) {
      FieldElement r = -(h.coeff(0) / h.coeff(1));
      out.push_back({g.tower(), r});
    } else {
      Tower t = adjoin_algebraic(g.tower(), h.coeffs(), false);
      out.push_back({t, FieldElement::generator(t)});
    }
  }
  return out;
}

}  // namespace

std::vector<SolutionPoint> zero_set(const std::vector<UPoly>& gens) {
  if (gens.empty()) throw std::domain_error("not zero-dimensional");
  UPoly g;
  Tower t = gens[0].tower();
  for (const auto& p : gens) t = common_tower(t, p.tower());
  g = UPoly(t, {});
  for (const auto& p : gens) g = poly_gcd(g, p.in(t));
  if (g.is_zero()) throw std::domain_error("not zero-dimensional");
  std::vector<SolutionPoint> out;
  for (auto& r : roots_of(g)) out.push_back({r.tower, {r.value}});
  return out;
}

std::vector<SolutionPoint> zero_set(const std::vector<MPoly>& gens0) {
  if (gens0.empty()) throw std::domain_error("not zero-dimensional");
  Tower t = gens0[0].tower();
  int nv = 0;
  for (const auto& p : gens0) t = common_tower(t, p.tower()), nv = std::max(nv, p.nvars());
  std::vector<MPoly> gens;
  for (const auto& p : gens0)
    if (!p.is_zero()) gens.push_back(p.in(t));
  if (gens.empty()) throw std::domain_error("not zero-dimensional");
  for (const auto& p : gens)
    if (p.is_constant()) return {};
  if (nv <= 1) {
    std::vector<UPoly> us;
    for (const auto& p : gens) us.emplace_back(t, p.to_poly(0));
    return zero_set(us);
  }
  if (nv > 2) throw std::invalid_argument("zero_set supports at most two variables");
  const TowerNode& L = *t;
  // eliminate the second variable
  Poly R;
  std::vector<const MPoly*> withv;
  for (const auto& p : gens) {
    if (p.degree(1) > 0)
      withv.push_back(&p);
    else
      R = upoly::gcd(L, R, p.to_poly(0));
  }
  for (size_t i = 0; i < withv.size(); ++i)
    for (size_t j = i + 1; j < withv.size(); ++j) {
      MPoly r = resultant(*withv[i], *withv[j], 1);
      if (!r.is_zero()) R = upoly::gcd(L, R, r.to_poly(0));
      if (upoly::deg(R) == 0) return {};
    }
  if (R.empty()) throw std::domain_error("not zero-dimensional");
  if (upoly::deg(R) == 0) return {};
  std::vector<SolutionPoint> out;
  for (auto& ru : roots_of(UPoly(t, R))) {
    const TowerNode& E1 = *ru.tower;
    Poly h;
    for (const auto& p : gens) {
      MPoly q = p.in(ru.tower).eval_var(0, ru.value.raw());
      h = upoly::gcd(E1, h, q.to_poly(1));
    }
    if (h.empty()) throw std::domain_error("not zero-dimensional");
    if (upoly::deg(h) == 0) continue;
    for (auto& rv : roots_of(UPoly(ru.tower, h))) {
      out.push_back({rv.tower, {ru.value.in(rv.tower), rv.value}});
    }
  }
  return out;
}

}  // namespace jd
