#pragma once

// Random quasi-ordinary polynomials in x1, x2, z: products of shifted powers
// of z minus monomials, kept when the discriminant is a monomial times a unit.

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "jungdesing/fracpoly.hpp"

namespace jd::corpus {

class QuasiOrdinaryBuilder {
 public:
  explicit QuasiOrdinaryBuilder(unsigned seed) : rng_(seed), q_(rational_field()) {}

  // next candidate that passes the test; gives up after many tries
  ZPoly next() {
    for (int tries = 0; tries < 1000; ++tries) {
      ZPoly f = candidate();
      if (f.degree() >= 1 && is_quasi_ordinary(f).quasi_ordinary) return f;
    }
    throw std::runtime_error("no quasi-ordinary candidate found");
  }

 private:
  std::mt19937 rng_;
  Tower q_;

  int pick(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }
  FracPoly cst(long c) const { return FracPoly::constant(q_, 2, mpq_class(c)); }
  FracPoly mono(long c, int a, int b) const {
    return FracPoly::monomial(q_, 2, mon_from({Q(a), Q(b)}), fld::from_q(*q_, mpq_class(c)));
  }

  // a shift shared by most factors keeps root differences monomial
  FracPoly shift_poly() {
    switch (pick(4)) {
      case 0: return FracPoly(q_, 2);
      case 1: return mono(1 + pick(2), 1, 0);
      case 2: return mono(pick(2) == 0 ? 1 : -1, 0, 1);
      default: return mono(1, 1, 1);
    }
  }

  ZPoly candidate() {
    int budget = 2 + pick(5);  // total degree in z
    FracPoly common = shift_poly();
    ZPoly f(2, {cst(1)});
    std::vector<std::pair<int, std::array<int, 2>>> pure;  // (a, m) of factors using the common shift
    while (budget > 0) {
      int a = 1 + pick(std::min(budget, 3));
      budget -= a;
      bool own = pick(4) == 0;
      FracPoly h = own ? shift_poly() : common;
      int e1 = pick(4), e2 = pick(4);
      if (e1 + e2 == 0) e1 = 1;
      if (!own) {
        // exponents over a must form a chain, otherwise the discriminant has
        // a non-monomial factor
        for (const auto& [b, m] : pure) {
          bool le = e1 * b <= m[0] * a && e2 * b <= m[1] * a;
          bool ge = e1 * b >= m[0] * a && e2 * b >= m[1] * a;
          if (!le && !ge) return ZPoly(q_, 2);
        }
        pure.push_back({a, {e1, e2}});
      }
      // (z - h)^a - c x^m
      ZPoly lin(2, {-h, cst(1)});
      ZPoly pw(2, {cst(1)});
      for (int k = 0; k < a; ++k) pw = pw * lin;
      static const long cs[] = {1, -1, 2, -3};
      f = f * (pw + ZPoly(2, {-mono(cs[pick(4)], e1, e2)}));
    }
    return f;
  }
};

}  // namespace jd::corpus
