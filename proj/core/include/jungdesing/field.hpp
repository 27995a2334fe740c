#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jd {

// Raw element of one level of a tower.  Level 0 uses `q`; an algebraic level
// keeps a reduced polynomial `a` over the level below; a transcendental level
// keeps the fraction a/b with b monic and coprime to a.  An element carries no
// pointer to its level: the owning container (FieldElement, UPoly, MPoly,
// FracPoly) holds the tower once.
struct Elem {
  mpq_class q;
  std::vector<Elem> a;
  std::vector<Elem> b;
};

// dense univariate polynomial, lowest degree first, no trailing zeros
using Poly = std::vector<Elem>;

enum class LevelKind { Rational, Transcendental, Algebraic };

class TowerNode;
using Tower = std::shared_ptr<const TowerNode>;

class TowerNode {
 public:
  LevelKind kind = LevelKind::Rational;
  std::string name;   // generator name, empty for the rational level
  Tower parent;       // null for the rational level
  int depth = 0;
  Poly minpoly;       // algebraic levels only: monic over parent
  int alg_count = 0;  // number of algebraic levels up to and including this one

  int degree() const { return kind == LevelKind::Algebraic ? static_cast<int>(minpoly.size()) - 1 : 1; }
  bool has_transcendental() const;
  // [this : Q] counting algebraic levels only
  long algebraic_degree() const;
  // [this : anc] over an ancestor, algebraic levels only
  long degree_over(const TowerNode& anc) const;
  bool extends(const TowerNode& anc) const;  // anc on the ancestor chain (or equal)
};

Tower rational_field();
Tower adjoin_transcendental(const Tower& base, const std::string& name = "s");
// adds an algebraic level; minpoly monic, degree >= 2; irreducibility is checked
// unless verify is false (callers that already hold an irreducible factor skip it)
Tower adjoin_algebraic(const Tower& base, Poly minpoly, bool verify = true, std::string name = {});
// the larger of two towers on a common chain; throws if unrelated
Tower common_tower(const Tower& a, const Tower& b);
std::string tower_str(const Tower& t);

// level arithmetic
namespace fld {
Elem zero(const TowerNode& L);
Elem one(const TowerNode& L);
Elem from_q(const TowerNode& L, const mpq_class& q);
Elem gen(const TowerNode& L);  // the generator of a non-rational level
bool is_zero(const TowerNode& L, const Elem& x);
bool is_one(const TowerNode& L, const Elem& x);
bool eq(const TowerNode& L, const Elem& x, const Elem& y);
int cmp(const TowerNode& L, const Elem& x, const Elem& y);  // total order on canonical forms
Elem add(const TowerNode& L, const Elem& x, const Elem& y);
Elem sub(const TowerNode& L, const Elem& x, const Elem& y);
Elem neg(const TowerNode& L, const Elem& x);
Elem mul(const TowerNode& L, const Elem& x, const Elem& y);
Elem inv(const TowerNode& L, const Elem& x);
Elem div(const TowerNode& L, const Elem& x, const Elem& y);
Elem pow(const TowerNode& L, const Elem& x, long e);
Elem lift(const TowerNode& from, const TowerNode& to, const Elem& x);
// rational value when the element lies in Q
std::optional<mpq_class> as_rational(const TowerNode& L, const Elem& x);
std::string str(const TowerNode& L, const Elem& x);
// true when the printed form is a single signed factor (no parentheses needed)
bool is_atomic_str(const std::string& s);
}  // namespace fld

// polynomials over a level
namespace upoly {
void trim(const TowerNode& L, Poly& p);
inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
Poly constant(const TowerNode& L, const Elem& c);
Poly monomial(const TowerNode& L, const Elem& c, int k);
Poly x(const TowerNode& L);
Poly add(const TowerNode& L, const Poly& a, const Poly& b);
Poly sub(const TowerNode& L, const Poly& a, const Poly& b);
Poly neg(const TowerNode& L, const Poly& a);
Poly mul(const TowerNode& L, const Poly& a, const Poly& b);
Poly scale(const TowerNode& L, const Poly& a, const Elem& c);
Poly pow(const TowerNode& L, const Poly& a, int e);
void divmod(const TowerNode& L, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const TowerNode& L, const Poly& a, const Poly& b);
Poly quo(const TowerNode& L, const Poly& a, const Poly& b);
Poly divexact(const TowerNode& L, const Poly& a, const Poly& b);  // throws if inexact
Poly monic(const TowerNode& L, const Poly& a);
Poly gcd(const TowerNode& L, const Poly& a, const Poly& b);  // monic, zero if both zero
// returns monic gcd g with s*a + t*b = g
Poly xgcd(const TowerNode& L, const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly deriv(const TowerNode& L, const Poly& a);
Elem eval(const TowerNode& L, const Poly& a, const Elem& x);
Poly compose(const TowerNode& L, const Poly& a, const Poly& b);  // a(b)
Poly shift(const TowerNode& L, const Poly& a, const Elem& c);    // a(x + c)
Elem resultant(const TowerNode& L, const Poly& a, const Poly& b);
Poly lift(const TowerNode& from, const TowerNode& to, const Poly& a);
bool eq(const TowerNode& L, const Poly& a, const Poly& b);
int cmp(const TowerNode& L, const Poly& a, const Poly& b);  // degree first, then coefficients
bool is_squarefree(const TowerNode& L, const Poly& a);
std::string str(const TowerNode& L, const Poly& a, const std::string& var);
}  // namespace upoly

// Element of a tower with value semantics.  Binary operations embed into the
// larger of the two towers when one extends the other.
class FieldElement {
 public:
  FieldElement() : tower_(rational_field()), e_(fld::zero(*tower_)) {}
  FieldElement(Tower t, Elem e) : tower_(std::move(t)), e_(std::move(e)) {}
  FieldElement(Tower t, const mpq_class& q) : tower_(std::move(t)), e_(fld::from_q(*tower_, q)) {}
  static FieldElement generator(const Tower& t) { return {t, fld::gen(*t)}; }

  const Tower& tower() const { return tower_; }
  const Elem& raw() const { return e_; }
  bool is_zero() const { return fld::is_zero(*tower_, e_); }
  bool is_one() const { return fld::is_one(*tower_, e_); }
  std::optional<mpq_class> rational() const { return fld::as_rational(*tower_, e_); }
  FieldElement in(const Tower& bigger) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  std::string str() const { return fld::str(*tower_, e_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {tower_, fld::neg(*tower_, e_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Tower tower_;
  Elem e_;
};

// univariate polynomial with its tower
class UPoly {
 public:
  UPoly() : tower_(rational_field()) {}
  UPoly(Tower t, Poly c) : tower_(std::move(t)), c_(std::move(c)) { upoly::trim(*tower_, c_); }
  static UPoly from_rationals(const Tower& t, const std::vector<mpq_class>& coeffs);

  const Tower& tower() const { return tower_; }
  const Poly& coeffs() const { return c_; }
  int degree() const { return upoly::deg(c_); }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int k) const;
  FieldElement lc() const { return coeff(degree()); }
  FieldElement operator()(const FieldElement& x) const;
  UPoly in(const Tower& bigger) const;
  UPoly monic() const { return {tower_, upoly::monic(*tower_, c_)}; }
  UPoly derivative() const { return {tower_, upoly::deriv(*tower_, c_)}; }
  std::string str(const std::string& var = "z") const { return upoly::str(*tower_, c_, var); }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  Tower tower_;
  Poly c_;
};

UPoly poly_gcd(const UPoly& a, const UPoly& b);
// Sylvester resultant over the coefficient field
FieldElement resultant(const UPoly& a, const UPoly& b);
// one tower per irreducible factor; degree-one factors give the base tower back
std::vector<Tower> tower_extend(const Tower& t, const UPoly& minpoly);

}  // namespace jd
