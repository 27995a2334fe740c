#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/rational.hpp"

namespace jd {

struct IMon {
  std::array<std::int32_t, kMaxVars> e{};
  std::int32_t& operator[](int i) { return e[i]; }
  std::int32_t operator[](int i) const { return e[i]; }
  int degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  friend auto operator<=>(const IMon&, const IMon&) = default;
};

// Sparse multivariate polynomial with integer exponents over a tower.  Terms
// are kept in lexicographic order (first variable most significant), so the
// last entry of the map is the lex-leading term.
class MPoly {
 public:
  using Terms = std::map<IMon, Elem>;

  MPoly() : tower_(rational_field()) {}
  MPoly(Tower t, int nvars) : tower_(std::move(t)), nvars_(nvars) {}
  static MPoly constant(const Tower& t, int nvars, const Elem& c);
  static MPoly constant(const Tower& t, int nvars, const mpq_class& c);
  static MPoly variable(const Tower& t, int nvars, int var);
  static MPoly monomial(const Tower& t, int nvars, const IMon& m, const Elem& c);

  const Tower& tower() const { return tower_; }
  const TowerNode& level() const { return *tower_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t size() const { return terms_.size(); }
  Elem coeff(const IMon& m) const;
  // lex-leading term
  const std::pair<const IMon, Elem>& lead() const { return *terms_.rbegin(); }

  void add_term(const IMon& m, const Elem& c);  // accumulates
  int degree(int var) const;                    // -1 for zero
  int total_degree() const;
  int ord_at_origin() const;                    // least total degree of a term
  bool depends_on(int var) const { return degree(var) > 0; }

  // coefficients as polynomials in the remaining variables (var set to zero exponent)
  std::vector<MPoly> coeffs_in(int var) const;
  static MPoly from_coeffs(int var, const std::vector<MPoly>& cs, const Tower& t, int nvars);

  MPoly derivative(int var) const;
  MPoly eval_var(int var, const Elem& value) const;  // value in this tower
  // substitute images for all variables; images share a tower extending this one
  MPoly subst(const std::vector<MPoly>& images) const;
  MPoly in(const Tower& bigger) const;
  MPoly scaled(const Elem& c) const;
  MPoly pow(int e) const;
  // polynomial in one variable when only `var` occurs
  Poly to_poly(int var) const;
  static MPoly from_poly(const Tower& t, int nvars, int var, const Poly& p);
  Elem eval(const std::vector<Elem>& point) const;

  std::string str(const std::vector<std::string>& names) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  Tower tower_;
  int nvars_ = 0;
  Terms terms_;
};

// exact quotient; throws std::domain_error when b does not divide a
MPoly divexact(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a, MPoly* quotient = nullptr);
MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var);
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);
MPoly content_in(const MPoly& a, int var);  // gcd of coefficients w.r.t. var
MPoly primitive_part(const MPoly& a, int var);
MPoly resultant(const MPoly& a, const MPoly& b, int var);
// (-1)^{d(d-1)/2} res(f, f') / lc(f)
MPoly discriminant(const MPoly& f, int var);
MPoly squarefree_part(const MPoly& p);
// unit normalization: over Q a primitive integer polynomial with positive
// lex-leading coefficient, over larger towers lex-monic
MPoly normalize_unit(const MPoly& p);
// total order used for canonical factor lists
int mpoly_cmp(const MPoly& a, const MPoly& b);

}  // namespace jd
