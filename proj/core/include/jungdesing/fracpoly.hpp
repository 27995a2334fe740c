#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/lattice.hpp"
#include "jungdesing/mpoly.hpp"
#include "jungdesing/rational.hpp"

namespace jd {

// Raised when truncated coefficients do not determine an answer; callers
// retry with more precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial with rational exponents over a tower.  Terms are stored in the
// graded order, so the first term is the initial term.
class FracPoly {
 public:
  using Terms = std::map<Mon, Elem, GradedLess>;

  FracPoly() : tower_(rational_field()) {}
  FracPoly(Tower t, int nvars) : tower_(std::move(t)), nvars_(nvars) {}
  static FracPoly constant(const Tower& t, int nvars, const Elem& c);
  static FracPoly constant(const Tower& t, int nvars, const mpq_class& c);
  static FracPoly monomial(const Tower& t, int nvars, const Mon& m, const Elem& c);
  static FracPoly variable(const Tower& t, int nvars, int var);
  static FracPoly from_mpoly(const MPoly& p);

  const Tower& tower() const { return tower_; }
  const TowerNode& level() const { return *tower_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t size() const { return terms_.size(); }
  Elem coeff(const Mon& m) const;
  void add_term(const Mon& m, const Elem& c);  // accumulates

  // graded-least exponent; throws std::domain_error on zero
  const Mon& order() const;
  std::pair<Mon, FieldElement> initial_term() const;
  Q total_order() const { return order().degree(); }
  Q max_degree() const;
  Lattice lattice() const;
  bool integral() const;

  // terms of total degree < bound
  FracPoly truncated(const Q& bound) const;
  FracPoly in(const Tower& bigger) const;
  FracPoly scaled(const Elem& c) const;
  FracPoly times_monomial(const Mon& m) const;
  FracPoly pow(int e) const;
  FracPoly apply(const LatticeHom& s) const;
  // exponent m goes to (form_1(m), ..., form_k(m))
  FracPoly map_exponents(const std::vector<IntVec>& forms) const;
  // requires integral exponents
  MPoly to_mpoly() const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

  friend FracPoly operator+(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator-(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  FracPoly operator-() const;
  friend bool operator==(const FracPoly& a, const FracPoly& b);

 private:
  Tower tower_;
  int nvars_ = 0;
  Terms terms_;
};

FracPoly mul_trunc(const FracPoly& a, const FracPoly& b, const Q& bound);
FracPoly pow_trunc(const FracPoly& a, int e, const Q& bound);
std::vector<std::string> default_names(int n);
std::string exponent_monomial_str(const Mon& m, const std::vector<std::string>& names, int n);

// Polynomial in z whose coefficients are FracPolys over one tower.
class ZPoly {
 public:
  ZPoly() : tower_(rational_field()) {}
  ZPoly(Tower t, int nvars) : tower_(std::move(t)), nvars_(nvars) {}
  ZPoly(int nvars, std::vector<FracPoly> coeffs);
  // z is the last variable of p
  static ZPoly from_mpoly(const MPoly& p);

  const Tower& tower() const { return tower_; }
  int nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  FracPoly coeff(int i) const;  // zero outside the range
  const std::vector<FracPoly>& coeffs() const { return c_; }
  int low_degree() const;  // ord_z
  bool integral() const;
  Lattice lattice() const;

  ZPoly truncated(const Q& bound) const;
  ZPoly in(const Tower& bigger) const;
  ZPoly apply(const LatticeHom& s) const;
  ZPoly map_exponents(const std::vector<IntVec>& forms) const;
  // value at z = a with terms of degree >= bound dropped
  FracPoly eval_trunc(const FracPoly& a, const Q& bound) const;
  FracPoly eval(const FracPoly& a) const;
  MPoly to_mpoly() const;

  std::string str(const std::vector<std::string>& names, const std::string& zname = "z") const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b);

 private:
  Tower tower_;
  int nvars_ = 0;
  std::vector<FracPoly> c_;
  void trim();
};

// f(z + a)
ZPoly shift(const ZPoly& f, const FracPoly& a);
// f(z + a) with coefficient terms of degree >= bound dropped
ZPoly shift_trunc(const ZPoly& f, const FracPoly& a, const Q& bound);

struct EdgeData {
  Mon slope;
  Mon value;  // least value of m + i*slope over the support
  ZPoly poly;
  int low() const { return poly.low_degree(); }
  int high() const { return poly.degree(); }
  size_t size() const;
};

EdgeData edge_equation(const ZPoly& g, const Mon& slope);
// Same, for coefficients known only below total degree `known`: coefficient
// i may hide terms of degree >= known.  Throws PrecisionError when hidden
// terms could reach the edge.
EdgeData edge_equation(const ZPoly& g, const Mon& slope, const Q& known);

// Slopes with nonnegative entries, strictly above `lower` in the graded
// order, whose edge has at least two terms; sorted increasingly.
std::vector<Mon> nontrivial_slopes(const ZPoly& g, const Mon& lower);
// every slope of the lower hull, with no filtering
std::vector<Mon> hull_slopes(const ZPoly& g);

struct QuasiOrdinaryData {
  bool quasi_ordinary = false;
  MPoly discriminant;
  std::vector<int> exponents;  // monomial part of the discriminant
};
// f monic with integral exponents; throws std::invalid_argument otherwise
QuasiOrdinaryData is_quasi_ordinary(const ZPoly& f);

}  // namespace jd
