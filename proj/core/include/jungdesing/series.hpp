#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jungdesing/fracpoly.hpp"
#include "jungdesing/lattice.hpp"
#include "jungdesing/mpoly.hpp"

namespace jd {

class SeriesNode;

enum class SeriesKind { Polynomial, Root, Substitution, Twist };

// Handle to a lazily expanded fractional power series.  Nodes are immutable
// apart from a monotone expansion cache, and handles share nodes.
class Series {
 public:
  Series();  // the zero series over Q in no variables
  explicit Series(std::shared_ptr<SeriesNode> node) : node_(std::move(node)) {}

  const Tower& tower() const;
  int nvars() const;
  const Lattice& lattice() const;
  SeriesKind kind() const;
  // all terms of total degree < bound
  FracPoly expand(const Q& bound) const;
  // true when the whole series is known as a polynomial
  bool is_complete() const;
  std::optional<FracPoly> polynomial() const;
  // total degree of the lowest term; nullopt for a complete zero series.
  // Throws PrecisionError when no term shows up below the precision cap.
  std::optional<Q> order() const;
  std::string str(const Q& bound, const std::vector<std::string>& names) const;
  std::string str(const Q& bound) const;
  const SeriesNode* id() const { return node_.get(); }
  const std::shared_ptr<SeriesNode>& node() const { return node_; }

 private:
  std::shared_ptr<SeriesNode> node_;
};

// Polynomial in z with series coefficients.
class SeriesPoly {
 public:
  SeriesPoly() = default;
  SeriesPoly(int nvars, std::vector<Series> coeffs);
  explicit SeriesPoly(const ZPoly& f);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int nvars() const { return nvars_; }
  const Tower& tower() const { return tower_; }
  const std::vector<Series>& coeffs() const { return c_; }
  const Series& coeff(int i) const { return c_.at(i); }
  bool is_exact() const;
  ZPoly exact() const;  // requires is_exact()
  ZPoly truncated(const Q& bound) const;
  SeriesPoly apply(const LatticeHom& s) const;
  Lattice lattice() const;

 private:
  Tower tower_ = rational_field();
  int nvars_ = 0;
  std::vector<Series> c_;
};

// escalation cap for precision searches (total degree), default 128
void set_precision_cap(const Q& cap);
Q precision_cap();

Series series_polynomial(const FracPoly& p);
Series series_constant(const Tower& t, int nvars, const Elem& c);
Series series_variable(const Tower& t, int nvars, int var);

// The unique root of f with initial segment a0.  Throws
// std::invalid_argument("ambiguous root") when a0 does not separate a root.
Series series_new(const FracPoly& a0, const SeriesPoly& f);
Series series_new(const FracPoly& a0, const ZPoly& f);

// Image of src under x^m -> prod xi_i^{form_i(m)}.  Forms must be integral on
// the lattice of src; negative values are allowed only for monomial xi.  Unless
// src is a polynomial, the contraction constant must be positive
// (std::invalid_argument("non-contractive substitution") otherwise).
Series evaluate_new(const Series& src, const std::vector<IntVec>& forms, const std::vector<Series>& xi);

// series_new(0, g) after checking g(0) = 0 and dg/dz(0) != 0
Series implicit_function(const SeriesPoly& g);
Series implicit_function(const ZPoly& g);

// sigma extended to the lattice of a when needed (the tower may grow)
Series apply_hom(const LatticeHom& s, const Series& a);
// exponent m -> (row_1(m), ..., row_k(m))
Series rescale_exponents(const Series& a, const std::vector<IntVec>& rows);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator-(const Series& a);
// a polynomial in the given series (one per variable of p)
Series compose(const FracPoly& p, const std::vector<Series>& args);

// A squarefree polynomial in x_1..x_n, z (z last, integer exponents)
// vanishing at z = a.  Built by resultant elimination; can be expensive.
MPoly defining_polynomial(const Series& a);
bool is_zero(const Series& a);

// bookkeeping exposed for tests and diagnostics
struct SeriesInfo {
  SeriesKind kind;
  FracPoly initial;           // roots: the initial segment
  SeriesPoly equation;        // roots: f
  Mon shift_order;            // roots: order of the linear coefficient after the shift
  Q contraction;              // substitutions: least component of the order vector
  bool contraction_finite = true;
  std::vector<Q> order_vector;  // substitutions
  std::vector<IntVec> forms;
  std::vector<Series> children;
};
SeriesInfo series_info(const Series& a);

}  // namespace jd
