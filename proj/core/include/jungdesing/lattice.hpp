#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/rational.hpp"

namespace jd {

using IntVec = std::vector<std::int64_t>;

// Full rational lattice containing Z^n.  The basis is kept in canonical form:
// rows of the Hermite normal form of the basis scaled by the common
// denominator, divided back.
class Lattice {
 public:
  Lattice() = default;
  static Lattice standard(int n);
  // throws std::invalid_argument when the rows are dependent or miss Z^n
  static Lattice from_rows(const std::vector<Mon>& rows, int n);
  // parses "0,1/2;1/3,1/6"
  static Lattice parse(const std::string& text);

  int dim() const { return n_; }
  const std::vector<Mon>& basis() const { return rows_; }
  // integer coordinates of m with respect to the basis, if m lies in the lattice
  std::optional<IntVec> coords(const Mon& m) const;
  // rational coordinates (always defined)
  std::vector<Q> rational_coords(const Mon& m) const;
  bool contains(const Mon& m) const { return coords(m).has_value(); }
  bool contains(const Lattice& sub) const;
  Q det() const;  // positive
  std::string str() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::vector<Mon> rows_;
};

Lattice lattice_join(const Lattice& g, const Mon& m);
Lattice lattice_join(const Lattice& a, const Lattice& b);
// #(big / small); throws when small is not contained in big
std::int64_t lattice_index(const Lattice& big, const Lattice& small);
// the smallest lattice containing Z^n and the given exponents
Lattice lattice_of_support(const std::vector<Mon>& support, int n);

struct BezoutData {
  std::int64_t b = 1;
  IntVec c;
  std::int64_t u = 0;
  IntVec v;
};

// least b >= 1 with b*m in g, plus the coordinates of b*m
BezoutData minimal_denominator(const Lattice& g, const Mon& m);
// u*b + sum v_i c_i = 1; the shortest such vector, ties broken lexicographically
std::pair<std::int64_t, IntVec> bezout_vector(std::int64_t b, const IntVec& c);

// Hilbert basis of the dual cone of a 2-dimensional lattice, ordered from the
// second axis to the first.
std::vector<IntVec> dual_cone_generators(const Lattice& g);

std::strong_ordering order_compare(const Mon& a, const Mon& b);
// value of an integer linear form on an exponent
Q form_value(const IntVec& form, const Mon& m);

// Homomorphism from a lattice into the unit group of a field, stored by its
// values on the basis rows.
class LatticeHom {
 public:
  LatticeHom() = default;
  LatticeHom(Lattice domain, Tower tower, std::vector<Elem> values);
  static LatticeHom identity(const Lattice& domain, const Tower& tower);

  const Lattice& domain() const { return domain_; }
  const Tower& tower() const { return tower_; }
  const std::vector<Elem>& values() const { return values_; }
  // throws std::domain_error when m is outside the domain
  Elem evaluate(const Mon& m) const;
  FieldElement operator()(const Mon& m) const { return {tower_, evaluate(m)}; }
  bool is_identity() const;
  LatticeHom in(const Tower& bigger) const;
  LatticeHom restrict_to(const Lattice& sub) const;
  LatticeHom inverse() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  Lattice domain_;
  Tower tower_;
  std::vector<Elem> values_;
};

// pointwise product restricted to the domain of `inner` (which must be
// contained in the domain of `outer`)
LatticeHom hom_compose(const LatticeHom& outer, const LatticeHom& inner);
// an extension to a larger lattice; takes roots of values, extending the tower
// by the least irreducible factor when a root is missing
LatticeHom hom_extend(const LatticeHom& s, const Lattice& bigger);

}  // namespace jd
