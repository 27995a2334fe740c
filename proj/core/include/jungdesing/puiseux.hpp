#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/fracpoly.hpp"
#include "jungdesing/lattice.hpp"
#include "jungdesing/series.hpp"

namespace jd {

// One Duval step: the slope, its denominator b over the current lattice with
// b*slope = sum c_i m_i, the Bezout vector u*b + sum v_i c_i = 1, and the
// chosen nonzero root of the reduced edge polynomial.
struct DuvalStep {
  Mon slope;
  std::int64_t b = 1;
  IntVec c;
  std::int64_t u = 0;
  IntVec v;
  UPoly edge;     // reduced edge polynomial in T = z^b
  UPoly minpoly;  // of the root over the field the step started from
  FieldElement root;
};

struct Parametrization {
  LatticeHom sigma;  // on the base lattice
  Series alpha;      // root of sigma(f)
  Lattice lattice;   // exponent lattice of alpha, contains the base
  Tower tower;
  std::optional<Mon> order;  // nullopt for alpha = 0
  std::vector<DuvalStep> steps;
};

struct ParamSet {
  SeriesPoly f;
  Lattice base;
  std::vector<Parametrization> params;
  std::vector<long> field_degrees;             // [E_i : E_0]
  std::vector<std::int64_t> lattice_indices;   // #(Gamma_i / Gamma_0)
  long total() const;
};

// Rational parametrizations of f of order above `lower`.  f has coefficients
// in the given lattice; lazy coefficients are expanded until the Newton
// polygon is certified (PrecisionError at the cap).
std::vector<Parametrization> param_rec(const SeriesPoly& f, const Lattice& base, const Mon& lower);

// Complete set for a quasi-ordinary polynomial; throws std::invalid_argument
// when f is not monic or not quasi-ordinary.
ParamSet param(const ZPoly& f);
// same for lazy coefficients, which are trusted to be quasi-ordinary
ParamSet param(const SeriesPoly& f, const Lattice& base);

struct ParamReport {
  bool ok = true;
  std::string message;
  std::optional<size_t> index;
};

// residuals below total degree `order`, the degree identity, and distinct
// (order, initial term) pairs
ParamReport verify_param_set(const ParamSet& ps, const Q& order);

}  // namespace jd
