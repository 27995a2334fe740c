#pragma once

#include <gmpxx.h>

#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/mpoly.hpp"

namespace jd {

// Distinct monic irreducible factors of a nonzero univariate polynomial, in
// canonical order (degree, then coefficient sequence).  Multiplicities are
// dropped.
std::vector<UPoly> factor_univariate(const UPoly& f);

// Distinct irreducible factors of a polynomial in at most two variables over
// a tower without transcendental levels below the coefficients' top level.
// Constant factors are dropped; factors are unit-normalized and sorted.
std::vector<MPoly> irred_factors(const MPoly& p);

// integer polynomial factorization (Zassenhaus); input primitive and squarefree
std::vector<std::vector<mpz_class>> factor_integer_squarefree(const std::vector<mpz_class>& f);

struct SolutionPoint {
  Tower tower;
  std::vector<FieldElement> coords;
};

// Points of a zero-dimensional ideal in one or two variables, one per maximal
// ideal.  Throws std::domain_error("not zero-dimensional") otherwise.
std::vector<SolutionPoint> zero_set(const std::vector<MPoly>& gens);
std::vector<SolutionPoint> zero_set(const std::vector<UPoly>& gens);

}  // namespace jd
