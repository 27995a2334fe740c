#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jungdesing/mpoly.hpp"
#include "jungdesing/puiseux.hpp"
#include "jungdesing/series.hpp"

namespace jd {

// A valuation given by a map into F((t)), F of transcendence degree one
// (generator "s").  Images are series in one variable t.  For local runs
// the named coordinates are u, v, w of the input chart; desing_global adds
// x0..x3.
struct FormalPrimeDivisor {
  Tower tower;
  std::vector<std::string> names;
  std::vector<Series> images;
  // images of u, v, w in the chart where the divisor was found
  std::vector<Series> local;
  // substitutions from the input chart down to that chart, outermost first
  std::vector<std::string> chain;
  std::string origin;  // "curve e" or "crossing n_i,n_i+1"
  int chart = 0;       // 1..3 from desing_global, 0 for local runs

  const Series& image(const std::string& name) const;
};

struct DivisorInvariants {
  std::vector<Q> orders;  // ord_t of the u, v, w images
  long degree = 1;        // [F : Q(s)]
  friend bool operator==(const DivisorInvariants&, const DivisorInvariants&) = default;
};

// Chart equations are polynomials in u, v, w (variables 0, 1, 2), monic in w.
// Discriminant factors and focus generators are polynomials in u, v.
std::vector<FormalPrimeDivisor> desing_global(const MPoly& F);
std::vector<FormalPrimeDivisor> desing_local(const MPoly& f, const std::vector<MPoly>& focus);
std::vector<FormalPrimeDivisor> desing_recursive(const MPoly& f, const std::vector<MPoly>& factors);
bool is_normal_crossing(const std::vector<MPoly>& factors);
std::vector<FormalPrimeDivisor> divisors_above_curve(const MPoly& f, const MPoly& e);
std::vector<FormalPrimeDivisor> divisors_above_crossing(const MPoly& f, const std::vector<MPoly>& factors);

DivisorInvariants divisor_invariants(const FormalPrimeDivisor& d);

// squarefree discriminant of f in w as a polynomial in u, v, and its
// irreducible factors
struct DiscriminantFactors {
  MPoly d;
  std::vector<MPoly> factors;
};
DiscriminantFactors discriminant_factors(const MPoly& f);

// linear change of coordinates chosen by desing_global: x = M x'
std::vector<std::vector<mpq_class>> choose_automorphism(const MPoly& F);

// f(images) truncated below t^order; zero for a valid divisor
FracPoly divisor_residual(const MPoly& f, const FormalPrimeDivisor& d, const Q& order);

std::string divisor_str(const FormalPrimeDivisor& d, const Q& order);

}  // namespace jd
