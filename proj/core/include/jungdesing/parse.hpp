#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jungdesing/field.hpp"
#include "jungdesing/fracpoly.hpp"
#include "jungdesing/mpoly.hpp"

namespace jd {

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Grammar: sums and products of rationals p/q, variables and generators of
// the tower, `^` with an integer exponent (or a parenthesised rational one
// on a variable, fractional polynomials only), parentheses, and `+ - *`.
FracPoly parse_fracpoly(const std::string& text, const std::vector<std::string>& vars,
                        const Tower& tower = rational_field());
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Tower& tower = rational_field());

}  // namespace jd
