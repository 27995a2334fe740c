#include "jungdesing/parse.hpp"

#include <cctype>

namespace jd {

SyntaxError::SyntaxError(const std::string& what, int line, int column)
    : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars, const Tower& t) : s_(s), vars_(vars), t_(t) {}

  FracPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty input");
    FracPoly r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& vars_;
  Tower t_;
  size_t pos_ = 0;
  int n() const { return static_cast<int>(vars_.size()); }

  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n')
        ++line, col = 1;
      else
        ++col;
    }
    throw SyntaxError(what, line, col);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FracPoly sum() {
    FracPoly r(t_, n());
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      FracPoly p = product();
      r = neg ? r - p : r + p;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return r;
  }

  FracPoly product() {
    FracPoly r = power();
    for (;;) {
      skip();
      if (eat('*')) {
        r = r * power();
      } else if (eat('/')) {
        mpq_class d = number_value();
        if (d == 0) fail("division by zero");
        r = r.scaled(fld::from_q(*t_, 1 / d));
      } else {
        break;
      }
    }
    return r;
  }

  mpq_class number_value() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpq_class(s_.substr(start, pos_ - start));
  }

  Q exponent() {
    skip();
    if (eat('(')) {
      bool neg = eat('-');
      mpq_class a = number_value();
      mpq_class b = 1;
      if (eat('/')) b = number_value();
      if (!eat(')')) fail("expected ')'");
      if (b == 0) fail("zero denominator");
      if (!a.get_num().fits_slong_p() || !b.get_num().fits_slong_p()) fail("exponent too large");
      Q q(a.get_num().get_si(), b.get_num().get_si());
      return neg ? -q : q;
    }
    mpq_class a = number_value();
    if (!a.get_num().fits_slong_p() || a > 1000000) fail("exponent too large");
    return Q(a.get_num().get_si());
  }

  FracPoly power() {
    skip();
    size_t at = pos_;
    auto [base, is_var] = atom();
    if (!eat('^')) return base;
    size_t epos = pos_;
    Q e = exponent();
    if (e.is_integer() && e.sign() >= 0) return base.pow(static_cast<int>(e.num()));
    if (!is_var) {
      pos_ = epos;
      fail("fractional or negative exponent on a non-variable");
    }
    (void)at;
    auto [m, c] = base.initial_term();
    return FracPoly::monomial(t_, n(), e * m, c.raw());
  }

  std::pair<FracPoly, bool> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FracPoly r = sum();
      if (!eat(')')) fail("expected ')'");
      return {r, false};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return {FracPoly::constant(t_, n(), number_value()), false};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < n(); ++i)
        if (vars_[i] == name) return {FracPoly::variable(t_, n(), i), true};
      for (const TowerNode* l = t_.get(); l; l = l->parent.get())
        if (l->kind != LevelKind::Rational && l->name == name) {
          Elem g = fld::lift(*l, *t_, fld::gen(*l));
          return {FracPoly::constant(t_, n(), g), false};
        }
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

FracPoly parse_fracpoly(const std::string& text, const std::vector<std::string>& vars, const Tower& tower) {
  if (static_cast<int>(vars.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  return Parser(text, vars, tower).run();
}

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Tower& tower) {
  FracPoly p = parse_fracpoly(text, vars, tower);
  if (!p.integral()) throw SyntaxError("exponents must be nonnegative integers", 1, 1);
  return p.to_mpoly();
}

}  // namespace jd
