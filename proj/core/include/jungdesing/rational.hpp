#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jd {

// Small exact rational used for exponents and slopes.  Arithmetic is checked
// and throws std::overflow_error instead of wrapping.
class Q {
 public:
  constexpr Q() = default;
  constexpr Q(std::int64_t n) : num_(n) {}  // NOLINT implicit on purpose
  Q(std::int64_t n, std::int64_t d) { set(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Q operator+(const Q& a, const Q& b) {
    if (a.den_ == 1 && b.den_ == 1) return from128(__int128(a.num_) + b.num_, 1);
    return from128(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
  }
  friend Q operator-(const Q& a, const Q& b) { return a + (-b); }
  friend Q operator*(const Q& a, const Q& b) {
    return from128(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Q operator/(const Q& a, const Q& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero exponent");
    return from128(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  Q operator-() const {
    Q r;
    if (num_ == INT64_MIN) throw std::overflow_error("exponent overflow");
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Q& operator+=(const Q& o) { return *this = *this + o; }
  Q& operator-=(const Q& o) { return *this = *this - o; }
  Q& operator*=(const Q& o) { return *this = *this * o; }

  friend bool operator==(const Q& a, const Q& b) = default;
  friend std::strong_ordering operator<=>(const Q& a, const Q& b) {
    __int128 l = __int128(a.num_) * b.den_, r = __int128(b.num_) * a.den_;
    return l <=> r;
  }

  // floor and ceiling as integers
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const { return -(-*this).floor(); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  void set(std::int64_t n, std::int64_t d) { *this = from128(n, d); }
  static Q from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) n = -n, d = -d;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw std::overflow_error("exponent overflow");
    Q r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

inline Q abs(const Q& a) { return a.sign() < 0 ? -a : a; }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

constexpr int kMaxVars = 6;

// Exponent vector.  Unused trailing entries stay zero, so comparisons never need
// to know the ambient dimension.
struct Mon {
  std::array<Q, kMaxVars> e{};

  Q& operator[](int i) { return e[i]; }
  const Q& operator[](int i) const { return e[i]; }
  Q degree() const {
    Q s;
    for (const auto& x : e) s += x;
    return s;
  }
  bool nonneg() const {
    for (const auto& x : e)
      if (x.sign() < 0) return false;
    return true;
  }
  bool integral() const {
    for (const auto& x : e)
      if (!x.is_integer()) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : e)
      if (!x.is_zero()) return false;
    return true;
  }
  friend Mon operator+(const Mon& a, const Mon& b) {
    Mon r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Mon operator-(const Mon& a, const Mon& b) {
    Mon r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend Mon operator*(const Q& k, const Mon& a) {
    Mon r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = k * a.e[i];
    return r;
  }
  friend bool operator==(const Mon&, const Mon&) = default;
};

// The graded order: total degree first, ties broken lexicographically with
// the first variable having priority (smaller first coordinate is smaller).
inline std::strong_ordering graded_compare(const Mon& a, const Mon& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < kMaxVars; ++i)
    if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

struct GradedLess {
  bool operator()(const Mon& a, const Mon& b) const { return graded_compare(a, b) < 0; }
};

Mon mon_from(const std::vector<Q>& v);
std::vector<Q> mon_to_vec(const Mon& m, int n);
std::string mon_str(const Mon& m, int n);

}  // namespace jd
