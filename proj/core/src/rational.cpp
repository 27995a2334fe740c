#include "jungdesing/rational.hpp"

namespace jd {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  __int128 l = __int128(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX) throw std::overflow_error("lcm overflow");
  return static_cast<std::int64_t>(l);
}

Mon mon_from(const std::vector<Q>& v) {
  if (v.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Mon m;
  for (size_t i = 0; i < v.size(); ++i) m[static_cast<int>(i)] = v[i];
  return m;
}

std::vector<Q> mon_to_vec(const Mon& m, int n) { return {m.e.begin(), m.e.begin() + n}; }

std::string mon_str(const Mon& m, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += m[i].str();
  }
  return s + ")";
}

}  // namespace jd
