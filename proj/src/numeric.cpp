#include "burnside/numeric.hpp"

#include <stdexcept>

namespace burnside {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  size_t i = (s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (size_t k = i; k < s.size(); ++k) {
    if (s[k] >= '0' && s[k] <= '9') {
      seen_digit = true;
    } else if (s[k] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("rational: malformed '" + s + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("rational: malformed '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rational: malformed '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  Rat canon = r;
  canon.canonicalize();
  if (canon != r || rat_to_string(canon) != s)
    throw std::invalid_argument("rational: not canonical '" + s + "'");
  return canon;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_squarefree(int n) {
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return false;
    }
  }
  return true;
}

}  // namespace burnside
