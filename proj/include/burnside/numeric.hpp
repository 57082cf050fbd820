#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace burnside {

// Exact arithmetic only: coefficients are arbitrary-precision rationals kept
// in canonical form (gcd 1, positive denominator) by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Inverse of rat_to_string; rejects anything that is not canonical.
Rat rat_from_string(const std::string& s);

bool is_prime(int p);
std::vector<int> prime_divisors(int n);
bool is_squarefree(int n);

}  // namespace burnside
